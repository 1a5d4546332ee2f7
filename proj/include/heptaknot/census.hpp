#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "heptaknot/alexander.hpp"
#include "heptaknot/polygon.hpp"
#include "heptaknot/radon.hpp"

namespace heptaknot {

// Straight-line drawing of the complete graph K_n, n = 6 or 7, fixed by
// its vertex positions.
struct LinearEmbedding {
  int n = 0;
  std::vector<Point3> points;
};

void validate_embedding(const LinearEmbedding& e);

// All (n-1)!/2 undirected Hamiltonian cycles of K_n in canonical form
// (vertex 0 first, lexicographically smaller direction), sorted
// lexicographically: 60 cycles for n = 6, 360 for n = 7.
std::vector<std::vector<int>> enumerate_cycles(int n);

struct CensusReport {
  int n = 0;
  std::string fingerprint;
  std::vector<KnotClass> cycle_classes;  // aligned with enumerate_cycles(n)
  int unknot_count = 0;
  int trefoil_count = 0;
  int figure8_count = 0;

  // Number of cycles whose knot type has stick number n: figure-8 count
  // for n = 7, trefoil count for n = 6.
  int stick_knot_count() const {
    return n == 7 ? figure8_count : trefoil_count;
  }
};

// Classifies every Hamiltonian cycle with the projection/determinant
// oracle and, for n = 7, independently with the sign-table classifier.
// The two verdicts must agree on figure-8 for every single cycle; any
// mismatch raises AgreementError carrying a JSON repro case.
CensusReport census(const LinearEmbedding& e, int jobs = 1);

// Seeded integer points in [0, 2^20)^3, resampled until the set is in
// general position. Identical seeds reproduce identical embeddings.
LinearEmbedding sample_embedding(int n, std::uint64_t seed);

struct MaxSearchResult {
  int best_c = -1;
  std::string best_fingerprint;
  std::uint64_t best_seed = 0;
  std::map<int, int> histogram;  // c(f) value -> number of embeddings
};

// Empirical lower bound for the maximal stick-knot count over linear
// embeddings: censuses `count` embeddings sampled with seeds
// base_seed, base_seed+1, ... and keeps the running maximum (first
// embedding attaining it wins).
MaxSearchResult max_search(int n, int count, std::uint64_t base_seed,
                           int jobs = 1);

}  // namespace heptaknot
