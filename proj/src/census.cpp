#include "heptaknot/census.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <thread>

#include "heptaknot/errors.hpp"
#include "heptaknot/json_io.hpp"
#include "heptaknot/rng.hpp"

namespace heptaknot {

namespace {

constexpr std::uint64_t kCoordinateMask = (1ull << 20) - 1;
constexpr int kMaxSampleAttempts = 1000000;

void require_census_size(int n) {
  if (n != 6 && n != 7) {
    fail(ErrorCode::unsupported_size, "census supports only 6 or 7 vertices");
  }
}

int clamp_jobs(int jobs) {
  if (jobs <= 1) return 1;
  return std::min(jobs, 64);
}

// Runs fn(i) for i in [0, count) over the given number of worker tasks
// and returns results in index order regardless of scheduling.
template <typename Fn>
auto run_indexed(int count, int jobs, Fn fn)
    -> std::vector<decltype(fn(0))> {
  using R = decltype(fn(0));
  std::vector<R> results(count);
  jobs = clamp_jobs(std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::vector<std::future<void>> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    const int begin = static_cast<int>(static_cast<long long>(count) * w / jobs);
    const int end =
        static_cast<int>(static_cast<long long>(count) * (w + 1) / jobs);
    workers.push_back(std::async(std::launch::async, [&, begin, end] {
      for (int i = begin; i < end; ++i) results[i] = fn(i);
    }));
  }
  for (auto& f : workers) f.get();
  return results;
}

std::string repro_case_json(const LinearEmbedding& e,
                            const std::vector<int>& cycle, KnotClass oracle,
                            bool radon_figure8) {
  Json repro;
  repro["points"] = points_to_json(e.points)["points"];
  repro["cycle"] = cycle;
  repro["oracle_class"] = knot_class_name(oracle);
  repro["radon_class"] = radon_figure8 ? "Figure8" : "NotFigure8";
  return repro.dump();
}

}  // namespace

void validate_embedding(const LinearEmbedding& e) {
  require_census_size(e.n);
  if (static_cast<int>(e.points.size()) != e.n) {
    fail(ErrorCode::validation, "embedding point count does not match n");
  }
  if (auto violation = general_position_violation(e.points)) {
    const auto& v = *violation;
    fail(ErrorCode::validation,
         "embedding not in general position: coplanar 4-subset {" +
             std::to_string(v[0]) + ", " + std::to_string(v[1]) + ", " +
             std::to_string(v[2]) + ", " + std::to_string(v[3]) + "}");
  }
}

std::vector<std::vector<int>> enumerate_cycles(int n) {
  require_census_size(n);
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<std::vector<int>> cycles;
  do {
    if (rest.front() < rest.back()) {
      std::vector<int> cycle;
      cycle.reserve(n);
      cycle.push_back(0);
      cycle.insert(cycle.end(), rest.begin(), rest.end());
      cycles.push_back(std::move(cycle));
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return cycles;
}

CensusReport census(const LinearEmbedding& e, int jobs) {
  validate_embedding(e);
  const auto cycles = enumerate_cycles(e.n);

  // One sign cache per embedding: all cycles draw their penetration
  // signs from the same point set. Filling it up front keeps the
  // parallel phase read-only.
  PenetrationCache cache(e.points);
  if (e.n == 7) cache.fill_disjoint();

  auto classify_one = [&](int index) -> KnotClass {
    const auto& cycle = cycles[index];
    Polygon poly;
    poly.vertices.reserve(e.n);
    for (int v : cycle) poly.vertices.push_back(e.points[v]);
    const KnotClass oracle = classify_knot_prevalidated(poly, 0);
    if (e.n == 7) {
      const bool radon_figure8 =
          classify_cycle_by_radon(cache, cycle).has_value();
      if (radon_figure8 != (oracle == KnotClass::figure8)) {
        throw AgreementError(
            "sign-table and invariant classifiers disagree on a cycle",
            repro_case_json(e, cycle, oracle, radon_figure8));
      }
    }
    return oracle;
  };

  CensusReport report;
  report.n = e.n;
  report.fingerprint = fingerprint_hex(e.points);
  report.cycle_classes =
      run_indexed(static_cast<int>(cycles.size()), jobs, classify_one);
  for (KnotClass c : report.cycle_classes) {
    switch (c) {
      case KnotClass::unknot:
        ++report.unknot_count;
        break;
      case KnotClass::trefoil:
        ++report.trefoil_count;
        break;
      case KnotClass::figure8:
        ++report.figure8_count;
        break;
    }
  }
  return report;
}

LinearEmbedding sample_embedding(int n, std::uint64_t seed) {
  require_census_size(n);
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
    LinearEmbedding e;
    e.n = n;
    e.points.reserve(n);
    for (int i = 0; i < n; ++i) {
      const long x = static_cast<long>(rng.next() & kCoordinateMask);
      const long y = static_cast<long>(rng.next() & kCoordinateMask);
      const long z = static_cast<long>(rng.next() & kCoordinateMask);
      e.points.push_back(Point3{Rational(x), Rational(y), Rational(z)});
    }
    if (in_general_position(e.points)) return e;
  }
  fail(ErrorCode::sampling_failure,
       "no general-position sample after 1000000 attempts");
}

MaxSearchResult max_search(int n, int count, std::uint64_t base_seed,
                           int jobs) {
  require_census_size(n);
  if (count < 1) fail(ErrorCode::validation, "max_search needs count >= 1");

  struct Entry {
    int c = 0;
    std::string fingerprint;
  };
  auto run_one = [&](int i) -> Entry {
    const LinearEmbedding e = sample_embedding(n, base_seed + i);
    const CensusReport r = census(e, 1);
    return Entry{r.stick_knot_count(), r.fingerprint};
  };
  const auto entries = run_indexed(count, jobs, run_one);

  MaxSearchResult result;
  for (int i = 0; i < count; ++i) {
    ++result.histogram[entries[i].c];
    if (entries[i].c > result.best_c) {
      result.best_c = entries[i].c;
      result.best_fingerprint = entries[i].fingerprint;
      result.best_seed = base_seed + i;
    }
  }
  return result;
}

}  // namespace heptaknot
