// Command-line front end. Talks to the library exclusively through the
// C API in heptaknot/heptaknot.h.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heptaknot/heptaknot.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDisagreement = 3;
constexpr int kExitSampling = 4;
constexpr int kExitInternal = 1;

struct StringOut {
  char* ptr = nullptr;
  ~StringOut() { hk_string_free(ptr); }
};

struct PointsOut {
  hk_points* ptr = nullptr;
  ~PointsOut() { hk_points_free(ptr); }
};

int exit_code_for(hk_status status) {
  switch (status) {
    case HK_OK:
      return kExitOk;
    case HK_ERR_ARGUMENT:
    case HK_ERR_PARSE:
    case HK_ERR_VALIDATION:
    case HK_ERR_DEGENERATE:
      return kExitInput;
    case HK_ERR_DISAGREEMENT:
      return kExitDisagreement;
    case HK_ERR_SAMPLING:
      return kExitSampling;
    case HK_ERR_INTERNAL:
      return kExitInternal;
  }
  return kExitInternal;
}

int report_failure(hk_status status) {
  const std::string message = hk_error_message();
  Json err;
  err["error"] = {{"code", hk_status_name(status)}, {"message", message}};
  std::cerr << err.dump() << "\n";

  // Classifier disagreements ship a standalone repro file for replay.
  const std::string marker = "; repro: ";
  if (status == HK_ERR_DISAGREEMENT) {
    if (auto pos = message.find(marker); pos != std::string::npos) {
      std::ofstream out("heptaknot_repro.json");
      out << message.substr(pos + marker.size()) << "\n";
      std::cerr << "{\"repro_file\":\"heptaknot_repro.json\"}\n";
    }
  }
  return exit_code_for(status);
}

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    out = buffer.str();
    return true;
  }
  std::ifstream in(path);
  if (!in.good()) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

int file_error(const std::string& path) {
  Json err;
  err["error"] = {{"code", "parse"},
                  {"message", "cannot read input file: " + path}};
  std::cerr << err.dump() << "\n";
  return kExitInput;
}

void print_classify_text(const Json& j) {
  std::cout << "points: " << j["n"] << "\n";
  if (!j["knot_class"].is_null()) {
    std::cout << "knot class: " << j["knot_class"].get<std::string>() << "\n";
  }
  if (!j["determinant"].is_null()) {
    std::cout << "determinant: " << j["determinant"] << "\n";
    std::cout << "alexander: " << j["alexander"]["text"].get<std::string>()
              << "\n";
  }
  if (j.contains("radon_class")) {
    std::cout << "sign tables: " << j["radon_class"].get<std::string>();
    if (!j["rs_match"].is_null()) {
      const Json& m = j["rs_match"];
      std::cout << " (" << m["pattern"].get<std::string>() << ", base "
                << m["base"] << ", direction " << m["direction"] << ", sign "
                << m["sign"] << ")";
    }
    std::cout << "\n";
  }
  if (!j["penetration_table"].is_null()) {
    std::cout << "table (base " << j["table_labeling"]["base"]
              << ", direction " << j["table_labeling"]["direction"] << "):\n";
    for (const auto& row : j["penetration_table"]) {
      std::cout << row.get<std::string>() << "\n";
    }
  }
}

int run_classify(const std::string& path, bool oracle_only, bool radon_only,
                 std::uint64_t seed, const std::string& format) {
  std::string text;
  if (!read_input(path, text)) return file_error(path);
  PointsOut points;
  if (hk_status st = hk_points_parse_json(text.c_str(), &points.ptr);
      st != HK_OK) {
    return report_failure(st);
  }
  const hk_classify_mode mode = oracle_only  ? HK_CLASSIFY_ORACLE
                                : radon_only ? HK_CLASSIFY_RADON
                                             : HK_CLASSIFY_FULL;
  StringOut out;
  if (hk_status st = hk_classify(points.ptr, mode, seed, &out.ptr);
      st != HK_OK) {
    return report_failure(st);
  }
  if (format == "text") {
    print_classify_text(Json::parse(out.ptr));
  } else {
    std::cout << out.ptr << "\n";
  }
  return kExitOk;
}

int run_table(const std::string& path, const std::string& labeling,
              const std::string& format) {
  std::string text;
  if (!read_input(path, text)) return file_error(path);
  PointsOut points;
  if (hk_status st = hk_points_parse_json(text.c_str(), &points.ptr);
      st != HK_OK) {
    return report_failure(st);
  }

  int base = 0;
  int direction = 1;
  if (!labeling.empty()) {
    if (std::sscanf(labeling.c_str(), "%d,%d", &base, &direction) != 2) {
      Json err;
      err["error"] = {{"code", "validation"},
                      {"message", "--labeling expects \"base,direction\""}};
      std::cerr << err.dump() << "\n";
      return kExitInput;
    }
  }

  if (format == "text") {
    StringOut out;
    if (hk_status st = hk_table_text(points.ptr, base, direction, &out.ptr);
        st != HK_OK) {
      return report_failure(st);
    }
    std::cout << out.ptr;
  } else {
    StringOut out;
    if (hk_status st = hk_table(points.ptr, base, direction, &out.ptr);
        st != HK_OK) {
      return report_failure(st);
    }
    std::cout << out.ptr << "\n";
  }
  return kExitOk;
}

int run_census(const std::string& path, int sample_n, std::uint64_t seed,
               int count, const std::string& out_path, int jobs,
               const std::string& format) {
  std::vector<Json> records;

  auto census_points = [&](hk_points* points, Json extra) -> hk_status {
    const auto start = std::chrono::steady_clock::now();
    StringOut report;
    if (hk_status st = hk_census(points, jobs, &report.ptr); st != HK_OK) {
      return st;
    }
    Json record = Json::parse(report.ptr);
    record["command"] = "census";
    const auto elapsed = std::chrono::steady_clock::now() - start;
    record["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    StringOut dumped;
    if (hk_status st = hk_points_to_json(points, &dumped.ptr); st != HK_OK) {
      return st;
    }
    record["points"] = Json::parse(dumped.ptr)["points"];
    record.update(extra);
    records.push_back(std::move(record));
    return HK_OK;
  };

  if (!path.empty()) {
    std::string text;
    if (!read_input(path, text)) return file_error(path);
    PointsOut points;
    if (hk_status st = hk_points_parse_json(text.c_str(), &points.ptr);
        st != HK_OK) {
      return report_failure(st);
    }
    if (hk_status st = census_points(points.ptr, Json::object());
        st != HK_OK) {
      return report_failure(st);
    }
  } else {
    for (int i = 0; i < count; ++i) {
      PointsOut points;
      if (hk_status st = hk_sample(sample_n, seed + i, &points.ptr);
          st != HK_OK) {
        return report_failure(st);
      }
      if (hk_status st = census_points(
              points.ptr, Json{{"seed", seed + i}, {"sample_index", i}});
          st != HK_OK) {
        return report_failure(st);
      }
    }
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::app);
    if (!out.good()) return file_error(out_path);
    for (const Json& r : records) out << r.dump() << "\n";
  }

  // Summary over all records.
  std::map<int, int> histogram;
  int best_c = -1;
  std::string best_fingerprint;
  int with_trefoil = 0;
  for (const Json& r : records) {
    const int c = r["c"].get<int>();
    ++histogram[c];
    if (c > best_c) {
      best_c = c;
      best_fingerprint = r["fingerprint"].get<std::string>();
    }
    if (r["counts"]["trefoil"].get<int>() >= 1) ++with_trefoil;
  }
  const char* note =
      "empirical lower bound over sampled embeddings; the exact maximum "
      "over all embeddings is not established by sampling";

  if (format == "text") {
    std::cout << "embeddings censused: " << records.size() << "\n";
    std::cout << "note: " << note << "\n";
    std::cout << "histogram of stick-knot counts c:\n";
    for (const auto& [c, k] : histogram) {
      std::cout << "  c=" << c << ": " << k << "\n";
    }
    std::cout << "best c: " << best_c << " (fingerprint " << best_fingerprint
              << ")\n";
    std::cout << "embeddings with a trefoil cycle: " << with_trefoil << "/"
              << records.size() << "\n";
  } else {
    Json summary;
    summary["command"] = "census-summary";
    summary["records"] = records.size();
    Json hist = Json::object();
    for (const auto& [c, k] : histogram) hist[std::to_string(c)] = k;
    summary["histogram"] = std::move(hist);
    summary["best_c"] = best_c;
    summary["best_fingerprint"] = best_fingerprint;
    summary["with_trefoil"] = with_trefoil;
    summary["note"] = note;
    std::cout << summary.dump() << "\n";
  }
  return kExitOk;
}

int run_sample(int n, std::uint64_t seed, const std::string& out_path) {
  PointsOut points;
  if (hk_status st = hk_sample(n, seed, &points.ptr); st != HK_OK) {
    return report_failure(st);
  }
  StringOut dumped;
  if (hk_status st = hk_points_to_json(points.ptr, &dumped.ptr);
      st != HK_OK) {
    return report_failure(st);
  }
  Json doc = Json::parse(dumped.ptr);
  doc["command"] = "sample";
  doc["n"] = n;
  doc["seed"] = seed;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out.good()) return file_error(out_path);
    out << doc.dump() << "\n";
  } else {
    std::cout << doc.dump() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact classification of polygonal knots: sign-table test for "
      "heptagonal figure-8 knots, projection/determinant oracle, and "
      "complete-graph cycle censuses."};
  app.require_subcommand(1);

  std::string format = "json";

  auto* classify = app.add_subcommand(
      "classify", "Classify one polygon from a points file");
  std::string classify_path;
  bool oracle_only = false;
  bool radon_only = false;
  std::uint64_t classify_seed = 0;
  std::string classify_format = "json";
  classify->add_option("path", classify_path, "points JSON file ('-' = stdin)")
      ->required();
  auto* oracle_flag =
      classify->add_flag("--oracle-only", oracle_only,
                         "projection/determinant oracle only (3..12 points)");
  classify
      ->add_flag("--radon-only", radon_only,
                 "sign-table classifier only (7 points)")
      ->excludes(oracle_flag);
  classify->add_option("--seed", classify_seed,
                       "seed for the projection direction");
  classify->add_option("--format", classify_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* table =
      app.add_subcommand("table", "Render the 7x3 penetration table");
  std::string table_path;
  std::string labeling;
  std::string table_format = "text";
  table->add_option("path", table_path, "points JSON file ('-' = stdin)")
      ->required();
  table->add_option("--labeling", labeling,
                    "base,direction (default 0,1)");
  table->add_option("--format", table_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* census =
      app.add_subcommand("census", "Census all Hamiltonian cycles");
  std::string census_path;
  int sample_n = 0;
  std::uint64_t census_seed = 0;
  int census_count = 1;
  std::string census_out;
  int jobs = 1;
  std::string census_format = "json";
  census->add_option("path", census_path,
                     "embedding points file (omit when sampling)");
  census->add_option("--sample", sample_n, "sample embeddings with n points");
  census->add_option("--seed", census_seed, "base sampling seed");
  census->add_option("--count", census_count, "number of sampled embeddings");
  census->add_option("--out", census_out, "append JSONL records here");
  census->add_option("--jobs", jobs, "worker threads per census");
  census->add_option("--format", census_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* sample = app.add_subcommand("sample", "Emit a seeded embedding");
  int n = 7;
  std::uint64_t sample_seed = 0;
  std::string sample_out;
  sample->add_option("--n", n, "number of points (6 or 7)");
  sample->add_option("--seed", sample_seed, "sampling seed");
  sample->add_option("--out", sample_out, "write the points file here");

  (void)format;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    Json err;
    err["error"] = {{"code", "argument"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return kExitInput;
  }

  if (classify->parsed()) {
    return run_classify(classify_path, oracle_only, radon_only, classify_seed,
                        classify_format);
  }
  if (table->parsed()) {
    return run_table(table_path, labeling, table_format);
  }
  if (census->parsed()) {
    if (census_path.empty() && sample_n == 0) {
      Json err;
      err["error"] = {{"code", "argument"},
                      {"message",
                       "census needs a points file or --sample n"}};
      std::cerr << err.dump() << "\n";
      return kExitInput;
    }
    if (!census_path.empty() && sample_n != 0) {
      Json err;
      err["error"] = {{"code", "argument"},
                      {"message", "choose either a file or --sample, not both"}};
      std::cerr << err.dump() << "\n";
      return kExitInput;
    }
    return run_census(census_path, sample_n, census_seed, census_count,
                      census_out, jobs, census_format);
  }
  if (sample->parsed()) {
    return run_sample(n, sample_seed, sample_out);
  }
  return kExitInternal;
}
