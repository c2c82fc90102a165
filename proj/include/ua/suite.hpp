#pragma once

// The full verification suite: one entry per acceptance property, each with a
// machine-readable detail block.  JSON output carries no timings or thread
// counts, so runs with different --jobs serialize identically.

#include <json.hpp>

#include "ua/scans.hpp"

namespace ua {

struct SuiteOptions {
  uint64_t seed = 1;
  Exec exec = Exec::parallel;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  nlohmann::json details = nlohmann::json::object();
  double elapsed_ms = 0;
};

struct SuiteResult {
  std::vector<CriterionResult> criteria;
  bool pass() const;
  double total_ms() const;
};

SuiteResult run_suite(const SuiteOptions& opt);

nlohmann::json suite_json(const SuiteResult& r, uint64_t seed);
std::string suite_text(const SuiteResult& r, uint64_t seed);

struct SlSearchHit {
  AlgebraPtr algebra;
  SLWitness witness;
};
// Scans bare sets of size 2..max_size for a shifting-lemma failure.
std::optional<SlSearchHit> sl_counterexample_search(int max_size, Exec ex = Exec::parallel);

}  // namespace ua
