#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ua/partition.hpp"

namespace ua {

struct Hypothesis {
  std::string name;
  bool pass = true;
  std::string detail;
};

// One check run.  A verdict is only set when every hypothesis passed; a
// witness is only attached to failure verdicts.
struct CheckReport {
  std::string check;
  std::string target;
  std::vector<Hypothesis> hypotheses;
  std::string verdict;          // "", "holds", "counterexample", "pass", "fail", ...
  nlohmann::json witness;       // null unless the verdict is a failure
  nlohmann::json facts = nlohmann::json::object();  // named intermediate results
  double elapsed_ms = 0;

  bool hypotheses_ok() const;
  bool failure() const;  // verdict is "counterexample", "fail" or "disagreement"

  void add_hypothesis(const std::string& name, bool pass, const std::string& detail = "");
  void fact(const std::string& name, bool value);

  // Timing is excluded from the JSON form so reports are byte-reproducible.
  nlohmann::json to_json() const;
  std::string to_text() const;  // human text followed by the JSON block
};

std::string partition_text(const Partition& p);
nlohmann::json partition_json(const Partition& p);

}  // namespace ua
