#include "ua/report.hpp"

#include <sstream>

namespace ua {

bool CheckReport::hypotheses_ok() const {
  for (const auto& h : hypotheses)
    if (!h.pass) return false;
  return true;
}

bool CheckReport::failure() const {
  return verdict == "counterexample" || verdict == "fail" || verdict == "disagreement";
}

void CheckReport::add_hypothesis(const std::string& name, bool pass,
                                 const std::string& detail) {
  hypotheses.push_back({name, pass, detail});
}

void CheckReport::fact(const std::string& name, bool value) { facts[name] = value; }

nlohmann::json CheckReport::to_json() const {
  nlohmann::json hj = nlohmann::json::array();
  for (const auto& h : hypotheses) {
    nlohmann::json e{{"name", h.name}, {"pass", h.pass}};
    if (!h.detail.empty()) e["detail"] = h.detail;
    hj.push_back(e);
  }
  nlohmann::json j{{"schema", "uaw-report/1"},
                   {"check", check},
                   {"target", target},
                   {"hypotheses", hj},
                   {"facts", facts}};
  if (hypotheses_ok())
    j["verdict"] = verdict;
  else
    j["verdict"] = nullptr;
  if (!witness.is_null()) j["witness"] = witness;
  return j;
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << "check: " << check << "\n";
  if (!target.empty()) os << "target: " << target << "\n";
  for (const auto& h : hypotheses) {
    os << "hypothesis: " << h.name << ": " << (h.pass ? "pass" : "FAIL");
    if (!h.detail.empty()) os << " (" << h.detail << ")";
    os << "\n";
  }
  for (auto it = facts.begin(); it != facts.end(); ++it)
    os << "fact: " << it.key() << ": " << it.value().dump() << "\n";
  if (hypotheses_ok())
    os << "verdict: " << verdict << "\n";
  else
    os << "verdict: (hypotheses not met)\n";
  if (!witness.is_null()) os << "witness: " << witness.dump() << "\n";
  os << "time-ms: " << elapsed_ms << "\n";
  os << "--- report-json ---\n" << to_json().dump(2) << "\n";
  return os.str();
}

std::string partition_text(const Partition& p) {
  std::ostringstream os;
  os << "{";
  bool first_block = true;
  for (const auto& blk : p.blocks()) {
    if (!first_block) os << " | ";
    first_block = false;
    for (size_t i = 0; i < blk.size(); ++i) {
      if (i) os << ",";
      os << blk[i];
    }
  }
  os << "}";
  return os.str();
}

nlohmann::json partition_json(const Partition& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& blk : p.blocks()) j.push_back(blk);
  return j;
}

}  // namespace ua
