#include "lace/certificate.hpp"

#include <array>
#include <algorithm>

namespace lace {

bool Certificate::positive() const {
  static const std::array<const char*, 7> kPositive = {
      "real_rooted",        "interlaces",         "interlacing_sequence",
      "nonneg_sym_decomp",  "strong_interlacing", "certified",
      "feasibility_checks_passed"};
  return std::any_of(kPositive.begin(), kPositive.end(),
                     [&](const char* v) { return verdict == v; });
}

bool Certificate::condition(const std::string& name) const {
  for (const auto& item : hypothesis_report)
    if (item.name == name) return item.holds;
  return false;
}

void Certificate::add(const std::string& name, bool holds) {
  hypothesis_report.push_back({name, holds});
}

nlohmann::ordered_json Certificate::to_json() const {
  nlohmann::ordered_json j;
  j["subject"] = subject;
  j["verdict"] = verdict;
  auto w = nlohmann::ordered_json::array();
  for (const auto& witness : witnesses) {
    nlohmann::ordered_json item;
    item["lo"] = rational_to_string(witness.lo);
    item["hi"] = rational_to_string(witness.hi);
    item["multiplicity"] = witness.multiplicity;
    w.push_back(std::move(item));
  }
  j["witnesses"] = std::move(w);
  auto h = nlohmann::ordered_json::array();
  for (const auto& item : hypothesis_report) {
    nlohmann::ordered_json entry;
    entry["name"] = item.name;
    entry["holds"] = item.holds;
    h.push_back(std::move(entry));
  }
  j["hypothesis_report"] = std::move(h);
  return j;
}

}  // namespace lace
