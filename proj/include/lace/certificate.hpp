#ifndef LACE_CERTIFICATE_HPP
#define LACE_CERTIFICATE_HPP

#include <string>
#include <vector>

#include "lace/rational.hpp"

#include "json.hpp"

namespace lace {

// Isolating interval witness.  lo == hi encodes an exact rational root.
struct Witness {
  Rat lo;
  Rat hi;
  int multiplicity = 1;
};

struct HypothesisItem {
  std::string name;
  bool holds = false;
};

/// Machine-checkable verdict with exact rational witnesses.
///
/// Positive verdicts carry enough witnesses for independent re-verification
/// by sign evaluation; hypothesis_report lists every named condition that
/// was checked, in a deterministic order.
struct Certificate {
  std::string subject;
  std::string verdict;
  std::vector<Witness> witnesses;
  std::vector<HypothesisItem> hypothesis_report;

  bool positive() const;
  bool condition(const std::string& name) const;  // false if absent
  void add(const std::string& name, bool holds);

  nlohmann::ordered_json to_json() const;
};

}  // namespace lace

#endif  // LACE_CERTIFICATE_HPP
