#ifndef REGULUS_DECISION_HPP_
#define REGULUS_DECISION_HPP_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "regulus/ring.hpp"

namespace regulus {

  enum class Verdict { regular, not_regular, unknown };

  struct Condition {
    enum class Status { pass, fail, unknown };

    std::string name;
    Status      status;
    std::string witness;
  };

  // A theorem-based verdict together with the per-condition evidence. The
  // verdict is regular exactly when every condition passes; a failing
  // condition makes it not_regular, otherwise an undecided one makes it
  // unknown.
  struct RegularityDecision {
    Verdict                verdict = Verdict::unknown;
    bool                   graded  = false;
    std::string            reason;
    std::vector<Condition> evidence;

    static RegularityDecision from_conditions(std::vector<Condition> conditions,
                                              bool graded = false);

    // "Regular", "NotRegular", "Unknown" or the graded variants.
    std::string verdict_name() const;
  };

  std::string status_name(Condition::Status s);

  // Shared conditions: "R is regular" and "each listed prime is a unit of R".
  Condition ring_regular_condition(CoeffRing const& ring);
  Condition primes_invertible_condition(std::set<std::uint64_t> const& primes,
                                        CoeffRing const&               ring,
                                        std::string                    name);

}  // namespace regulus

#endif  // REGULUS_DECISION_HPP_
