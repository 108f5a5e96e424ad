#include "regulus/decision.hpp"

namespace regulus {

  RegularityDecision RegularityDecision::from_conditions(std::vector<Condition> conditions,
                                                         bool graded) {
    RegularityDecision d;
    d.graded   = graded;
    d.evidence = std::move(conditions);
    d.verdict  = Verdict::regular;
    for (auto const& c : d.evidence) {
      if (c.status == Condition::Status::fail) {
        d.verdict = Verdict::not_regular;
        d.reason  = c.name + " fails";
        if (!c.witness.empty()) {
          d.reason += ": " + c.witness;
        }
        return d;
      }
    }
    for (auto const& c : d.evidence) {
      if (c.status == Condition::Status::unknown) {
        d.verdict = Verdict::unknown;
        d.reason  = c.name + " undecided";
        if (!c.witness.empty()) {
          d.reason += ": " + c.witness;
        }
        return d;
      }
    }
    d.reason = "all conditions hold";
    return d;
  }

  std::string RegularityDecision::verdict_name() const {
    switch (verdict) {
      case Verdict::regular:
        return graded ? "GradedRegular" : "Regular";
      case Verdict::not_regular:
        return graded ? "NotGradedRegular" : "NotRegular";
      case Verdict::unknown:
        return "Unknown";
    }
    return "Unknown";
  }

  std::string status_name(Condition::Status s) {
    switch (s) {
      case Condition::Status::pass:
        return "pass";
      case Condition::Status::fail:
        return "fail";
      case Condition::Status::unknown:
        return "unknown";
    }
    return "unknown";
  }

  Condition ring_regular_condition(CoeffRing const& ring) {
    bool ok = is_regular_ring(ring);
    return {"coefficient ring regular",
            ok ? Condition::Status::pass : Condition::Status::fail,
            ring.name() + (ok ? " is regular" : " is not regular")};
  }

  Condition primes_invertible_condition(std::set<std::uint64_t> const& primes,
                                        CoeffRing const&               ring,
                                        std::string                    name) {
    std::string bad, all;
    for (auto p : primes) {
      all += (all.empty() ? "" : ",") + std::to_string(p);
      if (!is_invertible(ring, p)) {
        bad += (bad.empty() ? "" : ",") + std::to_string(p);
      }
    }
    if (!bad.empty()) {
      return {std::move(name), Condition::Status::fail,
              "prime(s) " + bad + " not invertible in " + ring.name()};
    }
    return {std::move(name), Condition::Status::pass,
            all.empty() ? "all subgroups trivial"
                        : "primes {" + all + "} invertible in " + ring.name()};
  }

}  // namespace regulus
