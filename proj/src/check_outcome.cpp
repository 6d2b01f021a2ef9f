#include "specbound/check_outcome.hpp"

#include <cmath>

namespace specbound {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::HoldsWithEquality: return "holds_with_equality";
    case Verdict::Violated: return "violated";
    case Verdict::Vacuous: return "vacuous";
  }
  return "?";
}

CheckOutcome compare(std::string id, double lhs, double rhs, double tol, Comparison kind) {
  CheckOutcome out;
  out.predicate_id = std::move(id);
  out.lhs = lhs;
  out.rhs = rhs;
  out.tolerance_used = tol;
  const double diff = rhs - lhs;
  switch (kind) {
    case Comparison::Identity:
      out.slack = 0.0 - std::abs(diff);
      out.verdict = std::abs(diff) <= tol ? Verdict::HoldsWithEquality : Verdict::Violated;
      break;
    case Comparison::NonStrict:
      out.slack = diff;
      out.verdict = diff < -tol                ? Verdict::Violated
                    : std::abs(diff) <= tol    ? Verdict::HoldsWithEquality
                                               : Verdict::Holds;
      break;
    case Comparison::Strict:
      out.slack = diff;
      out.verdict = diff > tol ? Verdict::Holds : Verdict::Violated;
      break;
  }
  return out;
}

CheckOutcome vacuous(std::string id, std::string premise, double tol) {
  CheckOutcome out;
  out.predicate_id = std::move(id);
  out.verdict = Verdict::Vacuous;
  out.premise_failed = std::move(premise);
  out.tolerance_used = tol;
  return out;
}

}  // namespace specbound
