#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace specbound {

enum class Verdict { Holds, HoldsWithEquality, Violated, Vacuous };

std::string_view to_string(Verdict v);

struct Witness {
  std::string kind;           // "edge", "triangle", "pattern", "cycle", ...
  std::vector<int> vertices;  // may be empty
  std::string detail;         // free-form, e.g. a pattern name
};

// Slack is RHS - LHS in the orientation of the checked statement. Identities
// report -|lhs - rhs| so that any mismatch reads as a violation. Outcomes
// with no numeric margin (vacuous, or an exception branch) carry no slack.
struct CheckOutcome {
  std::string predicate_id;
  Verdict verdict = Verdict::Vacuous;
  std::optional<double> slack;
  std::optional<double> lhs;
  std::optional<double> rhs;
  std::optional<Witness> witness;
  std::string premise_failed;  // set iff verdict is Vacuous
  double tolerance_used = 0;
};

enum class Comparison {
  NonStrict,  // rhs >= lhs; |slack| <= tol is an equality case
  Strict,     // rhs > lhs; slack within the tolerance band is a violation
  Identity,   // lhs == rhs
};

// Builds an outcome from both sides of a comparison.
CheckOutcome compare(std::string id, double lhs, double rhs, double tol, Comparison kind);

CheckOutcome vacuous(std::string id, std::string premise, double tol = 0);

}  // namespace specbound
