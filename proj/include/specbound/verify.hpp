#pragma once

#include <cmath>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "specbound/check_outcome.hpp"
#include "specbound/generators.hpp"
#include "specbound/graph.hpp"
#include "specbound/invariants.hpp"
#include "specbound/spectral.hpp"

namespace specbound {

// Spectral comparisons use a band relative to the edge count; combinatorial
// comparisons are exact.
struct Tolerances {
  double relative = 1e-8;
  double spectral(double scale) const { return relative * std::max(1.0, scale); }
};

struct VerifyOptions {
  Tolerances tol;
  int r = 3;  // clique bound for the conjecture-2 report
};

// Lazily computed views of one graph, shared by all predicates evaluated on
// it. Not safe for concurrent use; give each worker its own instance.
class Analysis {
 public:
  explicit Analysis(Graph g);

  const Graph& graph() const { return g_; }
  const Structure& structure() const;
  const Spectrum<double>& spectrum() const;
  const PerronData<double>& perron() const;
  const InvariantProfile& invariants() const;

 private:
  Graph g_;
  mutable std::optional<Structure> structure_;
  mutable std::optional<Spectrum<double>> spectrum_;
  mutable std::optional<PerronData<double>> perron_;
  mutable std::optional<InvariantProfile> invariants_;
};

struct CompleteBipartiteParts {
  bool matches = false;
  std::vector<int> part_a, part_b;  // original labels, part_a holds the lowest vertex
  std::vector<int> isolated;
};

CompleteBipartiteParts is_complete_bipartite_plus_isolated(const Graph& g);

struct BlowupMatch {
  PatternId pattern;
  // One class per pattern vertex in pattern order; the last one is the K1
  // class (possibly empty).
  std::vector<std::vector<int>> classes;
};

std::optional<BlowupMatch> recognize_blowup(const Graph& g);

bool contains_clique(const Graph& g, int size);

CheckOutcome check_nosal(const Analysis& a, const Tolerances& tol = {});
CheckOutcome check_boni_lemma(const Analysis& a, const Tolerances& tol = {});
CheckOutcome check_th1(const Analysis& a, const Tolerances& tol = {});
CheckOutcome check_colem(const Analysis& a);
CheckOutcome check_supt(const Analysis& a, const Tolerances& tol = {});
CheckOutcome check_mt(const Analysis& a, const Tolerances& tol = {});
CheckOutcome check_th2(const Analysis& a, const Tolerances& tol = {});
CheckOutcome check_conjecture2(const Analysis& a, int r, const Tolerances& tol = {});
// Power-sum identities: sum lambda = 0, sum lambda^2 = 2m, sum lambda^3 = 6t.
CheckOutcome check_trace(const Analysis& a, int power, const Tolerances& tol = {});

// Convenience overloads on a bare graph.
inline CheckOutcome check_nosal(const Graph& g) { return check_nosal(Analysis(g)); }
inline CheckOutcome check_boni_lemma(const Graph& g) { return check_boni_lemma(Analysis(g)); }
inline CheckOutcome check_th1(const Graph& g) { return check_th1(Analysis(g)); }
inline CheckOutcome check_colem(const Graph& g) { return check_colem(Analysis(g)); }
inline CheckOutcome check_supt(const Graph& g) { return check_supt(Analysis(g)); }
inline CheckOutcome check_mt(const Graph& g) { return check_mt(Analysis(g)); }
inline CheckOutcome check_th2(const Graph& g) { return check_th2(Analysis(g)); }
inline CheckOutcome check_conjecture2(const Graph& g, int r) {
  return check_conjecture2(Analysis(g), r);
}

// Power-sum comparison for nonnegative a >= b and xs. Equality is accepted
// only at the configuration (a, b, 0, ..., 0) up to order. The statement is
// homogeneous, so every band scales with a^p + b^p (or a, a^2 + b^2).
CheckOutcome vecl_check(double a, double b, std::span<const double> xs, double p,
                        double rel_tol = 1e-9);

enum class PredicateId {
  Nosal,
  BoniLemma,
  Th1,
  Colem,
  Supt,
  Mt,
  Th2,
  In1,
  In2,
  In2Bound,
  In3,
  In3Bound,
  Trace1,
  Trace2,
  Trace3,
  Conjecture2,
};

struct PredicateInfo {
  PredicateId id;
  std::string_view name;
};

std::span<const PredicateInfo> all_predicates();
std::string_view to_string(PredicateId id);
std::optional<PredicateId> parse_predicate(std::string_view name);

// Conjecture 2 asserts only at r = 2; for r >= 3 it is reported, not enforced.
inline bool is_asserting(PredicateId id, const VerifyOptions& opt) {
  return id != PredicateId::Conjecture2 || opt.r == 2;
}

CheckOutcome evaluate(PredicateId id, const Analysis& a, const VerifyOptions& opt = {});

}  // namespace specbound
