#include "specbound/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>

#include "specbound/error.hpp"

namespace specbound {

Analysis::Analysis(Graph g) : g_(std::move(g)) {}

const Structure& Analysis::structure() const {
  if (!structure_) structure_ = specbound::structure(g_);
  return *structure_;
}

const Spectrum<double>& Analysis::spectrum() const {
  if (!spectrum_) spectrum_ = specbound::spectrum<double>(g_);
  return *spectrum_;
}

const PerronData<double>& Analysis::perron() const {
  if (!perron_) perron_ = specbound::perron<double>(g_, structure());
  return *perron_;
}

const InvariantProfile& Analysis::invariants() const {
  if (!invariants_) invariants_ = invariant_profile(g_);
  return *invariants_;
}

CompleteBipartiteParts is_complete_bipartite_plus_isolated(const Graph& g) {
  CompleteBipartiteParts out;
  const StrippedGraph s = strip_isolated(g);
  out.isolated = s.removed;
  if (s.graph.order() == 0) return out;
  const Structure st = structure(s.graph);
  if (!st.connected() || !st.is_bipartite()) return out;
  for (int u = 0; u < s.graph.order(); ++u) {
    const int original = s.kept[static_cast<std::size_t>(u)];
    (st.color[static_cast<std::size_t>(u)] == 0 ? out.part_a : out.part_b).push_back(original);
  }
  out.matches = g.size() == static_cast<std::int64_t>(out.part_a.size() * out.part_b.size());
  return out;
}

namespace {

std::optional<std::vector<int>> match_quotient(const Graph& quotient, const Graph& pattern) {
  const int k = quotient.order();
  if (k != pattern.order()) return std::nullopt;
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      for (int j = i + 1; j < k && ok; ++j) {
        ok = quotient.has_edge(i, j) ==
             pattern.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
      }
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::optional<std::vector<int>> find_triangle(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    const Mask common = g.neighbors(u) & g.neighbors(v);
    if (common) return std::vector<int>{u, v, std::countr_zero(common)};
  }
  return std::nullopt;
}

bool clique_search(const Graph& g, Mask candidates, int needed) {
  if (needed == 0) return true;
  if (popcount(candidates) < needed) return false;
  while (candidates) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (clique_search(g, candidates & g.neighbors(v), needed - 1)) return true;
  }
  return false;
}

double squared(double x) { return x * x; }

}  // namespace

std::optional<BlowupMatch> recognize_blowup(const Graph& g) {
  std::vector<int> isolated;
  std::map<Mask, std::vector<int>> by_row;  // ordered by row is not needed; re-sorted below
  for (int u = 0; u < g.order(); ++u) {
    if (g.degree(u) == 0) {
      isolated.push_back(u);
    } else {
      by_row[g.neighbors(u)].push_back(u);
    }
  }
  if (g.order() == 0) return std::nullopt;
  if (by_row.empty()) {
    // Edgeless: the blow-up of P2 ∪ K1 with both path classes empty.
    return BlowupMatch{PatternId::P2K1, {{}, {}, isolated}};
  }

  std::vector<std::vector<int>> classes;
  for (auto& [row, members] : by_row) classes.push_back(std::move(members));
  std::sort(classes.begin(), classes.end());
  if (classes.size() > 5) return std::nullopt;

  Graph quotient(static_cast<int>(classes.size()));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (g.has_edge(classes[i].front(), classes[j].front())) {
        quotient.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  for (PatternId id : kAllPatterns) {
    const Graph full = pattern_graph(id);
    std::vector<int> path_vertices(static_cast<std::size_t>(full.order() - 1));
    std::iota(path_vertices.begin(), path_vertices.end(), 0);
    const Graph core = induced_subgraph(full, path_vertices);
    if (auto perm = match_quotient(quotient, core)) {
      BlowupMatch match{id, std::vector<std::vector<int>>(static_cast<std::size_t>(full.order()))};
      for (std::size_t i = 0; i < classes.size(); ++i) {
        match.classes[static_cast<std::size_t>((*perm)[i])] = classes[i];
      }
      match.classes.back() = isolated;
      return match;
    }
  }
  return std::nullopt;
}

bool contains_clique(const Graph& g, int size) {
  if (size <= 0) return true;
  return clique_search(g, g.vertex_mask(), size);
}

CheckOutcome check_nosal(const Analysis& a, const Tolerances& tol) {
  const double m = static_cast<double>(a.graph().size());
  const double l1 = a.spectrum().lambda1();
  const double band = tol.spectral(m);
  if (squared(l1) <= m + band) return vacuous("nosal", "lambda1^2 > m", band);
  CheckOutcome out =
      compare("nosal", 0.0, static_cast<double>(a.invariants().triangles.t), 0, Comparison::Strict);
  if (auto tri = find_triangle(a.graph())) out.witness = Witness{"triangle", *tri, ""};
  return out;
}

CheckOutcome check_boni_lemma(const Analysis& a, const Tolerances& tol) {
  const double m = static_cast<double>(a.graph().size());
  const double rho = a.spectrum().lambda1();
  const double t = static_cast<double>(a.invariants().triangles.t);
  return compare("boni", rho * rho * rho - rho * m, 3 * t, tol.spectral(m), Comparison::NonStrict);
}

CheckOutcome check_th1(const Analysis& a, const Tolerances& tol) {
  const Structure& st = a.structure();
  if (!st.connected() || st.is_bipartite()) {
    return vacuous("th1", "connected and nonbipartite");
  }
  const double m = static_cast<double>(a.graph().size());
  const auto& pd = a.perron();
  const double rho = pd.rho;
  const double c = pd.c.value_or(0.0);
  const InvariantProfile& inv = a.invariants();
  const double lhs = rho * rho * rho - rho * m + c * rho * static_cast<double>(inv.tpp.tpp);
  return compare("th1", lhs, 3.0 * static_cast<double>(inv.triangles.t), tol.spectral(m),
                 Comparison::NonStrict);
}

CheckOutcome check_colem(const Analysis& a) {
  const InvariantProfile& inv = a.invariants();
  const Count beta = inv.book.bk;
  const Count lhs = (inv.n - 3 * beta) * inv.triangles.t;
  const Count rhs = beta * inv.tpp.tpp;
  CheckOutcome out = compare("colem", static_cast<double>(lhs), static_cast<double>(rhs), 0,
                             Comparison::NonStrict);
  if (inv.book.witness) {
    out.witness = Witness{"edge", {inv.book.witness->first, inv.book.witness->second}, "booksize"};
  }
  return out;
}

CheckOutcome check_supt(const Analysis& a, const Tolerances& tol) {
  const Graph& g = a.graph();
  const double m = static_cast<double>(g.size());
  const double band = tol.spectral(m);
  if (g.size() == 0 || !a.structure().connected()) return vacuous("supt", "connected", band);
  const auto& pd = a.perron();
  if (pd.rho <= std::sqrt(m) + band) return vacuous("supt", "rho > sqrt(m)", band);
  const double threshold = 1.0 / (8.0 * std::sqrt(m));
  for (const auto& [i, j] : g.edges()) {
    if (pd.vector(i) * pd.vector(j) < threshold - band) {
      CheckOutcome out = vacuous("supt", "x_i x_j >= 1/(8 sqrt(m)) on every edge", band);
      out.witness = Witness{"edge", {i, j}, "premise fails"};
      return out;
    }
  }
  const InvariantProfile& inv = a.invariants();
  CheckOutcome out = compare("supt", std::pow(2.0 * m, 0.25) / 12.0,
                             static_cast<double>(inv.book.bk), band, Comparison::Strict);
  if (inv.book.witness) {
    out.witness = Witness{"edge", {inv.book.witness->first, inv.book.witness->second}, "booksize"};
  }
  return out;
}

CheckOutcome check_mt(const Analysis& a, const Tolerances& tol) {
  const Graph& g = a.graph();
  const double m = static_cast<double>(g.size());
  const double band = tol.spectral(m);
  if (g.size() == 0) return vacuous("mt", "m >= 1", band);
  if (squared(a.spectrum().lambda1()) < m - band) return vacuous("mt", "lambda1^2 >= m", band);
  const CompleteBipartiteParts cb = is_complete_bipartite_plus_isolated(g);
  if (cb.matches) {
    CheckOutcome out;
    out.predicate_id = "mt";
    out.verdict = Verdict::Holds;
    out.tolerance_used = band;
    std::vector<int> vertices = cb.part_a;
    vertices.insert(vertices.end(), cb.part_b.begin(), cb.part_b.end());
    out.witness = Witness{"complete_bipartite", std::move(vertices),
                          "K_{" + std::to_string(cb.part_a.size()) + "," +
                              std::to_string(cb.part_b.size()) + "} exception"};
    return out;
  }
  const InvariantProfile& inv = a.invariants();
  CheckOutcome out = compare("mt", std::pow(m, 0.25) / 12.0, static_cast<double>(inv.book.bk),
                             band, Comparison::Strict);
  if (inv.book.witness) {
    out.witness = Witness{"edge", {inv.book.witness->first, inv.book.witness->second}, "booksize"};
  }
  return out;
}

CheckOutcome check_th2(const Analysis& a, const Tolerances& tol) {
  const Graph& g = a.graph();
  const double m = static_cast<double>(g.size());
  const double band = tol.spectral(m);
  if (g.order() < 3) return vacuous("th2", "order >= 3", band);
  if (a.invariants().triangles.t != 0) return vacuous("th2", "triangle-free", band);
  const auto& spec = a.spectrum();
  const double lhs = squared(spec.lambda1()) + squared(spec.lambda2());
  CheckOutcome out = compare("th2", lhs, m, band, Comparison::NonStrict);
  if (out.verdict == Verdict::HoldsWithEquality) {
    if (auto match = recognize_blowup(g)) {
      std::string sizes;
      std::vector<int> flat;
      for (const auto& cls : match->classes) {
        if (!sizes.empty()) sizes += ",";
        sizes += std::to_string(cls.size());
        flat.insert(flat.end(), cls.begin(), cls.end());
      }
      out.witness = Witness{"pattern", std::move(flat),
                            std::string(to_string(match->pattern)) + "(" + sizes + ")"};
    } else {
      out.verdict = Verdict::Violated;
      out.witness = Witness{"classification_mismatch", {}, "equality without a matching blow-up"};
    }
  }
  return out;
}

CheckOutcome check_conjecture2(const Analysis& a, int r, const Tolerances& tol) {
  if (r < 2) throw Error(ErrorCode::InvalidParams, "conjecture 2 needs r >= 2");
  if (r + 1 > Graph::kMaxOrder) {
    throw Error(ErrorCode::RTooLargeForOrder, "r + 1 exceeds the largest representable order");
  }
  const Graph& g = a.graph();
  const double m = static_cast<double>(g.size());
  const double band = tol.spectral(m);
  const std::string id = "conj2";
  if (g.order() < r + 1) return vacuous(id, "order >= r + 1", band);
  if (contains_clique(g, r + 1)) return vacuous(id, "K_{r+1}-free", band);
  const auto& spec = a.spectrum();
  const double lhs = squared(spec.lambda1()) + squared(spec.lambda2());
  CheckOutcome out = compare(id, lhs, 2.0 * (1.0 - 1.0 / r) * m, band, Comparison::NonStrict);
  out.witness = Witness{"parameter", {}, "r=" + std::to_string(r)};
  return out;
}

CheckOutcome check_trace(const Analysis& a, int power, const Tolerances& tol) {
  const double sum = a.spectrum().power_sum(power);
  double expected = 0;
  switch (power) {
    case 1: expected = 0; break;
    case 2: expected = 2.0 * static_cast<double>(a.graph().size()); break;
    case 3: expected = 6.0 * static_cast<double>(a.invariants().triangles.t); break;
    default: throw Error(ErrorCode::InvalidParams, "trace identities cover powers 1..3");
  }
  return compare("trace" + std::to_string(power), sum, expected, tol.spectral(std::abs(expected)),
                 Comparison::Identity);
}

CheckOutcome vecl_check(double a, double b, std::span<const double> xs, double p,
                        double rel_tol) {
  const std::string id = "vecl";
  if (xs.size() < 3) return vacuous(id, "k >= 3");
  if (!(p > 2)) return vacuous(id, "p > 2");
  if (!(b >= 0 && b <= a)) return vacuous(id, "0 <= b <= a");
  double sq = 0;
  for (double x : xs) {
    if (!(x >= 0 && x <= a)) return vacuous(id, "0 <= x_i <= a");
    sq += x * x;
  }
  const double sq_band = rel_tol * (a * a + b * b);
  if (sq > a * a + b * b + sq_band) return vacuous(id, "sum x_i^2 <= a^2 + b^2", sq_band);

  double lhs = 0;
  for (double x : xs) lhs += std::pow(x, p);
  const double rhs = std::pow(a, p) + std::pow(b, p);
  const double band = rel_tol * rhs;
  CheckOutcome out = compare(id, lhs, rhs, band, Comparison::Strict);
  if (out.verdict == Verdict::Holds) return out;

  // Within the band: only the extremal configuration is an admissible equality.
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const double pos_band = rel_tol * a;
  bool extremal = std::abs(sorted[0] - a) <= pos_band && std::abs(sorted[1] - b) <= pos_band;
  for (std::size_t i = 2; i < sorted.size(); ++i) extremal = extremal && sorted[i] <= pos_band;
  if (extremal && std::abs(rhs - lhs) <= band) {
    out.verdict = Verdict::HoldsWithEquality;
    out.witness = Witness{"configuration", {}, "(a, b, 0, ..., 0)"};
  }
  return out;
}

namespace {

constexpr std::array<PredicateInfo, 16> kPredicates{{
    {PredicateId::Nosal, "nosal"},
    {PredicateId::BoniLemma, "boni"},
    {PredicateId::Th1, "th1"},
    {PredicateId::Colem, "colem"},
    {PredicateId::Supt, "supt"},
    {PredicateId::Mt, "mt"},
    {PredicateId::Th2, "th2"},
    {PredicateId::In1, "in1"},
    {PredicateId::In2, "in2"},
    {PredicateId::In2Bound, "in2_bound"},
    {PredicateId::In3, "in3"},
    {PredicateId::In3Bound, "in3_bound"},
    {PredicateId::Trace1, "trace1"},
    {PredicateId::Trace2, "trace2"},
    {PredicateId::Trace3, "trace3"},
    {PredicateId::Conjecture2, "conj2"},
}};

}  // namespace

std::span<const PredicateInfo> all_predicates() { return kPredicates; }

std::string_view to_string(PredicateId id) {
  for (const auto& info : kPredicates) {
    if (info.id == id) return info.name;
  }
  return "?";
}

std::optional<PredicateId> parse_predicate(std::string_view name) {
  for (const auto& info : kPredicates) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

CheckOutcome evaluate(PredicateId id, const Analysis& a, const VerifyOptions& opt) {
  auto relation = [&](std::size_t index) {
    return k4_relations_check(a.graph(), a.invariants())[index];
  };
  switch (id) {
    case PredicateId::Nosal: return check_nosal(a, opt.tol);
    case PredicateId::BoniLemma: return check_boni_lemma(a, opt.tol);
    case PredicateId::Th1: return check_th1(a, opt.tol);
    case PredicateId::Colem: return check_colem(a);
    case PredicateId::Supt: return check_supt(a, opt.tol);
    case PredicateId::Mt: return check_mt(a, opt.tol);
    case PredicateId::Th2: return check_th2(a, opt.tol);
    case PredicateId::In1: return relation(0);
    case PredicateId::In2: return relation(1);
    case PredicateId::In2Bound: return relation(2);
    case PredicateId::In3: return relation(3);
    case PredicateId::In3Bound: return relation(4);
    case PredicateId::Trace1: return check_trace(a, 1, opt.tol);
    case PredicateId::Trace2: return check_trace(a, 2, opt.tol);
    case PredicateId::Trace3: return check_trace(a, 3, opt.tol);
    case PredicateId::Conjecture2: return check_conjecture2(a, opt.r, opt.tol);
  }
  throw Error(ErrorCode::InvalidParams, "unknown predicate");
}

}  // namespace specbound
