// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "specbound/cli.hpp"
#include "specbound/enumerate.hpp"
#include "specbound/generators.hpp"
#include "specbound/graph6.hpp"
#include "specbound/harness.hpp"
#include "specbound/procedure.hpp"
#include "specbound/verify.hpp"
#include "specbound/walks.hpp"

using namespace specbound;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

std::vector<PredicateId> all_ids() {
  std::vector<PredicateId> ids;
  for (const auto& p : all_predicates()) ids.push_back(p.id);
  return ids;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// Shared between criteria 1, 3, 4 and 9: the CLI sweep at n = 7 plus library
// sweeps at n <= 6.
struct Sweep {
  nlohmann::json n7;
  int n7_exit = -1;
  std::vector<ScanReport> small;  // n = 1..6
};

Sweep& sweep() {
  static Sweep s = [] {
    Sweep out;
    std::istringstream in;
    std::ostringstream os, es;
    out.n7_exit = cli::run({"scan", "--exhaustive", "--n", "7", "--predicates", "all", "--r", "3",
                            "--jobs", std::to_string(jobs())},
                           in, os, es);
    out.n7 = nlohmann::json::parse(os.str());
    for (int n = 1; n <= 6; ++n) out.small.push_back(scan_exhaustive(n, all_ids(), ScanOptions{{}, jobs(), false}));
    return out;
  }();
  return s;
}

Outcome criterion1() {
  const Sweep& s = sweep();
  Outcome o;
  const auto graphs = s.n7["graphs_examined"].get<std::uint64_t>();
  const auto violations = s.n7["violations"].size();
  std::uint64_t small_violations = 0;
  for (const auto& r : s.small) small_violations += r.violations.size();
  const char* required[] = {"nosal", "boni", "th1", "colem", "mt", "th2",
                            "in1", "in2", "in2_bound", "in3", "in3_bound"};
  for (const char* name : required) {
    if (!s.n7["predicates"].contains(name) || s.n7["predicates"][name]["violated"] != 0) o.pass = false;
  }
  std::uint64_t mt_min_ok = 1;
  const auto& mt = s.n7["predicates"]["mt"];
  if (mt["min_slack"].is_null() || mt["min_slack"].get<double>() <= 0) mt_min_ok = 0;
  o.pass = o.pass && graphs == 2097152 && violations == 0 && small_violations == 0 && s.n7_exit == 0 &&
           mt_min_ok;
  o.detail = std::to_string(graphs) + " graphs at n=7, " + std::to_string(violations) +
             " violations (n<=6: " + std::to_string(small_violations) + "), exit " +
             std::to_string(s.n7_exit) + ", mt tightness " +
             (mt["min_slack"].is_null() ? std::string("none") : fmt(mt["min_slack"].get<double>()));
  return o;
}

Outcome criterion2() {
  const auto o = check_th1(generate({family::Cycle{5}}));
  const double slack = o.slack.value_or(1);
  Outcome out;
  out.pass = std::abs(slack) <= 1e-9 && o.verdict == Verdict::HoldsWithEquality;
  out.detail = "C5 th1 slack " + fmt(slack) + ", verdict " + std::string(to_string(o.verdict));
  return out;
}

Outcome criterion3() {
  const Sweep& s = sweep();
  Outcome o;
  std::uint64_t checked = 0, bad = 0;
  for (const char* name : {"trace2", "trace3"}) {
    const auto& t = s.n7["predicates"][name];
    bad += t["violated"].get<std::uint64_t>();
    checked += t["equality"].get<std::uint64_t>() + t["holds"].get<std::uint64_t>() +
               t["violated"].get<std::uint64_t>();
    for (const auto& r : s.small) {
      const Tally* tl = r.tally(name);
      bad += tl->violated;
      checked += tl->total() - tl->vacuous;
    }
  }
  o.pass = bad == 0 && checked == 2 * (2097152ull + 32768 + 1024 + 64 + 8 + 2 + 1);
  o.detail = std::to_string(checked) + " identity checks over n<=7, " + std::to_string(bad) + " outside tolerance";
  return o;
}

Outcome criterion4() {
  Outcome o;
  int families = 0, bad = 0, below_order = 0;
  for (PatternId id : kAllPatterns) {
    const Graph base = pattern_graph(id);
    const int paths = base.order() - 1;
    for (int mask = 0; mask < (1 << paths); ++mask) {
      for (int iso = 0; iso <= 2; ++iso) {
        std::vector<int> sizes;
        for (int i = 0; i < paths; ++i) sizes.push_back(1 + ((mask >> i) & 1));
        sizes.push_back(iso);
        const Graph g = blow_up({base, sizes});
        if (g.order() < 3) {
          // K2 alone: outside the theorem's order bound.
          ++below_order;
          continue;
        }
        ++families;
        const Analysis a(g);
        const double m = static_cast<double>(g.size());
        const double l1 = a.spectrum().lambda1(), l2 = a.spectrum().lambda2();
        const bool eq = std::abs(l1 * l1 + l2 * l2 - m) <= 1e-8 * m;
        const auto match = recognize_blowup(g);
        const auto th2 = check_th2(a);
        if (!eq || !match || th2.verdict != Verdict::HoldsWithEquality) ++bad;
      }
    }
  }
  // Converse: every equality case of the sweep was classified (a mismatch
  // would be a th2 violation).
  const Sweep& s = sweep();
  std::uint64_t eq_cases = s.n7["predicates"]["th2"]["equality"].get<std::uint64_t>();
  std::uint64_t th2_viol = s.n7["predicates"]["th2"]["violated"].get<std::uint64_t>();
  for (const auto& r : s.small) {
    eq_cases += r.tally("th2")->equality;
    th2_viol += r.tally("th2")->violated;
  }
  o.pass = bad == 0 && th2_viol == 0;
  o.detail = std::to_string(families) + " blow-ups equal and recognized (" + std::to_string(bad) +
             " failures, " + std::to_string(below_order) + " of order < 3 skipped); " +
             std::to_string(eq_cases) + " sweep equality cases, " + std::to_string(th2_viol) +
             " unclassified";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::uint64_t traces = 0, steps = 0, failures = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_labeled(n)) {
      if (g.size() == 0) continue;
      ++traces;
      try {
        const auto tr = run_edge_deletion(g);
        steps += tr.steps.size();
        for (const auto& c : audit_trace(tr, 1e-8))
          if (c.verdict == Verdict::Violated) ++failures;
      } catch (const std::exception&) {
        ++failures;
      }
    }
  }
  o.pass = failures == 0;
  o.detail = std::to_string(traces) + " traces, " + std::to_string(steps) + " steps, " +
             std::to_string(failures) + " failed audits";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto r = vecl_sample(100000, 20240601);
  const double x1[] = {1, 1, 0};
  const double x2[] = {0.8, 0.6, 0};
  const double x3[] = {2, 1, 0, 0};
  const double x4[] = {0, 0.5, 0, 1, 0};
  const bool e1 = vecl_check(1, 1, x1, 3).verdict == Verdict::HoldsWithEquality;
  const bool e2 = vecl_check(1, 0, x2, 3).verdict == Verdict::Holds;
  const bool e3 = vecl_check(2, 1, x3, 4).verdict == Verdict::HoldsWithEquality;
  const bool e4 = vecl_check(1, 0.5, x4, 5.5).verdict == Verdict::HoldsWithEquality;
  o.pass = r.samples == 100000 && r.violated == 0 && e1 && e2 && e3 && e4;
  o.detail = std::to_string(r.samples) + " samples, " + std::to_string(r.violated) +
             " violations; extremal configurations " + (e1 && e3 && e4 ? "detected" : "MISSED");
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::uint64_t graphs = 0, bad = 0;
  double worst = 0;
  int max_k = 0;
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : enumerate_labeled(n)) {
      const Structure st = structure(g);
      if (!st.connected() || st.is_bipartite()) continue;
      ++graphs;
      const auto p = perron(g);
      const double sum = p.vector.sum();
      try {
        for (int u = 0; u < n; ++u) {
          const auto w = wei_ratio(g, u, 1e-10, 10000);
          const double err = std::abs(w.estimate - p.vector(u) / sum);
          worst = std::max(worst, err);
          max_k = std::max(max_k, w.k_used);
          if (err > 1e-6) ++bad;
        }
        const auto r = walk_ratio_rho(g, 1e-10, 10000);
        const double err = std::abs(r.estimate - p.rho);
        worst = std::max(worst, err);
        max_k = std::max(max_k, r.k_used);
        if (err > 1e-6) ++bad;
      } catch (const std::exception&) {
        ++bad;
      }
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(graphs) + " graphs, worst error " + fmt(worst) + ", largest k " +
             std::to_string(max_k) + ", " + std::to_string(bad) + " failures";
  return o;
}

Outcome criterion8() {
  Outcome o;
  double worst = 0;
  auto check = [&](const Graph& g, std::vector<double> want) {
    std::sort(want.rbegin(), want.rend());
    const auto s = spectrum(g);
    for (int i = 0; i < g.order(); ++i) worst = std::max(worst, std::abs(s.eigenvalues(i) - want[static_cast<std::size_t>(i)]));
  };
  int cases = 0;
  for (int n = 1; n <= 16; ++n, ++cases) {
    std::vector<double> want(static_cast<std::size_t>(n), -1.0);
    want[0] = n - 1;
    check(generate({family::Complete{n}}), want);
  }
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b, ++cases) {
      std::vector<double> want(static_cast<std::size_t>(a + b), 0.0);
      want[0] = std::sqrt(a * b);
      want[1] = -std::sqrt(a * b);
      check(generate({family::CompleteBipartite{a, b}}), want);
    }
  check(generate({family::Petersen{}}), {3, 1, 1, 1, 1, 1, -2, -2, -2, -2});
  ++cases;
  o.pass = worst <= 1e-9;
  o.detail = std::to_string(cases) + " graphs, worst deviation " + fmt(worst);
  return o;
}

Outcome criterion9() {
  Outcome o;
  const Sweep& s = sweep();
  const auto& e = s.n7["exploratory"]["conj2_r3"];
  double min_slack = e["min_slack"].get<double>();
  std::string at = e["min_slack_graph6"].get<std::string>();
  std::uint64_t evaluated = e["evaluated"].get<std::uint64_t>();
  for (const auto& r : s.small) {
    const ExploratoryStats* x = r.exploration("conj2_r3");
    evaluated += x->evaluated;
    if (x->min_slack && *x->min_slack < min_slack) {
      min_slack = *x->min_slack;
      at = x->min_slack_graph6;
    }
  }
  o.pass = e["exploratory"] == true && evaluated > 0 && min_slack > -1e-8;
  o.detail = "exploratory; " + std::to_string(evaluated) + " K4-free graphs, min slack " + fmt(min_slack) +
             " at " + at;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"exhaustive soundness sweep n<=7", criterion1},
      {"th1 equality on C5", criterion2},
      {"trace identities n<=7", criterion3},
      {"th2 equality families", criterion4},
      {"procedure audit n<=6", criterion5},
      {"vecl sampling", criterion6},
      {"walk-ratio limits n<=6", criterion7},
      {"closed-form spectra", criterion8},
      {"conjecture 2 report r=3", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("%s criterion %zu: %s -- %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
