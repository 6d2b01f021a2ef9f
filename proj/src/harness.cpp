#include "specbound/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "specbound/enumerate.hpp"
#include "specbound/error.hpp"
#include "specbound/graph6.hpp"
#include "specbound/report.hpp"

namespace specbound {

namespace {

constexpr std::uint64_t kChunk = 4096;

void take_min(std::optional<double>& best, std::string& where, double slack,
              const std::string& graph6) {
  if (!best || slack < *best || (slack == *best && graph6 < where)) {
    best = slack;
    where = graph6;
  }
}

struct Partial {
  std::vector<Tally> tallies;
  std::vector<ExploratoryStats> explore;
  std::vector<Violation> violations;

  void merge(const Partial& o) {
    for (std::size_t i = 0; i < tallies.size(); ++i) {
      Tally& t = tallies[i];
      const Tally& u = o.tallies[i];
      t.holds += u.holds;
      t.equality += u.equality;
      t.vacuous += u.vacuous;
      t.violated += u.violated;
      if (u.min_slack) take_min(t.min_slack, t.min_slack_graph6, *u.min_slack, u.min_slack_graph6);
    }
    for (std::size_t i = 0; i < explore.size(); ++i) {
      ExploratoryStats& e = explore[i];
      const ExploratoryStats& f = o.explore[i];
      e.evaluated += f.evaluated;
      e.vacuous += f.vacuous;
      e.negative += f.negative;
      e.slack_sum += f.slack_sum;
      if (f.min_slack) take_min(e.min_slack, e.min_slack_graph6, *f.min_slack, f.min_slack_graph6);
    }
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
};

class Scanner {
 public:
  Scanner(const std::vector<PredicateId>& predicates, const ScanOptions& opt) : opt_(opt) {
    for (PredicateId id : predicates) {
      auto& list = is_asserting(id, opt.verify) ? asserting_ : exploratory_;
      if (std::find(list.begin(), list.end(), id) == list.end()) list.push_back(id);
    }
  }

  ScanReport run(std::string scope, std::uint64_t count,
                 const std::function<Graph(std::uint64_t)>& source) const {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t chunks = (count + kChunk - 1) / kChunk;
    std::vector<Partial> partials(chunks, empty());
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
      while (true) {
        const std::uint64_t c = next.fetch_add(1);
        if (c >= chunks) return;
        try {
          const std::uint64_t end = std::min(count, (c + 1) * kChunk);
          for (std::uint64_t i = c * kChunk; i < end; ++i) accumulate(partials[c], source(i));
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(chunks);
          return;
        }
      }
    };
    const int jobs = std::max(1, opt_.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    // Chunk order is fixed, so floating sums do not depend on the schedule.
    Partial total = empty();
    for (const auto& p : partials) total.merge(p);
    std::sort(total.violations.begin(), total.violations.end());

    ScanReport report;
    report.scope = std::move(scope);
    report.graphs_examined = count;
    for (std::size_t i = 0; i < asserting_.size(); ++i) {
      report.predicates.push_back({std::string(to_string(asserting_[i])), total.tallies[i]});
    }
    for (std::size_t i = 0; i < exploratory_.size(); ++i) {
      std::string name(to_string(exploratory_[i]));
      if (exploratory_[i] == PredicateId::Conjecture2) name += "_r" + std::to_string(opt_.verify.r);
      report.exploratory.push_back({std::move(name), total.explore[i]});
    }
    report.violations = std::move(total.violations);
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }

 private:
  Partial empty() const {
    Partial p;
    p.tallies.resize(asserting_.size());
    p.explore.resize(exploratory_.size());
    return p;
  }

  void accumulate(Partial& part, const Graph& g) const {
    const Analysis analysis(g);
    std::optional<std::string> g6;
    auto graph6 = [&]() -> const std::string& {
      if (!g6) g6 = to_graph6(g);
      return *g6;
    };
    for (std::size_t i = 0; i < asserting_.size(); ++i) {
      const CheckOutcome o = evaluate(asserting_[i], analysis, opt_.verify);
      Tally& t = part.tallies[i];
      switch (o.verdict) {
        case Verdict::Holds: ++t.holds; break;
        case Verdict::HoldsWithEquality: ++t.equality; break;
        case Verdict::Vacuous: ++t.vacuous; break;
        case Verdict::Violated: {
          ++t.violated;
          Violation v{graph6(), o.predicate_id, o.slack, ""};
          if (o.witness) v.detail = o.witness->kind + (o.witness->detail.empty() ? "" : ": " + o.witness->detail);
          part.violations.push_back(std::move(v));
          break;
        }
      }
      if (o.slack && (o.verdict == Verdict::Holds || o.verdict == Verdict::HoldsWithEquality)) {
        take_min(t.min_slack, t.min_slack_graph6, *o.slack, graph6());
      }
    }
    for (std::size_t i = 0; i < exploratory_.size(); ++i) {
      const CheckOutcome o = evaluate(exploratory_[i], analysis, opt_.verify);
      ExploratoryStats& e = part.explore[i];
      if (o.verdict == Verdict::Vacuous || !o.slack) {
        ++e.vacuous;
        continue;
      }
      ++e.evaluated;
      if (o.verdict == Verdict::Violated) ++e.negative;
      e.slack_sum += *o.slack;
      take_min(e.min_slack, e.min_slack_graph6, *o.slack, graph6());
    }
  }

  ScanOptions opt_;
  std::vector<PredicateId> asserting_;
  std::vector<PredicateId> exploratory_;
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

nlohmann::json number_or_null(const std::optional<double>& v) {
  return v ? nlohmann::json(round15(*v)) : nlohmann::json(nullptr);
}

}  // namespace

const Tally* ScanReport::tally(std::string_view name) const {
  for (const auto& p : predicates) {
    if (p.name == name) return &p.tally;
  }
  return nullptr;
}

const ExploratoryStats* ScanReport::exploration(std::string_view name) const {
  for (const auto& e : exploratory) {
    if (e.name == name) return &e.stats;
  }
  return nullptr;
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ index);
}

ScanReport scan_exhaustive(int n, const std::vector<PredicateId>& predicates,
                           const ScanOptions& opt) {
  const LabeledGraphs all(n, opt.allow_order_8);
  return Scanner(predicates, opt)
      .run("exhaustive-n" + std::to_string(n), all.count(),
           [&](std::uint64_t i) { return all.at(i); });
}

ScanReport scan_random(int n, std::uint64_t samples, double p, std::uint64_t seed,
                       const std::vector<PredicateId>& predicates, const ScanOptions& opt) {
  if (n < 1 || n > 40) throw Error(ErrorCode::OrderTooLarge, "random scans need 1 <= n <= 40");
  if (samples < 1) throw Error(ErrorCode::InvalidParams, "random scans need samples >= 1");
  if (!(p >= 0 && p <= 1)) throw Error(ErrorCode::InvalidParams, "p must lie in [0, 1]");
  std::ostringstream scope;
  scope << "random-n" << n << "-samples" << samples << "-p" << format15(p) << "-seed" << seed;
  return Scanner(predicates, opt).run(scope.str(), samples, [&](std::uint64_t i) {
    return gnp(n, p, sample_seed(seed, i));
  });
}

ScanReport scan_families(const std::vector<FamilySpec>& specs,
                         const std::vector<PredicateId>& predicates, const ScanOptions& opt) {
  std::vector<Graph> graphs;
  graphs.reserve(specs.size());
  for (const auto& s : specs) graphs.push_back(build(s));
  return scan_graphs("families-" + std::to_string(specs.size()), graphs, predicates, opt);
}

ScanReport scan_graphs(std::string scope, const std::vector<Graph>& graphs,
                       const std::vector<PredicateId>& predicates, const ScanOptions& opt) {
  return Scanner(predicates, opt).run(std::move(scope), graphs.size(),
                                      [&](std::uint64_t i) { return graphs[i]; });
}

VeclSampleReport vecl_sample(std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  auto uniform = [&] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };
  VeclSampleReport out;
  std::vector<double> xs;
  while (out.samples < samples) {
    const int k = 3 + static_cast<int>(engine() % 6);
    const double p = 6.0 - 4.0 * uniform();
    const double a = 1.0 - uniform();
    const double b = a * uniform();
    xs.assign(static_cast<std::size_t>(k), 0.0);
    double sq = 0;
    for (double& x : xs) {
      x = a * uniform();
      sq += x * x;
    }
    if (sq > a * a + b * b) {
      ++out.rejected_draws;
      continue;
    }
    ++out.samples;
    CheckOutcome o = vecl_check(a, b, xs, p);
    switch (o.verdict) {
      case Verdict::Holds: ++out.holds; break;
      case Verdict::HoldsWithEquality: ++out.equality; break;
      case Verdict::Violated:
        ++out.violated;
        out.violations.push_back(o);
        break;
      case Verdict::Vacuous: break;
    }
    if (o.slack && (!out.min_slack || *o.slack < *out.min_slack)) out.min_slack = o.slack;
  }
  return out;
}

nlohmann::json to_json(const VeclSampleReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  return {{"samples", r.samples},
          {"rejected_draws", r.rejected_draws},
          {"holds", r.holds},
          {"equality", r.equality},
          {"violated", r.violated},
          {"min_slack", number_or_null(r.min_slack)},
          {"violations", std::move(violations)}};
}

nlohmann::json to_json(const ScanReport& r, bool include_timing) {
  nlohmann::json preds = nlohmann::json::object();
  for (const auto& p : r.predicates) {
    preds[p.name] = {{"holds", p.tally.holds},
                     {"equality", p.tally.equality},
                     {"vacuous", p.tally.vacuous},
                     {"violated", p.tally.violated},
                     {"min_slack", number_or_null(p.tally.min_slack)},
                     {"min_slack_graph6", p.tally.min_slack
                                              ? nlohmann::json(p.tally.min_slack_graph6)
                                              : nlohmann::json(nullptr)}};
  }
  nlohmann::json explore = nlohmann::json::object();
  for (const auto& e : r.exploratory) {
    explore[e.name] = {{"exploratory", true},
                       {"evaluated", e.stats.evaluated},
                       {"vacuous", e.stats.vacuous},
                       {"below_zero", e.stats.negative},
                       {"min_slack", number_or_null(e.stats.min_slack)},
                       {"mean_slack", number_or_null(e.stats.mean_slack())},
                       {"min_slack_graph6", e.stats.min_slack
                                                ? nlohmann::json(e.stats.min_slack_graph6)
                                                : nlohmann::json(nullptr)}};
  }
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"graph6", v.graph6},
                          {"predicate", v.predicate},
                          {"slack", number_or_null(v.slack)},
                          {"detail", v.detail}});
  }
  nlohmann::json j{{"scope", r.scope},
                   {"graphs_examined", r.graphs_examined},
                   {"predicates", std::move(preds)},
                   {"exploratory", std::move(explore)},
                   {"violation_count", r.violations.size()},
                   {"violations", std::move(violations)}};
  if (include_timing) j["wall_time_seconds"] = round15(r.wall_time_seconds);
  return j;
}

std::string to_csv(const ScanReport& r) {
  std::string out = "graph6,predicate,slack,detail\n";
  for (const auto& v : r.violations) {
    out += csv_field(v.graph6) + "," + csv_field(v.predicate) + "," +
           (v.slack ? format15(*v.slack) : "") + "," + csv_field(v.detail) + "\n";
  }
  return out;
}

std::string to_text(const ScanReport& r) {
  std::ostringstream os;
  os << "scope: " << r.scope << "\ngraphs examined: " << r.graphs_examined << "\n";
  for (const auto& p : r.predicates) {
    os << "  " << p.name << ": holds=" << p.tally.holds << " equality=" << p.tally.equality
       << " vacuous=" << p.tally.vacuous << " violated=" << p.tally.violated;
    if (p.tally.min_slack) {
      os << " min_slack=" << format15(*p.tally.min_slack) << " (" << p.tally.min_slack_graph6 << ")";
    }
    os << "\n";
  }
  for (const auto& e : r.exploratory) {
    os << "  [exploratory] " << e.name << ": evaluated=" << e.stats.evaluated
       << " vacuous=" << e.stats.vacuous << " below_zero=" << e.stats.negative;
    if (e.stats.min_slack) {
      os << " min_slack=" << format15(*e.stats.min_slack) << " (" << e.stats.min_slack_graph6
         << ") mean_slack=" << format15(*e.stats.mean_slack());
    }
    os << "\n";
  }
  os << "violations: " << r.violations.size() << "\n";
  for (const auto& v : r.violations) {
    os << "  " << v.graph6 << " " << v.predicate;
    if (v.slack) os << " slack=" << format15(*v.slack);
    if (!v.detail.empty()) os << " " << v.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace specbound
