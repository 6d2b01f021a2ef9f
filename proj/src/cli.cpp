#include "specbound/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "specbound/error.hpp"
#include "specbound/graph6.hpp"
#include "specbound/harness.hpp"
#include "specbound/procedure.hpp"
#include "specbound/report.hpp"

namespace specbound::cli {

namespace {

enum class Format { Json, Csv, Text };

struct Config {
  std::string in = "-";
  std::string out;
  int n = 0;
  std::uint64_t samples = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string predicates = "all";
  double tol = 1e-8;
  int jobs = 1;
  Format format = Format::Json;
  int r = 3;
  bool exhaustive = false, random = false, families = false, allow_order_8 = false;
  std::vector<std::string> family;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<PredicateId> parse_predicates(const std::string& list) {
  std::vector<PredicateId> out;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name == "all") {
      for (const auto& info : all_predicates()) out.push_back(info.id);
    } else if (auto id = parse_predicate(name)) {
      out.push_back(*id);
    } else {
      throw UsageError("unknown predicate '" + name + "'");
    }
  }
  if (out.empty()) throw UsageError("no predicates selected");
  return out;
}

// Opens --in, treating "-" as the supplied input stream.
class Input {
 public:
  Input(const std::string& path, std::istream& fallback) {
    if (path == "-") {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ifstream>(path);
      if (!*file_) throw UsageError("cannot open input '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::istream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_;
};

// Streams a JSON array element by element so batch output never sits in memory.
class JsonArrayWriter {
 public:
  explicit JsonArrayWriter(std::ostream& os) : os_(os) { os_ << "[\n"; }
  void push(const nlohmann::json& j) {
    os_ << (first_ ? "" : ",\n") << j.dump();
    first_ = false;
  }
  void close() { os_ << (first_ ? "" : "\n") << "]\n"; }

 private:
  std::ostream& os_;
  bool first_ = true;
};

int cmd_gen(const Config& cfg, std::ostream& out) {
  if (cfg.family.empty()) throw UsageError("gen needs at least one --family");
  std::optional<JsonArrayWriter> json;
  if (cfg.format == Format::Json) json.emplace(out);
  for (const auto& text : cfg.family) {
    const Graph g = build(parse_family(text));
    if (json) {
      json->push({{"family", text}, {"n", g.order()}, {"m", g.size()}, {"graph6", to_graph6(g)}});
    } else {
      out << to_graph6(g) << "\n";
    }
  }
  if (json) json->close();
  return 0;
}

int cmd_invariants(const Config& cfg, std::istream& in, std::ostream& out) {
  Input input(cfg.in, in);
  std::optional<JsonArrayWriter> json;
  if (cfg.format == Format::Json) json.emplace(out);
  if (cfg.format == Format::Csv) out << "graph6,n,m,t,bk,tpp,k4_0,k4_1,k4_2,k4\n";
  read_graph6_stream(input.get(), [&](const Graph& g, std::size_t) {
    const InvariantProfile p = invariant_profile(g);
    const std::string g6 = to_graph6(g);
    if (json) {
      nlohmann::json j = to_json(p);
      j["graph6"] = g6;
      json->push(j);
    } else if (cfg.format == Format::Csv) {
      out << g6 << "," << p.n << "," << p.m << "," << p.triangles.t << "," << p.book.bk << ","
          << p.tpp.tpp << "," << p.k4.k4_0 << "," << p.k4.k4_1 << "," << p.k4.k4_2 << ","
          << p.k4.k4 << "\n";
    } else {
      out << g6 << ": n=" << p.n << " m=" << p.m << " t=" << p.triangles.t
          << " bk=" << p.book.bk << " t''=" << p.tpp.tpp << " k4=(" << p.k4.k4_0 << ","
          << p.k4.k4_1 << "," << p.k4.k4_2 << "," << p.k4.k4 << ")\n";
    }
  });
  if (json) json->close();
  return 0;
}

int cmd_spectrum(const Config& cfg, std::istream& in, std::ostream& out) {
  Input input(cfg.in, in);
  std::optional<JsonArrayWriter> json;
  if (cfg.format == Format::Json) json.emplace(out);
  if (cfg.format == Format::Csv) out << "graph6,index,eigenvalue\n";
  read_graph6_stream(input.get(), [&](const Graph& g, std::size_t) {
    const std::string g6 = to_graph6(g);
    const Spectrum<double> s = spectrum<double>(g);
    if (json) {
      nlohmann::json j = to_json(s);
      j["graph6"] = g6;
      j["perron"] = to_json(perron<double>(g));
      json->push(j);
    } else {
      for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
        if (cfg.format == Format::Csv) {
          out << g6 << "," << i + 1 << "," << format15(s.eigenvalues(i)) << "\n";
        } else {
          out << (i == 0 ? g6 + ":" : "") << " " << format15(s.eigenvalues(i));
        }
      }
      if (cfg.format == Format::Text) out << "\n";
    }
  });
  if (json) json->close();
  return 0;
}

int cmd_check(const Config& cfg, std::istream& in, std::ostream& out) {
  Input input(cfg.in, in);
  const auto predicates = parse_predicates(cfg.predicates);
  VerifyOptions vopt;
  vopt.tol.relative = cfg.tol;
  vopt.r = cfg.r;
  std::optional<JsonArrayWriter> json;
  if (cfg.format == Format::Json) json.emplace(out);
  if (cfg.format == Format::Csv) out << "graph6,predicate,verdict,slack,exploratory\n";
  std::uint64_t violations = 0;
  read_graph6_stream(input.get(), [&](const Graph& g, std::size_t) {
    const Analysis analysis(g);
    const std::string g6 = to_graph6(g);
    nlohmann::json outcomes = nlohmann::json::array();
    for (PredicateId id : predicates) {
      const CheckOutcome o = evaluate(id, analysis, vopt);
      const bool asserting = is_asserting(id, vopt);
      if (asserting && o.verdict == Verdict::Violated) ++violations;
      if (json) {
        nlohmann::json j = to_json(o);
        j["exploratory"] = !asserting;
        outcomes.push_back(std::move(j));
      } else if (cfg.format == Format::Csv) {
        out << g6 << "," << o.predicate_id << "," << to_string(o.verdict) << ","
            << (o.slack ? format15(*o.slack) : "") << "," << (asserting ? "false" : "true") << "\n";
      } else {
        out << g6 << " " << o.predicate_id << " " << to_string(o.verdict);
        if (o.slack) out << " slack=" << format15(*o.slack);
        if (!asserting) out << " (exploratory)";
        out << "\n";
      }
    }
    if (json) json->push({{"graph6", g6}, {"outcomes", std::move(outcomes)}});
  });
  if (json) json->close();
  return violations ? 1 : 0;
}

int cmd_procedure(const Config& cfg, std::istream& in, std::ostream& out) {
  Input input(cfg.in, in);
  std::optional<JsonArrayWriter> json;
  if (cfg.format == Format::Json) json.emplace(out);
  if (cfg.format == Format::Csv) out << "graph6,check,verdict,slack\n";
  std::uint64_t violations = 0;
  read_graph6_stream(input.get(), [&](const Graph& g, std::size_t) {
    const ProcedureTrace tr = run_edge_deletion(g);
    const auto audit = audit_trace(tr, cfg.tol);
    const std::string g6 = to_graph6(g);
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& o : audit) {
      if (o.verdict == Verdict::Violated) ++violations;
      if (json) {
        checks.push_back(to_json(o));
      } else if (cfg.format == Format::Csv) {
        out << g6 << "," << o.predicate_id << "," << to_string(o.verdict) << ","
            << (o.slack ? format15(*o.slack) : "") << "\n";
      }
    }
    if (json) {
      json->push({{"graph6", g6}, {"trace", to_json(tr)}, {"audit", std::move(checks)}});
    } else if (cfg.format == Format::Text) {
      out << g6 << ": k=" << tr.k << " stop=" << to_string(tr.stop_reason)
          << " final=" << to_graph6(tr.final_graph) << "\n";
      for (const auto& s : tr.steps) {
        out << "  step " << s.l + 1 << ": remove {" << s.removed_edge.first << ","
            << s.removed_edge.second << "} product=" << format15(s.product)
            << " threshold=" << format15(s.threshold) << " rho " << format15(s.rho_before)
            << " -> " << format15(s.rho_after) << "\n";
      }
      for (const auto& o : audit) {
        out << "  " << o.predicate_id << ": " << to_string(o.verdict);
        if (o.slack) out << " slack=" << format15(*o.slack);
        out << "\n";
      }
    }
  });
  if (json) json->close();
  return violations ? 1 : 0;
}

int cmd_scan(const Config& cfg, std::istream& in, std::ostream& out) {
  const auto predicates = parse_predicates(cfg.predicates);
  ScanOptions opt;
  opt.verify.tol.relative = cfg.tol;
  opt.verify.r = cfg.r;
  opt.jobs = cfg.jobs;
  opt.allow_order_8 = cfg.allow_order_8;
  const int modes = int(cfg.exhaustive) + int(cfg.random) + int(cfg.families);
  if (modes > 1) throw UsageError("choose one of --exhaustive, --random, --families");

  ScanReport report;
  if (cfg.exhaustive) {
    if (cfg.n < 1) throw UsageError("--exhaustive needs --n");
    report = scan_exhaustive(cfg.n, predicates, opt);
  } else if (cfg.random) {
    if (cfg.n < 1) throw UsageError("--random needs --n");
    report = scan_random(cfg.n, cfg.samples, cfg.p, cfg.seed, predicates, opt);
  } else if (cfg.families) {
    std::vector<FamilySpec> specs;
    for (const auto& f : cfg.family) specs.push_back(parse_family(f));
    if (specs.empty() && cfg.in != "") {
      Input input(cfg.in, in);
      std::string line;
      while (std::getline(input.get(), line)) {
        if (line.empty() || line.starts_with("#")) continue;
        specs.push_back(parse_family(line));
      }
    }
    if (specs.empty()) throw UsageError("--families needs --family or a spec file on --in");
    report = scan_families(specs, predicates, opt);
  } else {
    // Plain batch scan of graph6 input.
    Input input(cfg.in, in);
    std::vector<Graph> graphs;
    read_graph6_stream(input.get(), [&](const Graph& g, std::size_t) { graphs.push_back(g); });
    report = scan_graphs("input-" + std::to_string(graphs.size()), graphs, predicates, opt);
  }

  switch (cfg.format) {
    case Format::Json: out << to_json(report).dump(2) << "\n"; break;
    case Format::Csv: out << to_csv(report); break;
    case Format::Text: out << to_text(report); break;
  }
  return report.violations.empty() ? 0 : 1;
}

int cmd_vecl(const Config& cfg, std::ostream& out) {
  if (cfg.samples < 1) throw UsageError("vecl needs --samples >= 1");
  const VeclSampleReport r = vecl_sample(cfg.samples, cfg.seed);
  if (cfg.format == Format::Text) {
    out << "samples=" << r.samples << " holds=" << r.holds << " equality=" << r.equality
        << " violated=" << r.violated;
    if (r.min_slack) out << " min_slack=" << format15(*r.min_slack);
    out << "\n";
  } else {
    out << to_json(r).dump(2) << "\n";
  }
  return r.violated ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Config cfg;
  CLI::App app{"Spectral and combinatorial bound verification for small graphs", "specbound"};
  app.require_subcommand(1, 1);
  const std::map<std::string, Format> formats{
      {"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};

  auto io = [&](CLI::App* sub) {
    sub->add_option("--in", cfg.in, "graph6 input file, '-' for stdin");
    sub->add_option("--out", cfg.out, "write the report here instead of stdout");
    sub->add_option("--format", cfg.format, "json, csv or text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--tol", cfg.tol, "relative tolerance for spectral comparisons")
        ->check(CLI::PositiveNumber);
  };
  auto predicate_flags = [&](CLI::App* sub) {
    sub->add_option("--predicates", cfg.predicates, "comma-separated predicate ids or 'all'");
    sub->add_option("--r", cfg.r, "clique bound r for conj2 (K_{r+1}-free)")->check(CLI::Range(2, 63));
  };

  CLI::App* gen = app.add_subcommand("gen", "build graphs from family specs, print graph6");
  io(gen);
  gen->add_option("--family", cfg.family, "family spec, repeatable");
  CLI::App* inv = app.add_subcommand("invariants", "combinatorial invariants per input graph");
  io(inv);
  CLI::App* spec = app.add_subcommand("spectrum", "adjacency spectrum and Perron data");
  io(spec);
  CLI::App* check = app.add_subcommand("check", "evaluate predicates on input graphs");
  io(check);
  predicate_flags(check);
  CLI::App* proc = app.add_subcommand("procedure", "run and audit the edge-deletion procedure");
  io(proc);
  CLI::App* scan = app.add_subcommand("scan", "exhaustive, random or family scans");
  io(scan);
  predicate_flags(scan);
  scan->add_flag("--exhaustive", cfg.exhaustive, "all labeled graphs of order --n");
  scan->add_flag("--random", cfg.random, "G(n,p) samples");
  scan->add_flag("--families", cfg.families, "graphs from --family specs");
  scan->add_option("--family", cfg.family, "family spec, repeatable");
  scan->add_option("--n", cfg.n, "order");
  scan->add_option("--samples", cfg.samples, "number of random samples");
  scan->add_option("--p", cfg.p, "edge probability")->check(CLI::Range(0.0, 1.0));
  scan->add_option("--seed", cfg.seed, "random seed");
  scan->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 1024));
  scan->add_flag("--allow-order-8", cfg.allow_order_8, "permit exhaustive scans at n = 8");
  CLI::App* vecl = app.add_subcommand("vecl", "sample the power-sum lemma");
  io(vecl);
  vecl->add_option("--samples", cfg.samples, "number of feasible samples");
  vecl->add_option("--seed", cfg.seed, "random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      err << "error: cannot open output '" << cfg.out << "'\n";
      return 2;
    }
    sink = &file;
  }

  try {
    if (gen->parsed()) return cmd_gen(cfg, *sink);
    if (inv->parsed()) return cmd_invariants(cfg, in, *sink);
    if (spec->parsed()) return cmd_spectrum(cfg, in, *sink);
    if (check->parsed()) return cmd_check(cfg, in, *sink);
    if (proc->parsed()) return cmd_procedure(cfg, in, *sink);
    if (scan->parsed()) return cmd_scan(cfg, in, *sink);
    if (vecl->parsed()) return cmd_vecl(cfg, *sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace specbound::cli
