#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string_view>

#include "eigendeg/bounds.hpp"
#include "eigendeg/error.hpp"
#include "eigendeg/generators.hpp"
#include "eigendeg/graph_io.hpp"
#include "eigendeg/quasirandom.hpp"
#include "eigendeg/serialize.hpp"
#include "eigendeg/spectrum.hpp"

namespace eigendeg::cli {

namespace {

constexpr int kTextDigits = 9;

struct CommonOptions {
  std::string input = "-";
  std::string positional_input;
  std::string format = "graph6";
  double tol = kDefaultCompareTol;
  double solver_tol = kDefaultSolverTol;
  std::string out = "-";
  std::string output_format;
  unsigned threads = 1;
};

struct FamilyOptions {
  std::string kind = "gnp";
  double p = 0.5;
  std::uint64_t seed = 42;
  std::vector<int> grid{32, 64, 128, 256};
  double tau = Thresholds{}.tau;
  double rho = Thresholds{}.rho;
  std::string csv_path;
};

struct GenOptions {
  std::string kind;
  int n = 0;
  std::optional<int> part;
  double p = 0.5;
  std::uint64_t seed = 42;
};

/// Failure that maps to exit code 1 with a message on stderr.
struct UsageError {
  std::string message;
};

class OutputSink {
 public:
  OutputSink(const std::string& path, std::ostream& fallback) {
    if (path == "-" || path.empty()) {
      stream_ = &fallback;
      return;
    }
    file_.open(path, std::ios::binary);
    if (!file_) throw UsageError{"cannot open output file " + path};
    stream_ = &file_;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

std::string read_all(const CommonOptions& opts, std::istream& in) {
  const std::string& path =
      opts.positional_input.empty() ? opts.input : opts.positional_input;
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError{"cannot open input file " + path};
  return std::string(std::istreambuf_iterator<char>(file), {});
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

// Calls visit(id, graph) for each input graph: one per non-empty graph6 line,
// or the single graph of an edge-list file.
void for_each_input_graph(
    const CommonOptions& opts, std::istream& in,
    const std::function<void(const std::string&, const Graph&)>& visit) {
  const std::string text = read_all(opts, in);
  if (opts.format == "edgelist") {
    Graph g = parse_edge_list(text);
    visit(g.order() <= kMaxGraph6Order ? graph6_encode(g) : "edgelist", g);
    return;
  }
  std::string_view rest = text;
  std::size_t line_no = 0;
  bool any = false;
  while (!rest.empty()) {
    ++line_no;
    const std::size_t eol = rest.find('\n');
    std::string_view line = strip(rest.substr(0, eol));
    rest.remove_prefix(eol == std::string_view::npos ? rest.size() : eol + 1);
    if (line.empty()) continue;
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    Graph g = [&] {
      try {
        return graph6_decode(line);
      } catch (const Error& e) {
        throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.detail());
      }
    }();
    any = true;
    visit(std::string(line), g);
  }
  if (!any) throw UsageError{"no graphs in input"};
}

std::string text_values(const Spectrum& s) {
  std::string out;
  for (double v : s.values) {
    if (!out.empty()) out += ' ';
    out += format_number(v, kTextDigits);
  }
  return out;
}

int cmd_spectrum(const CommonOptions& opts, std::istream& in, std::ostream& out) {
  const std::string format = opts.output_format.empty() ? "text" : opts.output_format;
  if (format == "csv") out << "graph,matrix,k,value\n";
  for_each_input_graph(opts, in, [&](const std::string& id, const Graph& g) {
    const Spectrum mu = adjacency_spectrum(g, opts.solver_tol);
    const Spectrum lambda = laplacian_spectrum(g, opts.solver_tol);
    if (format == "json") {
      out << "{\"graph\":" << json_string(id) << ",\"n\":" << g.order()
          << ",\"adjacency\":" << to_json(mu) << ",\"laplacian\":" << to_json(lambda)
          << "}\n";
    } else if (format == "csv") {
      for (const auto& [name, s] : {std::pair{"adjacency", &mu}, {"laplacian", &lambda}}) {
        for (std::size_t k = 0; k < s->size(); ++k) {
          out << id << ',' << name << ',' << k + 1 << ','
              << format_number(s->values[k]) << '\n';
        }
      }
    } else {
      out << "graph " << id << " n=" << g.order() << " m=" << g.edge_count() << '\n'
          << "  adjacency: " << text_values(mu) << '\n'
          << "  laplacian: " << text_values(lambda) << '\n';
    }
  });
  return kExitOk;
}

void write_check_text(const BoundSet& set, std::ostream& out) {
  out << "graph " << set.graph_id << " n=" << set.n << " m=" << set.m
      << " tol=" << format_number(set.tol, kTextDigits) << ": "
      << (set.all_hold() ? "all hold" : "VIOLATION") << '\n';
  for (const CheckOutcome& o : set.outcomes) {
    out << "  " << std::left << std::setw(22) << o.name() << std::setw(9)
        << (o.holds ? "holds" : "VIOLATED")
        << "slack=" << format_number(o.worst_slack, kTextDigits);
    if (o.witness_k) out << " k=" << *o.witness_k;
    if (o.vacuous()) {
      out << " (vacuous)";
    } else if (std::abs(o.worst_slack) <= set.tol) {
      out << " (equality)";
    }
    out << '\n';
  }
}

int cmd_check(const CommonOptions& opts, std::istream& in, std::ostream& out,
              std::ostream& err) {
  const std::string format = opts.output_format.empty() ? "text" : opts.output_format;
  if (format == "csv") out << bound_csv_header();
  bool violated = false;
  for_each_input_graph(opts, in, [&](const std::string& id, const Graph& g) {
    const BoundSet set = check_all(g, opts.tol, id, opts.solver_tol);
    if (format == "json") {
      out << to_json(set) << '\n';
    } else if (format == "csv") {
      out << to_csv_rows(set);
    } else {
      write_check_text(set, out);
    }
    for (const CheckOutcome& o : set.outcomes) {
      if (!o.holds) {
        violated = true;
        err << "violation: graph " << set.graph_id << " check " << o.name()
            << " slack " << format_number(o.worst_slack) << " at k="
            << (o.witness_k ? std::to_string(*o.witness_k) : "-") << '\n';
      }
    }
  });
  return violated ? kExitViolation : kExitOk;
}

int cmd_scan(const CommonOptions& opts, int n, std::ostream& out) {
  const ScanSummary summary = scan_labeled(n, opts.tol, opts.threads, opts.solver_tol);
  const std::string format = opts.output_format.empty() ? "text" : opts.output_format;
  auto argmin = [&](const ScanCheckSummary& c) {
    return graph6_encode(Graph::from_mask(n, c.argmin_mask));
  };
  if (format == "json") {
    out << "{\"n\":" << summary.n << ",\"graphs\":" << summary.graphs
        << ",\"tol\":" << format_number(summary.tol) << ",\"violations\":"
        << summary.violations() << ",\"checks\":[";
    bool first = true;
    for (const ScanCheckSummary& c : summary.checks) {
      if (!first) out << ',';
      first = false;
      out << "{\"name\":" << json_string(to_string(c.id)) << ",\"min_slack\":";
      if (c.witness_k) {
        out << format_number(c.min_slack) << ",\"argmin\":" << json_string(argmin(c))
            << ",\"witness_k\":" << *c.witness_k;
      } else {
        out << json_string(format_number(c.min_slack))
            << ",\"argmin\":null,\"witness_k\":null";
      }
      out << ",\"violations\":" << c.violations << '}';
    }
    out << "]}\n";
  } else if (format == "csv") {
    out << "check,min_slack,argmin,witness_k,violations\n";
    for (const ScanCheckSummary& c : summary.checks) {
      out << to_string(c.id) << ',' << format_number(c.min_slack) << ','
          << (c.witness_k ? argmin(c) : "") << ','
          << (c.witness_k ? std::to_string(*c.witness_k) : "") << ','
          << c.violations << '\n';
    }
  } else {
    out << "scan n=" << summary.n << " graphs=" << summary.graphs
        << " tol=" << format_number(summary.tol, kTextDigits)
        << " violations=" << summary.violations() << '\n';
    for (const ScanCheckSummary& c : summary.checks) {
      out << "  " << std::left << std::setw(22) << to_string(c.id)
          << "min_slack=" << format_number(c.min_slack, kTextDigits);
      if (c.witness_k) out << " argmin=" << argmin(c) << " k=" << *c.witness_k;
      out << " violations=" << c.violations << '\n';
    }
  }
  return summary.violations() == 0 ? kExitOk : kExitViolation;
}

void write_family_text(const TrendReport& r, std::ostream& out) {
  out << "family " << to_string(r.spec.kind);
  if (r.spec.kind == FamilyKind::kGnp) {
    out << " p=" << format_number(r.spec.p, kTextDigits) << " seed=" << r.spec.seed;
  }
  out << " tau=" << format_number(r.thresholds.tau, kTextDigits)
      << " rho=" << format_number(r.thresholds.rho, kTextDigits) << '\n';
  out << std::left;
  for (const char* h : {"n", "m", "t1", "t2", "t3", "c1", "c2", "c3", "s_norm"}) {
    out << std::setw(16) << h;
  }
  out << '\n';
  for (const TrendPoint& pt : r.points) {
    out << std::setw(16) << pt.n << std::setw(16) << pt.m;
    for (double v : {pt.t1, pt.t2, pt.t3, pt.c1, pt.c2, pt.c3, pt.s_norm}) {
      out << std::setw(16) << format_number(v, kTextDigits);
    }
    out << '\n';
  }
  for (const ConditionVerdict& v : r.verdicts) {
    out << "  " << std::setw(6) << to_string(v.condition) << std::setw(14)
        << to_string(v.verdict) << "decay_ratio=" << format_number(v.decay_ratio, kTextDigits)
        << " final=" << format_number(v.final_value, kTextDigits) << '\n';
  }
  for (const std::string& w : r.warnings) out << "  warning: " << w << '\n';
}

int cmd_family(const CommonOptions& opts, const FamilyOptions& fam, std::ostream& out) {
  FamilySpec spec;
  const auto kind = parse_family_kind(fam.kind);
  if (!kind) throw Error(ErrorCode::kInvalidFamilyParams, "unknown family kind " + fam.kind);
  spec.kind = *kind;
  spec.p = fam.p;
  spec.seed = fam.seed;
  spec.grid = fam.grid;
  spec.tol = opts.tol;
  const TrendReport report =
      scan_family(spec, Thresholds{fam.tau, fam.rho}, opts.threads, opts.solver_tol);

  const std::string format = opts.output_format.empty() ? "json" : opts.output_format;
  if (format == "csv") {
    out << to_csv(report);
  } else if (format == "text") {
    write_family_text(report, out);
  } else {
    out << to_json(report) << '\n';
  }
  if (!fam.csv_path.empty()) {
    OutputSink csv(fam.csv_path, out);
    csv.stream() << to_csv(report);
  }
  return kExitOk;
}

int cmd_gen(const CommonOptions& opts, const GenOptions& gen, std::ostream& out) {
  Graph g = [&] {
    if (gen.kind == "gnp") return gen_gnp(gen.n, gen.p, gen.seed);
    if (gen.kind == "paley") return gen_paley(gen.n);
    const auto named = parse_named_kind(gen.kind);
    if (!named) throw Error(ErrorCode::kInvalidFamilyParams, "unknown kind " + gen.kind);
    return gen_named(*named, gen.n, gen.part);
  }();
  if (opts.format == "edgelist") {
    out << write_edge_list(g);
  } else {
    out << graph6_encode(g) << '\n';
  }
  return kExitOk;
}

double default_tolerance() {
  const char* env = std::getenv(kTolEnvVar);
  if (env == nullptr || *env == '\0') return kDefaultCompareTol;
  char* end = nullptr;
  const double value = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(value > 0.0)) {
    throw UsageError{std::string(kTolEnvVar) + " must be a positive number, got \"" +
                     env + "\""};
  }
  return value;
}

void add_input_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("-i,--input", opts.input, "Input path, '-' for standard input");
  cmd->add_option("source", opts.positional_input, "Input path (same as --input)");
  cmd->add_option("--format", opts.format, "Input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
}

void add_common_options(CLI::App* cmd, CommonOptions& opts,
                        std::vector<std::string> output_formats) {
  cmd->add_option("--tol", opts.tol, "Comparison tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--solver-tol", opts.solver_tol, "Eigensolver relative tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("-o,--out", opts.out, "Output path, '-' for standard output");
  cmd->add_option("--output-format", opts.output_format, "Output format")
      ->check(CLI::IsMember(output_formats));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CommonOptions opts;
  FamilyOptions fam;
  GenOptions gen;
  int scan_n = 0;
  std::optional<int> part;

  CLI::App app{"Adjacency and Laplacian spectra with eigenvalue-degree bound checks",
               "eigendeg"};
  app.require_subcommand(1);

  try {
    opts.tol = default_tolerance();

    auto* spectrum = app.add_subcommand("spectrum", "Print adjacency and Laplacian spectra");
    add_input_options(spectrum, opts);
    add_common_options(spectrum, opts, {"json", "csv", "text"});

    auto* check = app.add_subcommand("check", "Evaluate all nine bounds per input graph");
    add_input_options(check, opts);
    add_common_options(check, opts, {"json", "csv", "text"});

    auto* scan = app.add_subcommand("scan", "Exhaustively check every labeled graph on n vertices");
    scan->add_option("-n,--n", scan_n, "Order, 1..7")->required();
    scan->add_option("--threads", opts.threads, "Worker threads (0 = all cores)");
    add_common_options(scan, opts, {"json", "csv", "text"});

    auto* family = app.add_subcommand("family", "Finite-scale quasi-randomness trend diagnostics");
    family->add_option("--kind", fam.kind, "Family")
        ->check(CLI::IsMember({"gnp", "paley", "complete", "two_cliques",
                               "complete_bipartite"}));
    family->add_option("--p", fam.p, "Edge probability (gnp)");
    family->add_option("--seed", fam.seed, "Base seed (gnp); order n uses seed^n");
    family->add_option("--grid", fam.grid, "Increasing orders, comma separated")
        ->delimiter(',');
    family->add_option("--tau", fam.tau, "Final-value threshold");
    family->add_option("--rho", fam.rho, "Decay-ratio threshold");
    family->add_option("--csv", fam.csv_path, "Also write the per-point CSV here");
    family->add_option("--threads", opts.threads, "Worker threads (0 = all cores)");
    add_common_options(family, opts, {"json", "csv", "text"});

    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
    gen_cmd->add_option("--kind", gen.kind, "Generator")
        ->required()
        ->check(CLI::IsMember({"complete", "empty", "path", "cycle", "star",
                               "complete_bipartite", "two_cliques", "gnp", "paley"}));
    gen_cmd->add_option("-n,--n", gen.n, "Order (prime q for paley)")->required();
    gen_cmd->add_option("--part", part, "First part size (complete_bipartite, two_cliques)");
    gen_cmd->add_option("--p", gen.p, "Edge probability (gnp)");
    gen_cmd->add_option("--seed", gen.seed, "Seed (gnp)");
    gen_cmd->add_option("--format", opts.format, "Output graph format")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    gen_cmd->add_option("-o,--out", opts.out, "Output path, '-' for standard output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitError;
    }

    OutputSink sink(opts.out, out);
    std::ostream& dest = sink.stream();
    if (*spectrum) return cmd_spectrum(opts, in, dest);
    if (*check) return cmd_check(opts, in, dest, err);
    if (*scan) return cmd_scan(opts, scan_n, dest);
    if (*family) return cmd_family(opts, fam, dest);
    gen.part = part;
    return cmd_gen(opts, gen, dest);
  } catch (const UsageError& e) {
    err << "error: " << e.message << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace eigendeg::cli
