#include "eigendeg/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>
#include <utility>

#include "eigendeg/error.hpp"
#include "eigendeg/generators.hpp"
#include "eigendeg/graph_io.hpp"

namespace eigendeg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Spectrum solve(const Graph& g, bool laplacian, double solver_tol,
               const char* label) {
  try {
    return laplacian ? laplacian_spectrum(g, solver_tol)
                     : adjacency_spectrum(g, solver_tol);
  } catch (const NonConvergence& e) {
    throw NonConvergence(e.residual(), e.sweeps(), label);
  }
}

CheckOutcome finish(CheckId id, std::vector<CheckDetail> details, double tol) {
  CheckOutcome out;
  out.id = id;
  out.worst_slack = kInf;
  for (const CheckDetail& d : details) {
    if (d.slack < out.worst_slack || !out.witness_k) {
      out.worst_slack = d.slack;
      out.witness_k = d.k;
    }
  }
  out.holds = out.worst_slack >= -tol;
  out.details = std::move(details);
  return out;
}

// Two-sided: lower <= value <= upper. Reports the nearer bound as rhs.
CheckDetail two_sided(int k, double lower, double value, double upper) {
  const double below = value - lower;
  const double above = upper - value;
  return below <= above ? CheckDetail{k, value, lower, below}
                        : CheckDetail{k, value, upper, above};
}

// Sum mu_k(G) + mu_{n-k+2}(co G) for 2 <= k <= n.
double complement_pair_sum(const SpectralContext& c, int k) {
  return c.adjacency.at(k) + c.complement_adjacency.at(c.order() - k + 2);
}

std::vector<CheckDetail> in1(const SpectralContext& c) {
  std::vector<CheckDetail> out;
  for (int k = 1; k <= c.order(); ++k) {
    out.push_back(two_sided(k, c.stats.min_degree,
                            c.adjacency.at(k) + c.laplacian.at(k),
                            c.stats.max_degree));
  }
  return out;
}

std::vector<CheckDetail> in2(const SpectralContext& c) {
  const double rhs = c.stats.min_degree - c.stats.max_degree - 1.0;
  std::vector<CheckDetail> out;
  for (int k = 2; k <= c.order(); ++k) {
    const double lhs = complement_pair_sum(c, k);
    out.push_back({k, lhs, rhs, lhs - rhs});
  }
  return out;
}

std::vector<CheckDetail> classic_upper(const SpectralContext& c) {
  std::vector<CheckDetail> out;
  for (int k = 2; k <= c.order(); ++k) {
    const double lhs = complement_pair_sum(c, k);
    out.push_back({k, lhs, -1.0, -1.0 - lhs});
  }
  return out;
}

std::vector<CheckDetail> laplacian_complement(const SpectralContext& c) {
  const int n = c.order();
  std::vector<CheckDetail> out;
  for (int k = 2; k <= n; ++k) {
    const double lhs = c.laplacian.at(k) + c.complement_laplacian.at(n - k + 2);
    out.push_back({k, lhs, static_cast<double>(n), -std::abs(lhs - n)});
  }
  return out;
}

std::vector<CheckDetail> grone_merris(const SpectralContext& c) {
  const int n = c.order();
  const double lhs = c.laplacian.at(n);
  const double rhs = c.stats.max_degree;
  return {{n, lhs, rhs, lhs - rhs}};
}

std::vector<CheckDetail> degree_spread(const SpectralContext& c) {
  const int n = c.order();
  const double lhs = n - 1.0 + c.stats.max_degree - c.stats.min_degree;
  const double rhs = c.laplacian.at(n) + c.complement_laplacian.at(n);
  return {{n, lhs, rhs, rhs - lhs}};
}

std::vector<CheckDetail> i1(const SpectralContext& c) {
  const double n = c.order();
  const double m = static_cast<double>(c.stats.edge_count);
  const double s = c.irregularity;
  // With m = 0 the graph is empty, s = 0 and the lower term is taken as 0.
  const double lower = m == 0.0 ? 0.0 : s * s / (2.0 * n * n * std::sqrt(2.0 * m));
  const double value = c.adjacency.at(1) - c.stats.mean_degree;
  return {two_sided(1, lower, value, std::sqrt(s))};
}

std::vector<CheckDetail> i2(const SpectralContext& c) {
  const double rhs = -1.0 - 2.0 * std::sqrt(2.0 * c.irregularity);
  std::vector<CheckDetail> out;
  for (int k = 2; k <= c.order(); ++k) {
    const double lhs = complement_pair_sum(c, k);
    out.push_back({k, lhs, rhs, lhs - rhs});
  }
  return out;
}

std::vector<CheckDetail> i3(const SpectralContext& c) {
  const int n = c.order();
  if (n < 2) return {};
  const double s = c.irregularity;
  const double nd = n;
  const double lhs = c.adjacency.at(n) + c.complement_adjacency.at(n);
  const double rhs = -1.0 - s * s / (2.0 * nd * nd * nd);
  return {{n, lhs, rhs, rhs - lhs}};
}

CheckOutcome check_graph(CheckId id, const Graph& g, double tol) {
  return run_check(id, make_spectral_context(g), tol);
}

}  // namespace

std::string_view to_string(CheckId id) {
  switch (id) {
    case CheckId::kIn1:
      return "in1";
    case CheckId::kIn2:
      return "in2";
    case CheckId::kClassicUpper:
      return "classic_upper";
    case CheckId::kLaplacianComplement:
      return "laplacian_complement";
    case CheckId::kGroneMerris:
      return "grone_merris";
    case CheckId::kDegreeSpread:
      return "degree_spread";
    case CheckId::kI1:
      return "i1";
    case CheckId::kI2:
      return "i2";
    case CheckId::kI3:
      return "i3";
  }
  return "unknown";
}

SpectralContext make_spectral_context(const Graph& g, double solver_tol) {
  Graph co = complement(g);
  DegreeStats stats = degree_stats(g);
  DegreeStats co_stats = degree_stats(co);
  const double s = irregularity(stats);
  Spectrum mu = solve(g, false, solver_tol, "adjacency of G");
  Spectrum mu_co = solve(co, false, solver_tol, "adjacency of complement");
  Spectrum lambda = solve(g, true, solver_tol, "Laplacian of G");
  Spectrum lambda_co = solve(co, true, solver_tol, "Laplacian of complement");
  return SpectralContext{g,
                         std::move(co),
                         std::move(stats),
                         std::move(co_stats),
                         s,
                         std::move(mu),
                         std::move(mu_co),
                         std::move(lambda),
                         std::move(lambda_co)};
}

CheckOutcome run_check(CheckId id, const SpectralContext& ctx, double tol) {
  switch (id) {
    case CheckId::kIn1:
      return finish(id, in1(ctx), tol);
    case CheckId::kIn2:
      return finish(id, in2(ctx), tol);
    case CheckId::kClassicUpper:
      return finish(id, classic_upper(ctx), tol);
    case CheckId::kLaplacianComplement:
      return finish(id, laplacian_complement(ctx), tol);
    case CheckId::kGroneMerris:
      return finish(id, grone_merris(ctx), tol);
    case CheckId::kDegreeSpread:
      return finish(id, degree_spread(ctx), tol);
    case CheckId::kI1:
      return finish(id, i1(ctx), tol);
    case CheckId::kI2:
      return finish(id, i2(ctx), tol);
    case CheckId::kI3:
      return finish(id, i3(ctx), tol);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown check");
}

CheckOutcome check_in1(const Graph& g, double tol) {
  return check_graph(CheckId::kIn1, g, tol);
}
CheckOutcome check_in2(const Graph& g, double tol) {
  return check_graph(CheckId::kIn2, g, tol);
}
CheckOutcome check_classic_upper(const Graph& g, double tol) {
  return check_graph(CheckId::kClassicUpper, g, tol);
}
CheckOutcome check_laplacian_complement(const Graph& g, double tol) {
  return check_graph(CheckId::kLaplacianComplement, g, tol);
}
CheckOutcome check_grone_merris(const Graph& g, double tol) {
  return check_graph(CheckId::kGroneMerris, g, tol);
}
CheckOutcome check_degree_spread(const Graph& g, double tol) {
  return check_graph(CheckId::kDegreeSpread, g, tol);
}
CheckOutcome check_i1(const Graph& g, double tol) {
  return check_graph(CheckId::kI1, g, tol);
}
CheckOutcome check_i2(const Graph& g, double tol) {
  return check_graph(CheckId::kI2, g, tol);
}
CheckOutcome check_i3(const Graph& g, double tol) {
  return check_graph(CheckId::kI3, g, tol);
}

bool BoundSet::all_hold() const {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const CheckOutcome& o) { return o.holds; });
}

const CheckOutcome& BoundSet::outcome(CheckId id) const {
  for (const CheckOutcome& o : outcomes) {
    if (o.id == id) return o;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no outcome for check " + std::string(to_string(id)));
}

BoundSet check_all(const SpectralContext& ctx, double tol,
                   std::string graph_id) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "comparison tolerance must be positive");
  }
  BoundSet set;
  if (graph_id.empty()) {
    graph_id = ctx.order() <= kMaxGraph6Order
                   ? graph6_encode(ctx.graph)
                   : "n" + std::to_string(ctx.order());
  }
  set.graph_id = std::move(graph_id);
  set.n = ctx.order();
  set.m = ctx.stats.edge_count;
  set.tol = tol;
  set.outcomes.reserve(kAllChecks.size());
  for (CheckId id : kAllChecks) set.outcomes.push_back(run_check(id, ctx, tol));
  return set;
}

BoundSet check_all(const Graph& g, double tol, std::string graph_id,
                   double solver_tol) {
  return check_all(make_spectral_context(g, solver_tol), tol,
                   std::move(graph_id));
}

std::uint64_t ScanSummary::violations() const {
  std::uint64_t total = 0;
  for (const ScanCheckSummary& c : checks) total += c.violations;
  return total;
}

namespace {

std::vector<ScanCheckSummary> fresh_scan_rows() {
  std::vector<ScanCheckSummary> rows;
  for (CheckId id : kAllChecks) {
    ScanCheckSummary row;
    row.id = id;
    row.min_slack = kInf;
    rows.push_back(row);
  }
  return rows;
}

// Strictly smaller slack wins; equal slack keeps the smaller mask.
void merge_row(ScanCheckSummary& into, const ScanCheckSummary& from) {
  into.violations += from.violations;
  if (from.min_slack < into.min_slack ||
      (from.min_slack == into.min_slack && from.witness_k &&
       (!into.witness_k || from.argmin_mask < into.argmin_mask))) {
    into.min_slack = from.min_slack;
    into.argmin_mask = from.argmin_mask;
    into.witness_k = from.witness_k;
  }
}

}  // namespace

ScanSummary scan_labeled(int n, double tol, unsigned workers,
                         double solver_tol) {
  const std::uint64_t count = labeled_graph_count(n);
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, count));

  std::vector<std::vector<ScanCheckSummary>> partial(workers, fresh_scan_rows());
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      const std::uint64_t lo = count * w / workers;
      const std::uint64_t hi = count * (w + 1) / workers;
      auto& rows = partial[w];
      for (std::uint64_t mask = lo; mask < hi; ++mask) {
        const BoundSet set =
            check_all(Graph::from_mask(n, mask), tol, "-", solver_tol);
        for (std::size_t i = 0; i < rows.size(); ++i) {
          const CheckOutcome& o = set.outcomes[i];
          if (!o.holds) ++rows[i].violations;
          if (o.worst_slack < rows[i].min_slack ||
              (o.witness_k && !rows[i].witness_k)) {
            rows[i].min_slack = o.worst_slack;
            rows[i].argmin_mask = mask;
            rows[i].witness_k = o.witness_k;
          }
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ScanSummary summary;
  summary.n = n;
  summary.graphs = count;
  summary.tol = tol;
  summary.checks = fresh_scan_rows();
  for (const auto& rows : partial) {
    for (std::size_t i = 0; i < rows.size(); ++i) merge_row(summary.checks[i], rows[i]);
  }
  return summary;
}

}  // namespace eigendeg
