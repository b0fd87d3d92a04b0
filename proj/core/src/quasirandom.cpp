#include "eigendeg/quasirandom.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

#include "eigendeg/error.hpp"
#include "eigendeg/generators.hpp"

namespace eigendeg {

namespace {

constexpr std::array<std::pair<std::string_view, FamilyKind>, 5> kFamilyKinds{{
    {"gnp", FamilyKind::kGnp},
    {"paley", FamilyKind::kPaley},
    {"complete", FamilyKind::kComplete},
    {"two_cliques", FamilyKind::kTwoCliques},
    {"complete_bipartite", FamilyKind::kCompleteBipartite},
}};

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidFamilyParams, what);
}

std::string check_point(const SpectralContext& ctx, const TrendPoint& pt,
                        double tol) {
  const double n = pt.n;
  const double s = ctx.irregularity;
  const double i3_bound = (-1.0 - s * s / (2.0 * n * n * n)) / n;
  if (pt.t1 > i3_bound + tol) {
    return "n=" + std::to_string(pt.n) + ": t1 above the mu_n bound";
  }
  const double spread_bound =
      (ctx.stats.max_degree - ctx.stats.min_degree - 1.0) / n;
  if (pt.t2 < spread_bound - tol) {
    return "n=" + std::to_string(pt.n) + ": t2 below the degree-spread bound";
  }
  return {};
}

}  // namespace

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  for (const auto& [key, kind] : kFamilyKinds) {
    if (key == name) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(FamilyKind kind) {
  for (const auto& [key, k] : kFamilyKinds) {
    if (k == kind) return key;
  }
  return "unknown";
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::kCon1:
      return "con1";
    case Condition::kCon2:
      return "con2";
    case Condition::kCon3:
      return "con3";
    case Condition::kCgw:
      return "cgw";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  return v == Verdict::kConsistent ? "consistent" : "inconsistent";
}

Graph family_member(const FamilySpec& spec, int n) {
  switch (spec.kind) {
    case FamilyKind::kGnp:
      return gen_gnp(n, spec.p, spec.seed ^ static_cast<std::uint64_t>(n));
    case FamilyKind::kPaley:
      return gen_paley(n);
    case FamilyKind::kComplete:
      return gen_named(NamedKind::kComplete, n);
    case FamilyKind::kTwoCliques:
      return gen_named(NamedKind::kTwoCliques, n);
    case FamilyKind::kCompleteBipartite:
      return gen_named(NamedKind::kCompleteBipartite, n);
  }
  invalid("unknown family kind");
}

void validate(const FamilySpec& spec) {
  if (spec.grid.size() < 3) {
    throw Error(ErrorCode::kInsufficientGrid,
                "grid needs at least 3 orders, got " +
                    std::to_string(spec.grid.size()));
  }
  for (std::size_t i = 0; i < spec.grid.size(); ++i) {
    const int n = spec.grid[i];
    if (n < 2) invalid("grid orders must be >= 2, got " + std::to_string(n));
    if (i > 0 && n <= spec.grid[i - 1]) invalid("grid must be strictly increasing");
    switch (spec.kind) {
      case FamilyKind::kPaley:
        if (!is_prime(n) || n % 4 != 1) {
          invalid("paley grid entry " + std::to_string(n) +
                  " is not a prime = 1 (mod 4)");
        }
        break;
      case FamilyKind::kTwoCliques:
      case FamilyKind::kCompleteBipartite:
        if (n % 2 != 0) {
          invalid(std::string(to_string(spec.kind)) + " grid needs even orders, got " +
                  std::to_string(n));
        }
        break;
      case FamilyKind::kGnp:
      case FamilyKind::kComplete:
        break;
    }
  }
  if (spec.kind == FamilyKind::kGnp && !(spec.p >= 0.0 && spec.p <= 1.0)) {
    invalid("p must lie in [0, 1]");
  }
  if (!(spec.tol > 0.0)) invalid("comparison tolerance must be positive");
}

TrendPoint family_metrics(const SpectralContext& ctx) {
  const int n = ctx.order();
  if (n < 2) invalid("family metrics need n >= 2");
  const double nd = n;
  TrendPoint pt;
  pt.n = n;
  pt.m = ctx.stats.edge_count;
  pt.t1 = (ctx.adjacency.at(n) + ctx.complement_adjacency.at(n)) / nd;
  pt.t2 = (ctx.laplacian.at(n) + ctx.complement_laplacian.at(n) - nd) / nd;
  pt.t3 = (ctx.laplacian.at(2) + ctx.complement_laplacian.at(2)) / nd;
  pt.c1 = std::abs(ctx.adjacency.at(1) - ctx.stats.mean_degree) / nd;
  pt.c2 = std::abs(ctx.adjacency.at(2)) / nd;
  pt.c3 = std::abs(ctx.adjacency.at(n)) / nd;
  pt.s_norm = ctx.irregularity / (nd * nd);
  return pt;
}

TrendPoint family_metrics(const Graph& g, double solver_tol) {
  if (g.order() < 2) invalid("family metrics need n >= 2");
  return family_metrics(make_spectral_context(g, solver_tol));
}

std::vector<double> condition_series(Condition c,
                                     std::span<const TrendPoint> points) {
  std::vector<double> out;
  out.reserve(points.size());
  for (const TrendPoint& pt : points) {
    switch (c) {
      case Condition::kCon1:
        out.push_back(std::abs(pt.t1));
        break;
      case Condition::kCon2:
        out.push_back(std::abs(pt.t2));
        break;
      case Condition::kCon3:
        out.push_back(std::abs(pt.t3));
        break;
      case Condition::kCgw:
        out.push_back(std::max({pt.c1, pt.c2, pt.c3}));
        break;
    }
  }
  return out;
}

double geometric_decay_ratio(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  double log_sum = 0.0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i + 1] < kDecayFloor) return 0.0;
    log_sum += std::log(values[i + 1] / std::max(values[i], kDecayFloor));
  }
  return std::exp(log_sum / static_cast<double>(values.size() - 1));
}

std::array<ConditionVerdict, 4> trend_verdict(std::span<const TrendPoint> points,
                                              const Thresholds& thresholds) {
  if (points.size() < 3) {
    throw Error(ErrorCode::kInsufficientGrid,
                "trend verdict needs at least 3 points, got " +
                    std::to_string(points.size()));
  }
  std::array<ConditionVerdict, 4> out{};
  for (std::size_t i = 0; i < kAllConditions.size(); ++i) {
    const Condition c = kAllConditions[i];
    const std::vector<double> series = condition_series(c, points);
    ConditionVerdict& v = out[i];
    v.condition = c;
    v.decay_ratio = geometric_decay_ratio(series);
    v.final_value = series.back();
    v.verdict = v.decay_ratio <= thresholds.rho && v.final_value <= thresholds.tau
                    ? Verdict::kConsistent
                    : Verdict::kInconsistent;
  }
  return out;
}

const ConditionVerdict& TrendReport::verdict(Condition c) const {
  for (const ConditionVerdict& v : verdicts) {
    if (v.condition == c) return v;
  }
  throw Error(ErrorCode::kInvalidArgument, "no verdict for condition");
}

TrendReport scan_family(const FamilySpec& spec, const Thresholds& thresholds,
                        unsigned workers, double solver_tol) {
  validate(spec);
  const std::size_t count = spec.grid.size();
  std::vector<TrendPoint> points(count);
  std::vector<std::string> notes(count);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        const int n = spec.grid[i];
        const SpectralContext ctx =
            make_spectral_context(family_member(spec, n), solver_tol);
        points[i] = family_metrics(ctx);
        notes[i] = check_point(ctx, points[i], spec.tol);
      } catch (const NonConvergence& e) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::make_exception_ptr(NonConvergence(
              e.residual(), e.sweeps(),
              "family member n=" + std::to_string(spec.grid[i])));
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  TrendReport report;
  report.spec = spec;
  report.thresholds = thresholds;
  report.points = std::move(points);
  report.verdicts = trend_verdict(report.points, thresholds);
  for (std::string& note : notes) {
    if (!note.empty()) report.warnings.push_back(std::move(note));
  }
  return report;
}

}  // namespace eigendeg
