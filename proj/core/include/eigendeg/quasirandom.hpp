#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eigendeg/bounds.hpp"
#include "eigendeg/graph.hpp"
#include "eigendeg/spectrum.hpp"

namespace eigendeg {

enum class FamilyKind { kGnp, kPaley, kComplete, kTwoCliques, kCompleteBipartite };

std::optional<FamilyKind> parse_family_kind(std::string_view name);
std::string_view to_string(FamilyKind kind);

/// A parameterized graph family sampled on a finite grid of orders.
struct FamilySpec {
  FamilyKind kind = FamilyKind::kGnp;
  double p = 0.5;           // gnp only
  std::uint64_t seed = 42;  // gnp only; the order-n member uses seed ^ n
  std::vector<int> grid{32, 64, 128, 256};
  double tol = kDefaultCompareTol;
};

/// Member of `spec`'s family at order n. Throws InvalidFamilyParams.
Graph family_member(const FamilySpec& spec, int n);

/// Throws InsufficientGrid for fewer than three orders and
/// InvalidFamilyParams for anything else out of range.
void validate(const FamilySpec& spec);

/// Spectral quantities of one member, each divided by the order n
/// (s by n^2). The t-metrics follow the complement-sum conditions, the
/// c-metrics the three eigenvalue conditions of the spectral quasi-random
/// definition.
struct TrendPoint {
  int n = 0;
  std::int64_t m = 0;
  double t1 = 0.0;  // (mu_n + mu_n(co)) / n
  double t2 = 0.0;  // (lambda_n + lambda_n(co) - n) / n
  double t3 = 0.0;  // (lambda_2 + lambda_2(co)) / n
  double c1 = 0.0;  // |mu_1 - 2m/n| / n
  double c2 = 0.0;  // |mu_2| / n
  double c3 = 0.0;  // |mu_n| / n
  double s_norm = 0.0;

  friend bool operator==(const TrendPoint&, const TrendPoint&) = default;
};

TrendPoint family_metrics(const Graph& g, double solver_tol = kDefaultSolverTol);
TrendPoint family_metrics(const SpectralContext& ctx);

enum class Condition { kCon1, kCon2, kCon3, kCgw };
inline constexpr std::array<Condition, 4> kAllConditions{
    Condition::kCon1, Condition::kCon2, Condition::kCon3, Condition::kCgw};
std::string_view to_string(Condition c);

enum class Verdict { kConsistent, kInconsistent };
std::string_view to_string(Verdict v);

/// Finite-scale stand-in for "o(n)": a normalized metric counts as
/// vanishing when the geometric mean of its consecutive ratios is at most
/// rho and its value at the largest order is at most tau.
struct Thresholds {
  double tau = 0.2;
  double rho = 0.9;
};

/// Values below this are treated as already decayed.
inline constexpr double kDecayFloor = 1e-9;

struct ConditionVerdict {
  Condition condition = Condition::kCon1;
  Verdict verdict = Verdict::kInconsistent;
  double decay_ratio = 0.0;
  double final_value = 0.0;

  friend bool operator==(const ConditionVerdict&,
                         const ConditionVerdict&) = default;
};

/// |metric| sequence a condition is judged on, in point order.
std::vector<double> condition_series(Condition c,
                                     std::span<const TrendPoint> points);

/// Geometric mean of consecutive ratios with the decay-floor clamp: a step
/// landing below kDecayFloor counts as ratio 0, and a start below the floor
/// is raised to it.
double geometric_decay_ratio(std::span<const double> values);

/// Throws InsufficientGrid for fewer than three points.
std::array<ConditionVerdict, 4> trend_verdict(std::span<const TrendPoint> points,
                                              const Thresholds& thresholds = {});

struct TrendReport {
  FamilySpec spec;
  Thresholds thresholds;
  std::vector<TrendPoint> points;
  std::array<ConditionVerdict, 4> verdicts{};
  /// Pointwise bound violations found while scanning (expected empty).
  std::vector<std::string> warnings;

  const ConditionVerdict& verdict(Condition c) const;
};

/// Members are computed on up to `workers` threads (0 = hardware
/// concurrency); points are stored in grid order either way.
TrendReport scan_family(const FamilySpec& spec, const Thresholds& thresholds = {},
                        unsigned workers = 0,
                        double solver_tol = kDefaultSolverTol);

}  // namespace eigendeg
