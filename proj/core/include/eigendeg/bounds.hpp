#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eigendeg/graph.hpp"
#include "eigendeg/spectrum.hpp"

namespace eigendeg {

/// Default comparison tolerance: a check fails only when its slack drops
/// below -tol. Kept separate from the solver tolerance.
inline constexpr double kDefaultCompareTol = 1e-7;

enum class CheckId {
  kIn1,                  // delta <= mu_k + lambda_k <= Delta, 1 <= k <= n
  kIn2,                  // mu_k + mu_{n-k+2}(co) >= delta - Delta - 1
  kClassicUpper,         // mu_k + mu_{n-k+2}(co) <= -1
  kLaplacianComplement,  // lambda_k + lambda_{n-k+2}(co) == n
  kGroneMerris,          // lambda_n >= Delta
  kDegreeSpread,         // n - 1 + Delta - delta <= lambda_n + lambda_n(co)
  kI1,                   // s^2/(2n^2 sqrt(2m)) <= mu_1 - 2m/n <= sqrt(s)
  kI2,                   // mu_k + mu_{n-k+2}(co) >= -1 - 2 sqrt(2s)
  kI3,                   // mu_n + mu_n(co) <= -1 - s^2/(2n^3)
};

inline constexpr std::array<CheckId, 9> kAllChecks{
    CheckId::kIn1,          CheckId::kIn2,
    CheckId::kClassicUpper, CheckId::kLaplacianComplement,
    CheckId::kGroneMerris,  CheckId::kDegreeSpread,
    CheckId::kI1,           CheckId::kI2,
    CheckId::kI3,
};

std::string_view to_string(CheckId id);

struct CheckDetail {
  int k = 0;
  double lhs = 0.0;
  double rhs = 0.0;  // the binding bound for two-sided checks
  double slack = 0.0;
};

/// Slack is positive for strict satisfaction, zero at equality and negative
/// on violation. An empty k-range gives +inf slack and no witness.
struct CheckOutcome {
  CheckId id = CheckId::kIn1;
  bool holds = true;
  double worst_slack = 0.0;
  std::optional<int> witness_k;
  std::vector<CheckDetail> details;

  std::string_view name() const { return to_string(id); }
  bool vacuous() const { return !witness_k.has_value(); }
};

/// Everything the checks read, computed once per graph.
struct SpectralContext {
  Graph graph;
  Graph complement;
  DegreeStats stats;
  DegreeStats complement_stats;
  double irregularity = 0.0;
  Spectrum adjacency;             // mu(G), descending
  Spectrum complement_adjacency;  // mu(co G), descending
  Spectrum laplacian;             // lambda(G), ascending
  Spectrum complement_laplacian;  // lambda(co G), ascending

  int order() const { return graph.order(); }
};

/// Throws NonConvergence naming which of the four matrices failed.
SpectralContext make_spectral_context(const Graph& g,
                                      double solver_tol = kDefaultSolverTol);

CheckOutcome run_check(CheckId id, const SpectralContext& ctx, double tol);

CheckOutcome check_in1(const Graph& g, double tol = kDefaultCompareTol);
CheckOutcome check_in2(const Graph& g, double tol = kDefaultCompareTol);
CheckOutcome check_classic_upper(const Graph& g, double tol = kDefaultCompareTol);
CheckOutcome check_laplacian_complement(const Graph& g,
                                        double tol = kDefaultCompareTol);
CheckOutcome check_grone_merris(const Graph& g, double tol = kDefaultCompareTol);
CheckOutcome check_degree_spread(const Graph& g, double tol = kDefaultCompareTol);
CheckOutcome check_i1(const Graph& g, double tol = kDefaultCompareTol);
CheckOutcome check_i2(const Graph& g, double tol = kDefaultCompareTol);
CheckOutcome check_i3(const Graph& g, double tol = kDefaultCompareTol);

struct BoundSet {
  std::string graph_id;
  int n = 0;
  std::int64_t m = 0;
  double tol = kDefaultCompareTol;
  std::vector<CheckOutcome> outcomes;  // one per kAllChecks entry, same order

  bool all_hold() const;
  const CheckOutcome& outcome(CheckId id) const;
};

/// All nine checks on shared spectra. An empty graph_id defaults to the
/// graph6 encoding (or "n<order>" past the graph6 limit).
BoundSet check_all(const Graph& g, double tol = kDefaultCompareTol,
                   std::string graph_id = {},
                   double solver_tol = kDefaultSolverTol);
BoundSet check_all(const SpectralContext& ctx, double tol,
                   std::string graph_id = {});

/// Per-check extremes over an exhaustive labeled sweep.
struct ScanCheckSummary {
  CheckId id = CheckId::kIn1;
  double min_slack = 0.0;
  std::uint64_t argmin_mask = 0;  // first graph attaining min_slack
  std::optional<int> witness_k;
  std::uint64_t violations = 0;
};

struct ScanSummary {
  int n = 0;
  std::uint64_t graphs = 0;
  double tol = kDefaultCompareTol;
  std::vector<ScanCheckSummary> checks;  // kAllChecks order

  std::uint64_t violations() const;
};

/// check_all over every labeled graph on n <= 7 vertices. The mask range is
/// split across `workers` threads (0 = hardware concurrency) and merged so
/// ties resolve to the smallest mask. Throws EnumerationTooLarge.
ScanSummary scan_labeled(int n, double tol = kDefaultCompareTol,
                         unsigned workers = 1,
                         double solver_tol = kDefaultSolverTol);

}  // namespace eigendeg
