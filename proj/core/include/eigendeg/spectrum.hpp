#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "eigendeg/graph.hpp"
#include "eigendeg/sym_matrix.hpp"

namespace eigendeg {

enum class Ordering { kDescending, kAscending };

std::string_view to_string(Ordering ordering);

/// Default relative convergence tolerance for the eigensolver.
inline constexpr double kDefaultSolverTol = 1e-10;
inline constexpr int kMaxJacobiSweeps = 100;

struct Spectrum {
  std::vector<double> values;
  Ordering ordering = Ordering::kDescending;
  /// Off-diagonal Frobenius norm left by the solver, relative to
  /// max(1, ||M||_F).
  double residual = 0.0;

  std::size_t size() const noexcept { return values.size(); }
  /// 1-based access matching the mu_k / lambda_k indexing.
  double at(int k) const { return values.at(static_cast<std::size_t>(k - 1)); }
};

/// All eigenvalues by cyclic Jacobi rotations.
///
/// Each sweep visits the off-diagonal pairs (p, q), p < q, in row-major order
/// and annihilates entry (p, q) with one rotation. The solver stops once the
/// off-diagonal Frobenius norm is at most tol * max(1, ||M||_F); it checks
/// before every sweep, so a diagonal input costs no rotations. Throws
/// NonConvergence after `max_sweeps` sweeps and InvalidArgument for
/// non-finite entries.
Spectrum sym_eigenvalues(const SymMatrix& m, double tol = kDefaultSolverTol,
                         Ordering ordering = Ordering::kDescending,
                         int max_sweeps = kMaxJacobiSweeps);

/// mu_1 >= ... >= mu_n.
Spectrum adjacency_spectrum(const Graph& g, double tol = kDefaultSolverTol);

/// 0 = lambda_1 <= ... <= lambda_n.
Spectrum laplacian_spectrum(const Graph& g, double tol = kDefaultSolverTol);

/// <Mx, x> / <x, x>. Throws ZeroVector for x == 0 and InvalidArgument on a
/// length mismatch.
double rayleigh_quotient(const SymMatrix& m, std::span<const double> x);

}  // namespace eigendeg
