#include "eigendeg/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "eigendeg/error.hpp"

namespace eigendeg {

namespace {

class JacobiWorkspace {
 public:
  explicit JacobiWorkspace(const SymMatrix& m)
      : n_(m.order()), a_(m.data().begin(), m.data().end()) {}

  double& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  double off_norm() const {
    double sum = 0.0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        const double x = a_[static_cast<std::size_t>(i) * n_ + j];
        sum += x * x;
      }
    }
    return std::sqrt(2.0 * sum);
  }

  void sweep() {
    for (int p = 0; p < n_; ++p) {
      for (int q = p + 1; q < n_; ++q) rotate(p, q);
    }
  }

  std::vector<double> diagonal() const {
    std::vector<double> d(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) d[i] = a_[static_cast<std::size_t>(i) * n_ + i];
    return d;
  }

 private:
  void rotate(int p, int q) {
    const double apq = at(p, q);
    if (apq == 0.0) return;
    const double app = at(p, p);
    const double aqq = at(q, q);
    const double theta = (aqq - app) / (2.0 * apq);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                     (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    at(p, p) = app - t * apq;
    at(q, q) = aqq + t * apq;
    at(p, q) = 0.0;
    at(q, p) = 0.0;
    for (int r = 0; r < n_; ++r) {
      if (r == p || r == q) continue;
      const double arp = at(r, p);
      const double arq = at(r, q);
      const double new_rp = c * arp - s * arq;
      const double new_rq = s * arp + c * arq;
      at(r, p) = new_rp;
      at(p, r) = new_rp;
      at(r, q) = new_rq;
      at(q, r) = new_rq;
    }
  }

  int n_;
  std::vector<double> a_;
};

}  // namespace

std::string_view to_string(Ordering ordering) {
  return ordering == Ordering::kDescending ? "descending" : "ascending";
}

Spectrum sym_eigenvalues(const SymMatrix& m, double tol, Ordering ordering,
                         int max_sweeps) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "solver tolerance must be positive");
  }
  const double norm = m.frobenius_norm();
  if (!std::isfinite(norm)) {
    throw Error(ErrorCode::kInvalidArgument, "matrix has non-finite entries");
  }
  const double scale = std::max(1.0, norm);
  JacobiWorkspace work(m);

  double residual = work.off_norm() / scale;
  int sweeps = 0;
  while (residual > tol) {
    if (sweeps >= max_sweeps) {
      throw NonConvergence(residual, sweeps,
                           "order-" + std::to_string(m.order()) + " matrix");
    }
    work.sweep();
    ++sweeps;
    residual = work.off_norm() / scale;
  }

  Spectrum out;
  out.values = work.diagonal();
  out.ordering = ordering;
  out.residual = residual;
  if (ordering == Ordering::kDescending) {
    std::stable_sort(out.values.begin(), out.values.end(), std::greater<>());
  } else {
    std::stable_sort(out.values.begin(), out.values.end());
  }
  return out;
}

Spectrum adjacency_spectrum(const Graph& g, double tol) {
  return sym_eigenvalues(adjacency_matrix(g), tol, Ordering::kDescending);
}

Spectrum laplacian_spectrum(const Graph& g, double tol) {
  return sym_eigenvalues(laplacian_matrix(g), tol, Ordering::kAscending);
}

double rayleigh_quotient(const SymMatrix& m, std::span<const double> x) {
  const int n = m.order();
  if (x.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kInvalidArgument,
                "vector length " + std::to_string(x.size()) +
                    " does not match order " + std::to_string(n));
  }
  double xx = 0.0;
  double xmx = 0.0;
  for (int i = 0; i < n; ++i) {
    xx += x[i] * x[i];
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += m(i, j) * x[j];
    xmx += row * x[i];
  }
  if (xx == 0.0) throw Error(ErrorCode::kZeroVector, "Rayleigh quotient of zero vector");
  return xmx / xx;
}

}  // namespace eigendeg
