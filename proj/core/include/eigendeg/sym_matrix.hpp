#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eigendeg/graph.hpp"

namespace eigendeg {

/// Dense real symmetric matrix, row-major. Writes go through set(), which
/// updates both triangles, so entry(i, j) == entry(j, i) always holds.
class SymMatrix {
 public:
  explicit SymMatrix(int order);

  /// From a full row-major array; throws InvalidArgument unless the data is
  /// exactly symmetric.
  static SymMatrix from_rows(int order, std::span<const double> rows);

  int order() const noexcept { return n_; }
  double operator()(int i, int j) const noexcept {
    return data_[static_cast<std::size_t>(i) * n_ + j];
  }
  void set(int i, int j, double value) noexcept {
    data_[static_cast<std::size_t>(i) * n_ + j] = value;
    data_[static_cast<std::size_t>(j) * n_ + i] = value;
  }

  std::span<const double> data() const noexcept { return data_; }
  double frobenius_norm() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  int n_;
  std::vector<double> data_;
};

SymMatrix adjacency_matrix(const Graph& g);

/// L = D - A.
SymMatrix laplacian_matrix(const Graph& g);

}  // namespace eigendeg
