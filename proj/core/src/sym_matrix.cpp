#include "eigendeg/sym_matrix.hpp"

#include <cmath>
#include <string>

#include "eigendeg/error.hpp"

namespace eigendeg {

SymMatrix::SymMatrix(int order) : n_(order) {
  if (order < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "matrix order must be positive, got " + std::to_string(order));
  }
  data_.assign(static_cast<std::size_t>(order) * order, 0.0);
}

SymMatrix SymMatrix::from_rows(int order, std::span<const double> rows) {
  SymMatrix m(order);
  if (rows.size() != m.data_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(m.data_.size()) + " entries, got " +
                    std::to_string(rows.size()));
  }
  for (int i = 0; i < order; ++i) {
    for (int j = i + 1; j < order; ++j) {
      if (rows[static_cast<std::size_t>(i) * order + j] !=
          rows[static_cast<std::size_t>(j) * order + i]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "matrix is not symmetric at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
      }
    }
  }
  m.data_.assign(rows.begin(), rows.end());
  return m;
}

double SymMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (double x : data_) sum += x * x;
  return std::sqrt(sum);
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix a(g.order());
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) a.set(i, j, 1.0);
    }
  }
  return a;
}

SymMatrix laplacian_matrix(const Graph& g) {
  const int n = g.order();
  SymMatrix l(n);
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) {
        l.set(i, j, -1.0);
        ++degree[i];
        ++degree[j];
      }
    }
  }
  for (int i = 0; i < n; ++i) l.set(i, i, degree[i]);
  return l;
}

}  // namespace eigendeg
