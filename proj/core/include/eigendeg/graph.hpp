#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace eigendeg {

/// An undirected edge between 1-based vertex labels.
struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Labeled simple undirected graph on vertices 1..n.
///
/// The edge set is stored as a bitset over the strict upper triangle in
/// graph6 order: the pair (i, j) with 0-based i < j occupies bit
/// j*(j-1)/2 + i, so the sequence runs (1,2), (1,3), (2,3), (1,4), ...
/// For n <= 11 the whole edge set fits in the first word, which is the
/// bitmask used by enumeration.
///
/// Accessors taking vertex indices are 0-based; 1-based labels appear only
/// in Edge values and the text formats.
class Graph {
 public:
  /// Empty graph on n vertices, n >= 1.
  explicit Graph(int n);

  /// Graph whose upper triangle is given by `mask` in graph6 bit order.
  /// Requires n*(n-1)/2 <= 64; bits past the triangle must be zero.
  static Graph from_mask(int n, std::uint64_t mask);

  int order() const noexcept { return n_; }
  std::int64_t edge_count() const noexcept { return edge_count_; }
  std::int64_t pair_count() const noexcept {
    return static_cast<std::int64_t>(n_) * (n_ - 1) / 2;
  }

  bool has_edge(int i, int j) const;

  /// Sorted lexicographically, 1-based, u < v.
  std::vector<Edge> edges() const;

  /// Raw upper-triangle bits.
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// Whole edge mask for graphs with at most 64 vertex pairs.
  std::uint64_t mask() const;

  static std::size_t pair_index(int i, int j) noexcept {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(j - 1) / 2 +
           static_cast<std::size_t>(i);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  friend class GraphBuilder;
  friend Graph complement(const Graph& g);

  void set_pair(std::size_t bit);

  int n_;
  std::int64_t edge_count_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Incremental construction with 0-based indices. Duplicate insertions are
/// collapsed. Used by generators that already know their indices are valid.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : graph_(n) {}

  GraphBuilder& add(int i, int j);
  int order() const noexcept { return graph_.order(); }
  Graph build() && { return std::move(graph_); }

 private:
  Graph graph_;
};

/// Canonical graph from 1-based pairs; duplicates and (j, i) orderings are
/// normalized. Throws InvalidVertex or SelfLoop.
Graph build_graph(int n, std::span<const Edge> edges);

Graph complement(const Graph& g);

struct DegreeStats {
  std::vector<int> degrees;
  int min_degree = 0;
  int max_degree = 0;
  std::int64_t edge_count = 0;
  double mean_degree = 0.0;  // 2m/n
};

DegreeStats degree_stats(const Graph& g);

/// s(G) = sum over u of |d(u) - 2m/n|; zero exactly for regular graphs.
double irregularity(const Graph& g);
double irregularity(const DegreeStats& stats);

/// Disjoint union with b's vertices relabeled after a's.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace eigendeg
