#include "eigendeg/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "eigendeg/error.hpp"

namespace eigendeg {

namespace {

std::size_t word_count(int n) {
  const auto pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  return std::max<std::size_t>(1, (pairs + 63) / 64);
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "graph order must be positive, got " + std::to_string(n));
  }
  words_.assign(word_count(n), 0);
}

Graph Graph::from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  if (g.pair_count() > 64) {
    throw Error(ErrorCode::kInvalidArgument,
                "mask form needs at most 64 vertex pairs");
  }
  if (g.pair_count() < 64 && (mask >> g.pair_count()) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "mask has bits past the triangle");
  }
  g.words_[0] = mask;
  g.edge_count_ = std::popcount(mask);
  return g;
}

bool Graph::has_edge(int i, int j) const {
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  const auto bit = pair_index(i, j);
  return (words_[bit / 64] >> (bit % 64)) & 1U;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (has_edge(i, j)) out.push_back({i + 1, j + 1});
    }
  }
  return out;
}

std::uint64_t Graph::mask() const {
  if (pair_count() > 64) {
    throw Error(ErrorCode::kInvalidArgument,
                "mask form needs at most 64 vertex pairs");
  }
  return words_[0];
}

void Graph::set_pair(std::size_t bit) {
  auto& word = words_[bit / 64];
  const std::uint64_t flag = std::uint64_t{1} << (bit % 64);
  if (!(word & flag)) {
    word |= flag;
    ++edge_count_;
  }
}

GraphBuilder& GraphBuilder::add(int i, int j) {
  if (i > j) std::swap(i, j);
  graph_.set_pair(Graph::pair_index(i, j));
  return *this;
}

Graph build_graph(int n, std::span<const Edge> edges) {
  GraphBuilder builder(n);
  for (const Edge& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw Error(ErrorCode::kInvalidVertex,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") outside 1.." + std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kSelfLoop,
                  "self-loop at vertex " + std::to_string(e.u));
    }
    builder.add(e.u - 1, e.v - 1);
  }
  return std::move(builder).build();
}

Graph complement(const Graph& g) {
  Graph out(g.n_);
  const auto pairs = static_cast<std::size_t>(g.pair_count());
  for (std::size_t w = 0; w < g.words_.size(); ++w) {
    std::uint64_t word = ~g.words_[w];
    const std::size_t lo = w * 64;
    if (lo + 64 > pairs) {
      const std::size_t keep = pairs > lo ? pairs - lo : 0;
      word &= keep == 0 ? 0 : (~std::uint64_t{0} >> (64 - keep));
    }
    out.words_[w] = word;
  }
  out.edge_count_ = g.pair_count() - g.edge_count_;
  return out;
}

DegreeStats degree_stats(const Graph& g) {
  const int n = g.order();
  DegreeStats stats;
  stats.degrees.assign(static_cast<std::size_t>(n), 0);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) {
        ++stats.degrees[i];
        ++stats.degrees[j];
      }
    }
  }
  const auto [lo, hi] =
      std::minmax_element(stats.degrees.begin(), stats.degrees.end());
  stats.min_degree = *lo;
  stats.max_degree = *hi;
  stats.edge_count = g.edge_count();
  stats.mean_degree = 2.0 * static_cast<double>(stats.edge_count) / n;
  return stats;
}

double irregularity(const DegreeStats& stats) {
  if (stats.min_degree == stats.max_degree) return 0.0;
  double s = 0.0;
  for (int d : stats.degrees) s += std::abs(d - stats.mean_degree);
  return s;
}

double irregularity(const Graph& g) { return irregularity(degree_stats(g)); }

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int offset = a.order();
  GraphBuilder builder(offset + b.order());
  for (const Edge& e : a.edges()) builder.add(e.u - 1, e.v - 1);
  for (const Edge& e : b.edges()) {
    builder.add(offset + e.u - 1, offset + e.v - 1);
  }
  return std::move(builder).build();
}

}  // namespace eigendeg
