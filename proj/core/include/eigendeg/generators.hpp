#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "eigendeg/graph.hpp"

namespace eigendeg {

enum class NamedKind {
  kComplete,
  kEmpty,
  kPath,
  kCycle,
  kStar,
  kCompleteBipartite,
  kTwoCliques,
};

std::optional<NamedKind> parse_named_kind(std::string_view name);
std::string_view to_string(NamedKind kind);

/// Deterministic fixture graphs. `part` is the size of the first side for
/// complete_bipartite and two_cliques (vertices 1..part form it); when absent
/// n must be even and the sides are equal. The star is centered at vertex 1.
Graph gen_named(NamedKind kind, int n, std::optional<int> part = std::nullopt);

/// G(n, p) driven by std::mt19937_64 seeded with `seed`. One 64-bit draw per
/// vertex pair in graph6 order; the pair is an edge iff (draw >> 11) * 2^-53
/// is below p. The engine's output sequence is fixed by the C++ standard, so
/// the result is identical on every conforming platform.
Graph gen_gnp(int n, double p, std::uint64_t seed);

bool is_prime(std::int64_t q);

/// Paley graph on the residues mod a prime q = 1 (mod 4); vertex i+1 is
/// residue i.
Graph gen_paley(int q);

inline constexpr int kMaxEnumerationOrder = 7;

/// Visits all 2^(n(n-1)/2) labeled graphs on n vertices in increasing order
/// of their edge mask. Throws EnumerationTooLarge for n > 7.
void enumerate_labeled(int n, const std::function<void(const Graph&)>& visit);

std::uint64_t labeled_graph_count(int n);

}  // namespace eigendeg
