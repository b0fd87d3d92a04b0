#include "eigendeg/generators.hpp"

#include <array>
#include <random>
#include <string>
#include <utility>

#include "eigendeg/error.hpp"

namespace eigendeg {

namespace {

constexpr std::array<std::pair<std::string_view, NamedKind>, 7> kNamedKinds{{
    {"complete", NamedKind::kComplete},
    {"empty", NamedKind::kEmpty},
    {"path", NamedKind::kPath},
    {"cycle", NamedKind::kCycle},
    {"star", NamedKind::kStar},
    {"complete_bipartite", NamedKind::kCompleteBipartite},
    {"two_cliques", NamedKind::kTwoCliques},
}};

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidFamilyParams, what);
}

int split_point(NamedKind kind, int n, std::optional<int> part) {
  if (part) {
    if (*part < 1 || *part >= n) {
      invalid(std::string(to_string(kind)) + ": part size " +
              std::to_string(*part) + " must lie in 1.." +
              std::to_string(n - 1));
    }
    return *part;
  }
  if (n % 2 != 0 || n < 2) {
    invalid(std::string(to_string(kind)) + " needs even n without a part size, got " +
            std::to_string(n));
  }
  return n / 2;
}

}  // namespace

std::optional<NamedKind> parse_named_kind(std::string_view name) {
  for (const auto& [key, kind] : kNamedKinds) {
    if (key == name) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(NamedKind kind) {
  for (const auto& [key, k] : kNamedKinds) {
    if (k == kind) return key;
  }
  return "unknown";
}

Graph gen_named(NamedKind kind, int n, std::optional<int> part) {
  if (n < 1) invalid("n must be positive, got " + std::to_string(n));
  const bool takes_part = kind == NamedKind::kCompleteBipartite ||
                          kind == NamedKind::kTwoCliques;
  if (part && !takes_part) {
    invalid(std::string(to_string(kind)) + " takes no part size");
  }

  GraphBuilder b(n);
  switch (kind) {
    case NamedKind::kComplete:
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) b.add(i, j);
      break;
    case NamedKind::kEmpty:
      break;
    case NamedKind::kPath:
      for (int i = 0; i + 1 < n; ++i) b.add(i, i + 1);
      break;
    case NamedKind::kCycle:
      if (n < 3) invalid("cycle needs n >= 3, got " + std::to_string(n));
      for (int i = 0; i + 1 < n; ++i) b.add(i, i + 1);
      b.add(0, n - 1);
      break;
    case NamedKind::kStar:
      for (int i = 1; i < n; ++i) b.add(0, i);
      break;
    case NamedKind::kCompleteBipartite: {
      const int a = split_point(kind, n, part);
      for (int i = 0; i < a; ++i)
        for (int j = a; j < n; ++j) b.add(i, j);
      break;
    }
    case NamedKind::kTwoCliques: {
      const int a = split_point(kind, n, part);
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
          if ((i < a) == (j < a)) b.add(i, j);
      break;
    }
  }
  return std::move(b).build();
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) invalid("n must be positive, got " + std::to_string(n));
  if (!(p >= 0.0 && p <= 1.0)) {
    invalid("p must lie in [0, 1], got " + std::to_string(p));
  }
  std::mt19937_64 engine(seed);
  constexpr double kScale = 0x1.0p-53;
  GraphBuilder b(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const double u = static_cast<double>(engine() >> 11) * kScale;
      if (u < p) b.add(i, j);
    }
  }
  return std::move(b).build();
}

bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  if (q % 2 == 0) return q == 2;
  for (std::int64_t d = 3; d * d <= q; d += 2) {
    if (q % d == 0) return false;
  }
  return true;
}

Graph gen_paley(int q) {
  if (!is_prime(q) || q % 4 != 1) {
    invalid("Paley order must be a prime = 1 (mod 4), got " +
            std::to_string(q));
  }
  std::vector<bool> residue(static_cast<std::size_t>(q), false);
  for (std::int64_t x = 1; x < q; ++x) residue[(x * x) % q] = true;

  GraphBuilder b(q);
  for (int j = 1; j < q; ++j) {
    for (int i = 0; i < j; ++i) {
      if (residue[static_cast<std::size_t>(j - i)]) b.add(i, j);
    }
  }
  return std::move(b).build();
}

std::uint64_t labeled_graph_count(int n) {
  if (n < 1) invalid("n must be positive, got " + std::to_string(n));
  if (n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::kEnumerationTooLarge,
                "n = " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxEnumerationOrder));
  }
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

void enumerate_labeled(int n, const std::function<void(const Graph&)>& visit) {
  const std::uint64_t count = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    visit(Graph::from_mask(n, mask));
  }
}

}  // namespace eigendeg
