#include "eigendeg/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <optional>
#include <vector>

#include "eigendeg/error.hpp"

namespace eigendeg {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxByte = 126;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedGraph6, what);
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::optional<long long> to_integer(std::string_view token) {
  long long value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

Graph graph6_decode(std::string_view text) {
  if (text.empty()) malformed("empty graph6 string");
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kOffset || c > kMaxByte) {
      malformed("byte " + std::to_string(c) + " at offset " +
                std::to_string(pos) + " outside [63,126]");
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - kOffset;
  if (n > kMaxGraph6Order) malformed("multi-byte size prefix not supported");
  if (n == 0) malformed("graph of order 0 not supported");

  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t groups = (pairs + 5) / 6;
  const std::string_view body = text.substr(1);
  if (body.size() < groups) {
    malformed("truncated bit region: expected " + std::to_string(groups) +
              " bytes, got " + std::to_string(body.size()));
  }
  if (body.size() > groups) {
    malformed("trailing bytes after bit region");
  }

  GraphBuilder b(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = static_cast<unsigned char>(body[bit / 6]) - kOffset;
      if ((value >> (5 - bit % 6)) & 1) b.add(i, j);
    }
  }
  if (bit % 6 != 0) {
    const int value = static_cast<unsigned char>(body[bit / 6]) - kOffset;
    if (value & ((1 << (6 - bit % 6)) - 1)) malformed("non-zero padding bits");
  }
  return std::move(b).build();
}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw Error(ErrorCode::kInvalidArgument,
                "graph6 encoding limited to n <= 62, got " + std::to_string(n));
  }
  std::string out;
  const std::size_t pairs = static_cast<std::size_t>(g.pair_count());
  out.reserve(1 + (pairs + 5) / 6);
  out.push_back(static_cast<char>(n + kOffset));

  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kOffset));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((group << (6 - filled)) + kOffset));
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::optional<int> order;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);

    if (const std::size_t hash = line.find('#');
        hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split_ws(trim(line));
    if (tokens.empty()) continue;

    if (!order) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw ParseError(line_no, "expected header \"n <count>\"");
      }
      const auto count = to_integer(tokens[1]);
      if (!count || *count < 1 || *count > (1 << 20)) {
        throw ParseError(line_no, "invalid vertex count");
      }
      order = static_cast<int>(*count);
      continue;
    }

    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected \"i j\"");
    }
    const auto u = to_integer(tokens[0]);
    const auto v = to_integer(tokens[1]);
    if (!u || !v) throw ParseError(line_no, "vertex labels must be integers");
    if (*u < 1 || *u > *order || *v < 1 || *v > *order) {
      throw Error(ErrorCode::kInvalidVertex,
                  "line " + std::to_string(line_no) + ": edge (" +
                      std::to_string(*u) + "," + std::to_string(*v) +
                      ") outside 1.." + std::to_string(*order));
    }
    edges.push_back({static_cast<int>(*u), static_cast<int>(*v)});
  }
  if (!order) throw ParseError(line_no == 0 ? 1 : line_no, "missing header");
  return build_graph(*order, edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

}  // namespace eigendeg
