#include "nsd/graph6.hpp"

#include <vector>

#include "nsd/error.hpp"

namespace nsd {
namespace {

constexpr int kBias = 63;
constexpr int kMaxShortN = 62;

bool printable(unsigned char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::TruncatedBits, "empty graph6 line");

  const auto first = static_cast<unsigned char>(text[0]);
  if (!printable(first)) throw Error(ErrorCode::InvalidChar, "bad size byte at offset 0");
  if (first == 126) throw Error(ErrorCode::Unsupported, "long-form graph6 (n >= 63) is not supported");
  const int n = first - kBias;

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  std::string_view body = text.substr(1);
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (!printable(static_cast<unsigned char>(body[i]))) {
      throw Error(ErrorCode::InvalidChar, "byte outside 63..126 at offset " + std::to_string(i + 1));
    }
  }
  if (body.size() < need) {
    throw Error(ErrorCode::TruncatedBits, "expected " + std::to_string(need) + " data bytes, got " +
                                              std::to_string(body.size()));
  }
  if (body.size() > need) {
    throw Error(ErrorCode::TrailingGarbage,
                std::to_string(body.size() - need) + " extra bytes after the bit vector");
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++k) {
      const int group = static_cast<unsigned char>(body[k / 6]) - kBias;
      if ((group >> (5 - k % 6)) & 1) edges.push_back({row, col});
    }
  }
  return Graph(n, std::move(edges));
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxShortN) throw Error(ErrorCode::TooLarge, "n = " + std::to_string(n));

  std::string out(1, static_cast<char>(n + kBias));
  int group = 0;
  int filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

}  // namespace nsd
