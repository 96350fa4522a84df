#include "isolation/graph6.hpp"

#include <array>

namespace isolab {

namespace {

constexpr int kOffset = 63;

int byte_value(char c) {
  const int value = static_cast<unsigned char>(c) - kOffset;
  if (value < 0 || value > 63) {
    throw Graph6Error("character code " + std::to_string(static_cast<unsigned char>(c)) +
                      " outside the graph6 range 63..126");
  }
  return value;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kOffset));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kOffset));
  return out;
}

Graph graph6_decode(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 line");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = byte_value(text[0]);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') {
      if (text.size() < 8) throw Graph6Error("truncated 8-byte graph6 header");
      for (std::size_t k = 2; k < 8; ++k) n = (n << 6) | byte_value(text[k]);
      pos = 8;
    } else {
      if (text.size() < 4) throw Graph6Error("truncated 4-byte graph6 header");
      for (std::size_t k = 1; k < 4; ++k) n = (n << 6) | byte_value(text[k]);
      pos = 4;
      if (n < 63) throw Graph6Error("4-byte header used for an order below 63");
    }
  }
  if (n > kMaxVertices) {
    throw SizeCapError("graph6 order " + std::to_string(n) + " exceeds the cap of " +
                       std::to_string(kMaxVertices));
  }

  const long bit_count = n * (n - 1) / 2;
  const long expected = (bit_count + 5) / 6;
  const std::string_view body = text.substr(pos);
  if (static_cast<long>(body.size()) != expected) {
    throw Graph6Error("graph6 body has " + std::to_string(body.size()) + " bytes, expected " +
                      std::to_string(expected) + " for order " + std::to_string(n));
  }

  std::array<std::uint64_t, kMaxVertices> rows{};
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = byte_value(body[bit / 6]);
      if ((value >> (5 - bit % 6)) & 1) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  if (bit_count % 6 != 0) {
    const int value = byte_value(body.back());
    const int pad = 6 - static_cast<int>(bit_count % 6);
    if ((value & ((1 << pad) - 1)) != 0) throw Graph6Error("nonzero graph6 padding bits");
  }
  for (char c : body) byte_value(c);
  return Graph::from_adjacency(static_cast<int>(n), rows);
}

}  // namespace isolab
