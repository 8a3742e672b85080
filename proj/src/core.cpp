#include "cubeband/core.hpp"

#include <array>

namespace cubeband {

ParseError::ParseError(const std::string& what, std::size_t line)
    : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

void require_dim(int n, int max_n, std::string_view what) {
  if (n < 1 || n > max_n) {
    throw RangeError(std::string(what) + " must be in [1, " + std::to_string(max_n) + "], got " +
                     std::to_string(n));
  }
}

std::vector<Vertex> neighbors(Vertex v, int n) {
  require_dim(n, 31);
  if (v.bits >= (std::uint32_t{1} << n)) {
    throw RangeError("vertex " + std::to_string(v.bits) + " is not in Q^(" + std::to_string(n) +
                     ")");
  }
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(Vertex{v.bits ^ (1u << i)});
  return out;
}

Vertex parse_vertex(std::string_view text, int n) {
  require_dim(n, 31);
  if (text.size() != static_cast<std::size_t>(n)) {
    throw ParseError("vertex '" + std::string(text) + "' has length " +
                     std::to_string(text.size()) + ", expected " + std::to_string(n));
  }
  std::uint32_t bits = 0;
  for (int i = 0; i < n; ++i) {
    const char c = text[static_cast<std::size_t>(i)];
    if (c == '1') {
      bits |= 1u << i;
    } else if (c != '0') {
      throw ParseError("vertex '" + std::string(text) + "' contains illegal character '" +
                       std::string(1, c) + "'");
    }
  }
  return Vertex{bits};
}

std::string format_vertex(Vertex v, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((v.bits >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

namespace {

constexpr int kPascalRows = 65;

// C(64, 32) < 2^63, so every entry fits.
constexpr auto make_pascal() {
  std::array<std::array<std::uint64_t, kPascalRows>, kPascalRows> t{};
  for (int n = 0; n < kPascalRows; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
  }
  return t;
}

constexpr auto kPascal = make_pascal();

}  // namespace

std::uint64_t layer_size(int n, int k) {
  if (n < 0 || n >= kPascalRows) throw RangeError("layer_size: n out of range");
  if (k < 0 || k > n) return 0;
  return kPascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

EdgeRange::iterator& EdgeRange::iterator::operator++() {
  ++axis_;
  settle();
  return *this;
}

// Advances to the next (u, axis) with bit `axis` of u clear, or to end().
void EdgeRange::iterator::settle() {
  const std::uint64_t count = vertex_count(n_);
  while (u_ < count) {
    while (axis_ < n_ && ((u_ >> axis_) & 1u)) ++axis_;
    if (axis_ < n_) return;
    ++u_;
    axis_ = 0;
  }
  axis_ = 0;
}

EdgeRange::EdgeRange(int n) : n_(n) { require_dim(n, kMaxEnumDim); }

EdgeRange::iterator EdgeRange::begin() const {
  iterator it(n_, 0, 0);
  it.settle();
  return it;
}

EdgeRange::iterator EdgeRange::end() const { return iterator(n_, vertex_count(n_), 0); }

EdgeRange edges(int n) { return EdgeRange(n); }

}  // namespace cubeband
