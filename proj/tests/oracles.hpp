#pragma once

// Slow, deliberately naive reference computations used by the tests. None of
// these share code with the library.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "ctcodes/gf2.hpp"

namespace oracle {

using Rows = std::vector<std::vector<int>>;

inline Rows rows_of(const ctcodes::BitMatrix& m) {
  Rows out(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c) ? 1 : 0;
  return out;
}

inline int rank(Rows a) {
  int r = 0;
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  for (int c = 0; c < cols && r < static_cast<int>(a.size()); ++c) {
    int p = r;
    while (p < static_cast<int>(a.size()) && !a[p][c]) ++p;
    if (p == static_cast<int>(a.size())) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (static_cast<int>(i) != r && a[i][c])
        for (int k = 0; k < cols; ++k) a[i][k] ^= a[r][k];
    ++r;
  }
  return r;
}

inline long long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long v = 1;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

// sum_t (-1)^t C(w, t) C(n - w, j - t)
inline long long krawtchouk(int j, int w, int n) {
  long long s = 0;
  for (int t = 0; t <= j; ++t) s += (t % 2 ? -1 : 1) * choose(w, t) * choose(n - w, j - t);
  return s;
}

// Syndrome of the word given by the low n bits of x, as an integer with row 0
// most significant. Uses every row of the matrix.
inline std::uint64_t syndrome(const Rows& h, std::uint64_t x) {
  std::uint64_t s = 0;
  for (const auto& row : h) {
    int bit = 0;
    for (std::size_t c = 0; c < row.size(); ++c) bit ^= row[c] & static_cast<int>((x >> c) & 1u);
    s = (s << 1) | static_cast<std::uint64_t>(bit);
  }
  return s;
}

// All codewords (as bit masks, position i = bit i) of the kernel of h. n <= 20.
inline std::vector<std::uint64_t> codewords(const Rows& h) {
  const std::size_t n = h.empty() ? 0 : h[0].size();
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
    if (syndrome(h, x) == 0) out.push_back(x);
  return out;
}

inline int min_weight(const std::vector<std::uint64_t>& words) {
  int best = 1 << 30;
  for (auto w : words)
    if (w) best = std::min(best, __builtin_popcountll(w));
  return best;
}

// Minimum weight per distinct syndrome value (keyed by the full-row syndrome).
inline std::map<std::uint64_t, int> leader_weights(const Rows& h) {
  const std::size_t n = h[0].size();
  std::map<std::uint64_t, int> best;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    const auto s = syndrome(h, x);
    const int w = __builtin_popcountll(x);
    auto it = best.find(s);
    if (it == best.end() || w < it->second) best[s] = w;
  }
  return best;
}

inline ctcodes::BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  ctcodes::BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng() & 1u) m.set(r, c);
  return m;
}

inline ctcodes::BitVec random_vector(std::mt19937_64& rng, std::size_t n) {
  ctcodes::BitVec v(n);
  for (std::size_t i = 0; i < n; ++i)
    if (rng() & 1u) v.set(i);
  return v;
}

}  // namespace oracle
