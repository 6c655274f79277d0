#pragma once

// Dense bit-packed vectors and matrices over GF(2), plus the exact integer
// kernels (binomials, Krawtchouk values) the weight-enumerator code needs.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ctcodes {

__extension__ typedef __int128 Int128;

std::string to_string(Int128 value);

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t length);

  static BitVec ones(std::size_t length);
  static BitVec unit(std::size_t length, std::size_t position);
  static BitVec from_positions(std::size_t length, std::span<const std::size_t> positions);
  static BitVec from_positions(std::size_t length, std::initializer_list<std::size_t> positions);
  // Characters '0' / '1', position 0 first.
  static BitVec from_string(std::string_view bits);
  // Low `length` bits of `value`; position i holds bit i.
  static BitVec from_word(std::size_t length, std::uint64_t value);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t weight() const;
  bool is_zero() const;
  // Parity of the coordinatewise product.
  bool dot(const BitVec& other) const;
  std::vector<std::size_t> support() const;
  std::string to_string() const;
  std::span<const std::uint64_t> words() const { return words_; }

  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec lhs, const BitVec& rhs) { return lhs ^= rhs; }
  friend BitVec operator+(BitVec lhs, const BitVec& rhs) { return lhs ^= rhs; }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend auto operator<=>(const BitVec&, const BitVec&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

std::size_t weight(const BitVec& v);
// weight(v) mod i, i >= 2.
int weight_mod(const BitVec& v, int i);
std::size_t hamming_distance(const BitVec& x, const BitVec& y);

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix from_rows(std::vector<BitVec> rows);
  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const BitVec& row(std::size_t r) const { return rows_[r]; }
  const std::vector<BitVec>& row_vectors() const { return rows_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

  BitVec column(std::size_t c) const;
  // Column c read top-to-bottom as a binary number (row 0 is the most
  // significant bit). Requires rows() <= 64.
  std::uint64_t column_value(std::size_t c) const;
  std::vector<std::uint64_t> column_values() const;

  BitMatrix with_row(const BitVec& row) const;
  BitMatrix transposed() const;
  // M * x^T as a vector of length rows().
  BitVec multiply(const BitVec& x) const;
  BitVec row_sum() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

std::size_t rank(const BitMatrix& m);
bool in_row_space(const BitMatrix& m, const BitVec& v);
// Maximal linearly independent subset of the rows, original order kept.
BitMatrix independent_rows(const BitMatrix& m);
// Basis of {x : M x^T = 0}, one basis vector per row.
BitMatrix nullspace(const BitMatrix& m);

// Reduced echelon basis of a row space with O(dim) membership tests.
class RowSpace {
 public:
  RowSpace() = default;
  explicit RowSpace(const BitMatrix& m);
  RowSpace(std::size_t length, std::span<const BitVec> vectors);

  std::size_t dimension() const { return basis_.size(); }
  std::size_t length() const { return length_; }
  bool contains(BitVec v) const;
  // Returns true if v was independent of the current basis and got added.
  bool insert(BitVec v);
  const std::vector<BitVec>& basis() const { return basis_; }
  // Pivot column of each basis vector; no other basis vector has it set.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  bool reduce(BitVec& v) const;

  std::size_t length_ = 0;
  std::vector<BitVec> basis_;
  std::vector<std::size_t> pivots_;
};

bool same_row_space(const BitMatrix& a, const BitMatrix& b);

// Exact binomial coefficient; zero outside 0 <= k <= n.
Int128 binomial(int n, int k);

// Binary Krawtchouk value K_j(w; n) via the three-term recurrence.
// Requires 0 <= j, w <= n <= 64.
Int128 krawtchouk(int j, int w, int n);
// K_0(w; n) .. K_n(w; n).
std::vector<Int128> krawtchouk_column(int w, int n);

}  // namespace ctcodes
