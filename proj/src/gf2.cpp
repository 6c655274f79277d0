#include "ctcodes/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ctcodes {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

void check_same_length(const BitVec& a, const BitVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("bit vector length mismatch: " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
}

}  // namespace

std::string to_string(Int128 value) {
  if (value == 0) return "0";
  bool negative = value < 0;
  unsigned __int128 magnitude = negative ? -static_cast<unsigned __int128>(value)
                                         : static_cast<unsigned __int128>(value);
  std::string digits;
  while (magnitude > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

// ---------------------------------------------------------------------------
// BitVec

BitVec::BitVec(std::size_t length) : size_(length), words_(word_count(length), 0) {}

BitVec BitVec::ones(std::size_t length) {
  BitVec v(length);
  for (auto& w : v.words_) w = ~std::uint64_t{0};
  if (length % 64 != 0 && !v.words_.empty())
    v.words_.back() = (std::uint64_t{1} << (length % 64)) - 1;
  return v;
}

BitVec BitVec::unit(std::size_t length, std::size_t position) {
  BitVec v(length);
  v.set(position);
  return v;
}

BitVec BitVec::from_positions(std::size_t length, std::span<const std::size_t> positions) {
  BitVec v(length);
  for (std::size_t p : positions) v.set(p);
  return v;
}

BitVec BitVec::from_positions(std::size_t length, std::initializer_list<std::size_t> positions) {
  return from_positions(length, std::span<const std::size_t>(positions.begin(), positions.size()));
}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw std::invalid_argument("bit string may only contain '0' and '1'");
  }
  return v;
}

BitVec BitVec::from_word(std::size_t length, std::uint64_t value) {
  if (length > 64) throw std::invalid_argument("from_word supports at most 64 bits");
  BitVec v(length);
  if (length > 0) v.words_[0] = length == 64 ? value : value & ((std::uint64_t{1} << length) - 1);
  return v;
}

void BitVec::set(std::size_t i, bool value) {
  if (i >= size_) throw std::out_of_range("bit position " + std::to_string(i) + " out of range");
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value)
    words_[i >> 6] |= mask;
  else
    words_[i >> 6] &= ~mask;
}

std::size_t BitVec::weight() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVec::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BitVec::dot(const BitVec& other) const {
  check_same_length(*this, other);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVec::support() const {
  std::vector<std::size_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      out.push_back(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  check_same_length(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::size_t weight(const BitVec& v) { return v.weight(); }

int weight_mod(const BitVec& v, int i) {
  if (i < 2) throw std::invalid_argument("weight_mod modulus must be at least 2");
  return static_cast<int>(v.weight() % static_cast<std::size_t>(i));
}

std::size_t hamming_distance(const BitVec& x, const BitVec& y) {
  check_same_length(x, y);
  std::size_t total = 0;
  auto xw = x.words();
  auto yw = y.words();
  for (std::size_t i = 0; i < xw.size(); ++i)
    total += static_cast<std::size_t>(std::popcount(xw[i] ^ yw[i]));
  return total;
}

// ---------------------------------------------------------------------------
// BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

BitMatrix BitMatrix::from_rows(std::vector<BitVec> rows) {
  BitMatrix m;
  if (!rows.empty()) m.cols_ = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != m.cols_) throw std::invalid_argument("matrix rows must share one length");
  m.rows_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitVec BitMatrix::column(std::size_t c) const {
  BitVec v(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    if (rows_[r].get(c)) v.set(r);
  return v;
}

std::uint64_t BitMatrix::column_value(std::size_t c) const {
  if (rows() > 64) throw std::out_of_range("column_value needs at most 64 rows");
  std::uint64_t value = 0;
  for (std::size_t r = 0; r < rows(); ++r) value = (value << 1) | (rows_[r].get(c) ? 1u : 0u);
  return value;
}

std::vector<std::uint64_t> BitMatrix::column_values() const {
  if (rows() > 64) throw std::out_of_range("column_values needs at most 64 rows");
  std::vector<std::uint64_t> out(cols_, 0);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[c] = (out[c] << 1) | (rows_[r].get(c) ? 1u : 0u);
  }
  return out;
}

BitMatrix BitMatrix::with_row(const BitVec& row) const {
  if (!rows_.empty() && row.size() != cols_)
    throw std::invalid_argument("appended row has the wrong length");
  BitMatrix out = *this;
  out.cols_ = row.size();
  out.rows_.push_back(row);
  return out;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c : rows_[r].support()) t.set(c, r);
  return t;
}

BitVec BitMatrix::multiply(const BitVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector length mismatch");
  BitVec out(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    if (rows_[r].dot(x)) out.set(r);
  return out;
}

BitVec BitMatrix::row_sum() const {
  BitVec acc(cols_);
  for (const auto& r : rows_) acc ^= r;
  return acc;
}

// ---------------------------------------------------------------------------
// Elimination

RowSpace::RowSpace(const BitMatrix& m) : length_(m.cols()) {
  for (const auto& r : m.row_vectors()) insert(r);
}

RowSpace::RowSpace(std::size_t length, std::span<const BitVec> vectors) : length_(length) {
  for (const auto& v : vectors) insert(v);
}

bool RowSpace::reduce(BitVec& v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (v.get(pivots_[i])) v ^= basis_[i];
  return v.is_zero();
}

bool RowSpace::contains(BitVec v) const {
  if (v.size() != length_) throw std::invalid_argument("row space membership: length mismatch");
  return reduce(v);
}

bool RowSpace::insert(BitVec v) {
  if (v.size() != length_) throw std::invalid_argument("row space insert: length mismatch");
  if (reduce(v)) return false;
  const std::size_t pivot = v.support().front();
  // Keep the basis fully reduced on pivot columns.
  for (auto& b : basis_)
    if (b.get(pivot)) b ^= v;
  basis_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

std::size_t rank(const BitMatrix& m) { return RowSpace(m).dimension(); }

bool in_row_space(const BitMatrix& m, const BitVec& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("in_row_space: length mismatch");
  return RowSpace(m).contains(v);
}

BitMatrix independent_rows(const BitMatrix& m) {
  RowSpace space(m.cols(), std::span<const BitVec>{});
  std::vector<BitVec> kept;
  for (const auto& r : m.row_vectors())
    if (space.insert(r)) kept.push_back(r);
  BitMatrix out = BitMatrix::from_rows(std::move(kept));
  if (out.rows() == 0) out = BitMatrix(0, m.cols());
  return out;
}

BitMatrix nullspace(const BitMatrix& m) {
  const std::size_t n = m.cols();
  RowSpace space(m);
  const auto& basis = space.basis();
  const auto& pivots = space.pivots();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<BitVec> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    BitVec x(n);
    x.set(free);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].get(free)) x.set(pivots[i]);
    out.push_back(std::move(x));
  }
  if (out.empty()) return BitMatrix(0, n);
  return BitMatrix::from_rows(std::move(out));
}

bool same_row_space(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) return false;
  RowSpace sa(a);
  RowSpace sb(b);
  if (sa.dimension() != sb.dimension()) return false;
  for (const auto& r : b.row_vectors())
    if (!sa.contains(r)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Integer kernels

Int128 binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int128 result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::vector<Int128> krawtchouk_column(int w, int n) {
  if (n < 1 || n > 64) throw std::out_of_range("krawtchouk: n must lie in [1, 64]");
  if (w < 0 || w > n) throw std::out_of_range("krawtchouk: w must lie in [0, n]");
  std::vector<Int128> k(static_cast<std::size_t>(n) + 1, 0);
  k[0] = 1;
  k[1] = n - 2 * w;
  for (int j = 1; j < n; ++j) {
    const Int128 numerator = Int128(n - 2 * w) * k[j] - Int128(n - j + 1) * k[j - 1];
    if (numerator % (j + 1) != 0) throw std::logic_error("krawtchouk recurrence lost exactness");
    k[j + 1] = numerator / (j + 1);
  }
  return k;
}

Int128 krawtchouk(int j, int w, int n) {
  if (j < 0 || j > n) throw std::out_of_range("krawtchouk: j must lie in [0, n]");
  return krawtchouk_column(w, n)[static_cast<std::size_t>(j)];
}

}  // namespace ctcodes
