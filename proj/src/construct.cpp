#include "ctcodes/construct.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ctcodes {

namespace {

void require_m_range(int m, int lo, int hi) {
  if (m < lo || m > hi)
    throw std::out_of_range("m must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                            "], got " + std::to_string(m));
}

bool in_class(std::uint64_t x, WeightClassPair pair) {
  return pair.contains(std::popcount(x) % 4);
}

int enumerate_min_distance(const BitMatrix& parity) {
  const BitMatrix generator = nullspace(parity);
  const std::size_t k = generator.rows();
  if (k == 0) return 0;
  // Gray-code walk over all nonzero codewords.
  BitVec word(parity.cols());
  std::size_t best = parity.cols() + 1;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
    word ^= generator.row(static_cast<std::size_t>(std::countr_zero(i)));
    best = std::min(best, word.weight());
  }
  return static_cast<int>(best);
}

// Smallest w <= 5 such that some w distinct columns sum to zero.
MinDistance search_min_distance(const BitMatrix& parity) {
  const auto cols = parity.column_values();
  const std::size_t n = cols.size();

  std::unordered_map<std::uint64_t, std::size_t> count;
  for (auto c : cols) {
    if (c == 0) return {1, false};
    if (++count[c] > 1) return {2, false};
  }
  // Columns are distinct and nonzero from here on.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (count.count(cols[i] ^ cols[j])) return {3, false};

  // With no dependency of size <= 3, two different pairs with equal sums are
  // disjoint, and a triple sum equal to a pair sum gives five distinct columns.
  std::unordered_set<std::uint64_t> pair_sums;
  pair_sums.reserve(n * n / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!pair_sums.insert(cols[i] ^ cols[j]).second) return {4, false};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l)
        if (pair_sums.count(cols[i] ^ cols[j] ^ cols[l])) return {5, false};
  return {6, true};
}

}  // namespace

// ---------------------------------------------------------------------------
// WeightClassPair

WeightClassPair::WeightClassPair(int i1, int i2) {
  if (i1 < 0 || i1 > 3 || i2 < 0 || i2 > 3)
    throw std::invalid_argument("weight classes must lie in {0,1,2,3}");
  if (i1 == i2) throw std::invalid_argument("weight classes must differ");
  first_ = std::min(i1, i2);
  second_ = std::max(i1, i2);
}

WeightClassPair WeightClassPair::shifted() const {
  return WeightClassPair((first_ + 1) % 4, (second_ + 1) % 4);
}

std::string WeightClassPair::label() const {
  return std::to_string(first_) + "," + std::to_string(second_);
}

std::array<WeightClassPair, 6> WeightClassPair::all() {
  return {WeightClassPair(0, 1), WeightClassPair(0, 2), WeightClassPair(0, 3),
          WeightClassPair(1, 2), WeightClassPair(1, 3), WeightClassPair(2, 3)};
}

std::array<WeightClassPair, 4> WeightClassPair::odd_pairs() {
  return {WeightClassPair(0, 1), WeightClassPair(0, 3), WeightClassPair(1, 2),
          WeightClassPair(2, 3)};
}

WeightClassPair WeightClassPair::parse(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw std::invalid_argument("pair must be written as i,j");
  auto parse_int = [](std::string_view s) {
    int value = -1;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw std::invalid_argument("pair entries must be integers");
    return value;
  };
  return WeightClassPair(parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1)));
}

// ---------------------------------------------------------------------------
// Matrices

void require_even_m(int m) {
  if (m % 2 != 0) throw std::invalid_argument("m must be even");
}

BitMatrix hamming_parity(int m) {
  require_m_range(m, 2, 16);
  const std::size_t n = (std::size_t{1} << m) - 1;
  BitMatrix h(static_cast<std::size_t>(m), n);
  for (std::size_t p = 0; p < n; ++p) {
    const std::uint64_t value = p + 1;
    for (int r = 0; r < m; ++r)
      if ((value >> (m - 1 - r)) & 1u) h.set(static_cast<std::size_t>(r), p);
  }
  return h;
}

BitVec weight_class_vector(int m, WeightClassPair pair) {
  require_even_m(m);
  require_m_range(m, 4, 16);
  const std::size_t n = (std::size_t{1} << m) - 1;
  BitVec v(n);
  for (std::size_t p = 0; p < n; ++p)
    if (in_class(p + 1, pair)) v.set(p);
  return v;
}

BitMatrix augmented_parity(int m, WeightClassPair pair) {
  return hamming_parity(m).with_row(weight_class_vector(m, pair));
}

BitMatrix extended_hamming_parity(int m) {
  require_m_range(m, 2, 16);
  const std::size_t n = std::size_t{1} << m;
  BitMatrix h(static_cast<std::size_t>(m) + 1, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (int r = 0; r < m; ++r)
      if ((x >> (m - 1 - r)) & 1u) h.set(static_cast<std::size_t>(r), x);
    h.set(static_cast<std::size_t>(m), x);
  }
  return h;
}

BitVec full_domain_weight_class_row(int m, WeightClassPair pair) {
  require_even_m(m);
  require_m_range(m, 4, 16);
  const std::size_t n = std::size_t{1} << m;
  BitVec w(n);
  for (std::size_t x = 0; x < n; ++x)
    if (in_class(x, pair)) w.set(x);
  return w;
}

// ---------------------------------------------------------------------------
// Codes

MinDistance minimum_distance(const BitMatrix& parity) {
  const std::size_t k = parity.cols() - rank(parity);
  if (k == 0) return {0, false};
  if (k <= 12) return {enumerate_min_distance(parity), false};
  if (parity.rows() > 64)
    throw std::out_of_range("minimum distance search needs at most 64 parity rows");
  return search_min_distance(parity);
}

Code code_from_parity(BitMatrix parity) {
  if (parity.cols() == 0 || parity.rows() == 0 ||
      std::all_of(parity.row_vectors().begin(), parity.row_vectors().end(),
                  [](const BitVec& r) { return r.is_zero(); }))
    throw std::invalid_argument("parity check matrix must be nonzero");
  Code code;
  code.length = parity.cols();
  code.dimension = code.length - rank(parity);
  const MinDistance d = minimum_distance(parity);
  code.min_distance = d.value;
  code.min_distance_is_bound = d.is_bound;
  code.parity = std::move(parity);
  return code;
}

Code extend_code(const Code& code) {
  const std::size_t n = code.length + 1;
  std::vector<BitVec> rows;
  rows.reserve(code.parity.rows() + 1);
  for (const auto& r : code.parity.row_vectors()) {
    BitVec bordered(n);
    for (std::size_t p : r.support()) bordered.set(p + 1);
    rows.push_back(std::move(bordered));
  }
  rows.push_back(BitVec::ones(n));
  return code_from_parity(BitMatrix::from_rows(std::move(rows)));
}

Code star_construction(int m, WeightClassPair pair) {
  return code_from_parity(
      extended_hamming_parity(m).with_row(full_domain_weight_class_row(m, pair)));
}

Code hamming_code(int m) { return code_from_parity(hamming_parity(m)); }

Code weight_class_code(int m, WeightClassPair pair) {
  return code_from_parity(augmented_parity(m, pair));
}

bool same_code(const Code& a, const Code& b) {
  return a.length == b.length && same_row_space(a.parity, b.parity);
}

std::string code_summary(const Code& code) {
  return "[" + std::to_string(code.length) + "," + std::to_string(code.dimension) + "," +
         (code.min_distance_is_bound ? ">=" : "") + std::to_string(code.min_distance) + "]";
}

std::string format_matrix(const BitMatrix& matrix) {
  std::string out = std::to_string(matrix.rows()) + " " + std::to_string(matrix.cols()) + "\n";
  for (const auto& r : matrix.row_vectors()) out += r.to_string() + "\n";
  return out;
}

BitMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long rows = -1;
  long long cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0)
    throw std::invalid_argument("matrix header must be \"r n\" with nonnegative integers");
  std::vector<BitVec> out;
  for (long long r = 0; r < rows; ++r) {
    std::string line;
    if (!(in >> line))
      throw std::invalid_argument("matrix text ends after " + std::to_string(r) + " rows");
    if (static_cast<long long>(line.size()) != cols)
      throw std::invalid_argument("matrix row " + std::to_string(r) + " has length " +
                                  std::to_string(line.size()) + ", expected " +
                                  std::to_string(cols));
    out.push_back(BitVec::from_string(line));
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("unexpected trailing content after matrix rows");
  if (out.empty()) return BitMatrix(0, static_cast<std::size_t>(cols));
  return BitMatrix::from_rows(std::move(out));
}

}  // namespace ctcodes
