#pragma once

// Syndrome-space analysis of a binary linear code: coset leader weights,
// covering radius, intersection numbers, and coset weight enumerators.
//
// Syndromes are taken against a maximal independent subset of the parity
// rows (original order), so every integer in [0, 2^r) is a syndrome. The
// syndrome of x is read as a binary number with the first row as the most
// significant bit.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctcodes/construct.hpp"
#include "ctcodes/gf2.hpp"

namespace ctcodes {

struct IntersectionArray {
  std::vector<int> b;  // b_0 .. b_{d-1}
  std::vector<int> c;  // c_1 .. c_d

  int diameter() const { return static_cast<int>(b.size()); }
  // "(15, 6, 1; 1, 6, 15)"
  std::string to_string() const;

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

struct SyndromeTable {
  BitMatrix rows;                     // independent parity rows
  std::vector<std::uint64_t> columns;  // column values against `rows`
  int bits = 0;

  std::uint64_t size() const { return std::uint64_t{1} << bits; }
  std::uint64_t syndrome_of(const BitVec& x) const;
};

// Largest syndrome space the profile and graph code will allocate.
inline constexpr int kMaxSyndromeBits = 24;

SyndromeTable syndrome_table(const Code& code);

// H x^T.
BitVec syndrome(const BitMatrix& parity, const BitVec& x);

struct NeighborCounts {
  int a = 0;
  int b = 0;
  int c = 0;
};

struct CosetProfile {
  std::size_t length = 0;
  int syndrome_bits = 0;
  std::vector<std::uint64_t> columns;  // parity columns as syndromes
  std::vector<std::uint8_t> leader_weight;
  // Column index whose addition steps one level closer to the code; unused at 0.
  std::vector<std::uint32_t> leader_step;
  std::vector<NeighborCounts> counts;
  std::vector<std::uint64_t> level_sizes;
  int covering_radius = 0;
  bool completely_regular = false;
  std::optional<IntersectionArray> intersection_array;

  std::uint64_t syndrome_count() const { return leader_weight.size(); }
  // Support of a minimum-weight vector in the coset with this syndrome.
  std::vector<std::size_t> leader(std::uint64_t syndrome) const;
};

// Requires distinct nonzero parity columns and at most kMaxSyndromeBits
// independent rows.
CosetProfile coset_profile(const Code& code, int threads = 1);
int covering_radius(const Code& code);

struct WeightHistogram {
  std::vector<std::uint64_t> counts;  // counts[w] = number of words of weight w
  std::uint64_t total = 0;

  std::vector<std::size_t> support() const;
  friend bool operator==(const WeightHistogram&, const WeightHistogram&) = default;
};

// Weight distribution of x + C from the dual code via Krawtchouk values.
// Requires length <= 64 and at most 24 independent parity rows.
WeightHistogram coset_weights_macwilliams(const Code& code, const BitVec& x);
// The same transform for every coset at once, indexed by syndrome.
std::vector<WeightHistogram> all_coset_weights_macwilliams(const Code& code, int threads = 1);

// Brute force over all 2^n vectors; n <= 26. Independent of the paths above.
std::vector<WeightHistogram> all_coset_weights_exhaustive(const Code& code);
std::vector<std::uint8_t> leader_weights_exhaustive(const Code& code);

enum class DualSpan {
  // v* plus the span of the m linear rows of the extended Hamming parity
  // matrix (2^m words).
  linear_rows,
  // v* plus the full row space, all-one row included (2^{m+1} words).
  full_row_space,
};

// Weight histogram of v*_{pair} + span, where v* is the parity extension of
// weight_class_vector(m, pair).
WeightHistogram dual_coset_histogram(int m, WeightClassPair pair,
                                     DualSpan span = DualSpan::linear_rows);

}  // namespace ctcodes
