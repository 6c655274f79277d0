#pragma once

// Parity check matrices for the Hamming family and its weight-class halves.
//
// Coordinates of a length 2^m - 1 code are labelled by the nonzero vectors of
// F_2^m in ascending integer order: position p carries column value p + 1.
// Extended codes (length 2^m) put the parity coordinate at position 0, so
// position x carries the vector x for every x in F_2^m.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "ctcodes/gf2.hpp"

namespace ctcodes {

// Unordered pair {i1, i2} of residues mod 4, stored with first < second.
class WeightClassPair {
 public:
  WeightClassPair(int i1, int i2);

  int first() const { return first_; }
  int second() const { return second_; }
  bool contains(int residue) const { return residue == first_ || residue == second_; }
  // i1 - i2 odd: the quadratic cases.
  bool odd_difference() const { return ((second_ - first_) & 1) != 0; }
  // The constant term of the quadratic form: set iff 0 is in the pair.
  bool epsilon() const { return contains(0); }
  // {i1 + 1, i2 + 1} reduced mod 4.
  WeightClassPair shifted() const;
  // "i1,i2"
  std::string label() const;

  static std::array<WeightClassPair, 6> all();
  static std::array<WeightClassPair, 4> odd_pairs();
  // Parses "i,j".
  static WeightClassPair parse(std::string_view text);

  friend bool operator==(const WeightClassPair&, const WeightClassPair&) = default;

 private:
  int first_;
  int second_;
};

// Binary linear code held as a parity check matrix.
struct Code {
  BitMatrix parity;
  std::size_t length = 0;
  std::size_t dimension = 0;
  int min_distance = 0;
  // Set when the bounded search found no dependency; min_distance is then a
  // lower bound.
  bool min_distance_is_bound = false;

  int packing_radius() const { return (min_distance - 1) / 2; }
  std::size_t redundancy() const { return length - dimension; }
};

// m x (2^m - 1); column p is the binary representation of p + 1.
BitMatrix hamming_parity(int m);

// Bit p set iff weight(column p of H_m) mod 4 lies in the pair. m even, m >= 4.
BitVec weight_class_vector(int m, WeightClassPair pair);

// H_m with weight_class_vector appended as the last row.
BitMatrix augmented_parity(int m, WeightClassPair pair);

Code code_from_parity(BitMatrix parity);

// Overall parity extension: new coordinate 0, parity matrix [0 | H] plus an
// all-one row.
Code extend_code(const Code& code);

// (m + 1) x 2^m; column x is (x, 1).
BitMatrix extended_hamming_parity(int m);

// Bit x set iff weight(x) mod 4 lies in the pair, for every x in F_2^m
// (x = 0 included).
BitVec full_domain_weight_class_row(int m, WeightClassPair pair);

// Extended Hamming parity matrix with the full-domain weight-class row added.
Code star_construction(int m, WeightClassPair pair);

Code hamming_code(int m);
Code weight_class_code(int m, WeightClassPair pair);

// Equality as sets of codewords.
bool same_code(const Code& a, const Code& b);

// Exact minimum distance: codeword enumeration for dimension <= 12, otherwise
// the smallest dependent column set of size <= 5.
struct MinDistance {
  int value = 0;
  bool is_bound = false;
};
MinDistance minimum_distance(const BitMatrix& parity);

// "[n,k,d]" (">=d" when only a bound is known).
std::string code_summary(const Code& code);

// Plain text interchange: first line "r n", then r lines of '0'/'1'.
std::string format_matrix(const BitMatrix& matrix);
BitMatrix parse_matrix(std::string_view text);

void require_even_m(int m);

}  // namespace ctcodes
