#pragma once

// Automorphism machinery for the weight-class codes.
//
// Vectors of F_2^m are held as integers; coordinate r of x (row r of the
// parity matrix) is bit m - 1 - r, so the integer value of a parity column is
// the vector it labels. Coordinate positions of a code are identified with
// the vectors on the first m parity rows.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctcodes/construct.hpp"
#include "ctcodes/cosets.hpp"
#include "ctcodes/gf2.hpp"

namespace ctcodes {

// Largest m the matrix-group code handles (one byte per packed column).
inline constexpr int kMaxGroupDimension = 8;
// Largest m for which the full Sp(m,2) closure is built.
inline constexpr int kMaxClosureDimension = 6;

// 1 iff weight(x) mod 4 lies in the pair; defined on all of F_2^m.
bool weight_class_function(WeightClassPair pair, std::uint32_t x);

// The quadratic form data: Q all-one strictly upper triangular, L all-one.
struct QuadraticFormSpec {
  int m = 0;
  BitMatrix q;
  BitVec l;

  static QuadraticFormSpec standard(int m);
  // x Q x^T
  bool quadratic(std::uint32_t x) const;
  // L x^T
  bool linear(std::uint32_t x) const;
};

struct IdentityCheck {
  WeightClassPair pair;
  bool passed = false;
};

// Exhaustively checks, over all x in F_2^m,
//   f_{2,3} = xQx^T,  f_{1,2} = xQx^T + Lx^T,
//   f_{0,1} = xQx^T + 1,  f_{0,3} = xQx^T + Lx^T + 1.
std::vector<IdentityCheck> verify_quadratic_identities(int m);

// B(u, v) = f(u + v) + f(u) + f(v) + epsilon for an odd-difference pair.
class SymplecticForm {
 public:
  SymplecticForm(int m, WeightClassPair pair);

  int m() const { return m_; }
  WeightClassPair pair() const { return pair_; }
  bool operator()(std::uint32_t u, std::uint32_t v) const;
  // u (Q + Q^T) v^T, computed from the matrix.
  bool gram(std::uint32_t u, std::uint32_t v) const;
  BitMatrix gram_matrix() const;

 private:
  int m_;
  WeightClassPair pair_;
  QuadraticFormSpec spec_;
  BitMatrix q_sym_;
};

// Rank of the Gram matrix equals m. Rejects odd m.
bool verify_nondegenerate(int m, WeightClassPair pair);

// Invertible linear map of F_2^m, m <= kMaxGroupDimension.
class GroupElement {
 public:
  GroupElement() = default;
  static GroupElement identity(int m);
  // images[b] = image of the integer 1 << b.
  static GroupElement from_images(int m, std::span<const std::uint32_t> images);
  static GroupElement from_key(int m, std::uint64_t key);

  int m() const { return m_; }
  std::uint32_t apply(std::uint32_t x) const;
  std::uint64_t key() const;
  bool invertible() const;
  GroupElement inverse() const;
  // Row r, column c is coordinate r of the image of coordinate vector c.
  BitMatrix matrix() const;

  // (a * b)(x) = a(b(x))
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.m_ == b.m_ && a.images_ == b.images_;
  }

 private:
  int m_ = 0;
  std::array<std::uint8_t, kMaxGroupDimension> images_{};
};

// x -> x + B(x, a) a
GroupElement transvection(const SymplecticForm& form, std::uint32_t a);
bool preserves_form(const GroupElement& k, const SymplecticForm& form);

struct GroupClosure {
  int m = 0;
  std::vector<GroupElement> generators;
  std::vector<GroupElement> elements;  // BFS order, identity first

  std::uint64_t order() const { return elements.size(); }
};

// Closure of the generators under composition; CapacityError past `cap`.
GroupClosure group_closure(int m, std::span<const GroupElement> generators,
                           std::size_t cap = 2'000'000);

// Closure of all 2^m - 1 transvections of the form. Refuses m > 6.
GroupClosure symplectic_group(int m, WeightClassPair pair);

// (2^m - 1) 2^{m-1} (2^{m-2} - 1) 2^{m-3} ... (2^2 - 1) 2
std::uint64_t symplectic_order_formula(int m);
std::uint64_t general_linear_order(int m);

// All of GL(m, 2) by extending partial bases; m <= 4.
std::vector<GroupElement> enumerate_general_linear(int m);

// Packed keys as 16-digit hex lines, ascending.
std::string dump_closure_hex(const GroupClosure& closure);

// x -> linear(x) + shift
struct AffineMap {
  GroupElement linear;
  std::uint32_t shift = 0;

  std::uint32_t apply(std::uint32_t x) const { return linear.apply(x) ^ shift; }
  std::uint64_t key() const { return linear.key() ^ (std::uint64_t{shift} << 56); }
  AffineMap inverse() const;
  static AffineMap translation(int m, std::uint32_t v) { return {GroupElement::identity(m), v}; }

  friend AffineMap operator*(const AffineMap& a, const AffineMap& b);
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

using Permutation = std::vector<std::uint32_t>;

// Coordinate permutations of a code induced by maps of F_2^m.
class CoordinateAction {
 public:
  CoordinateAction(const Code& code, int m);

  std::size_t length() const { return labels_.size(); }
  std::uint32_t label(std::size_t position) const { return labels_[position]; }

  // pi(p) = position labelled k(label(p)); nullopt if some image is not a
  // label of this code.
  std::optional<Permutation> permutation(const GroupElement& k) const;
  std::optional<Permutation> permutation(const AffineMap& g) const;

  // Every row of the permuted parity matrix lies in the original row space.
  bool preserves_code(const Permutation& pi) const;

  // Permutation when it is a code automorphism, nullopt (rejection) otherwise.
  std::optional<Permutation> induced_permutation(const GroupElement& k) const;
  std::optional<Permutation> induced_permutation(const AffineMap& g) const;

 private:
  int m_;
  const Code* code_;
  std::vector<std::uint32_t> labels_;
  std::vector<std::int64_t> position_of_;
  RowSpace row_space_;
};

struct Orbit {
  std::uint64_t representative = 0;  // smallest syndrome in the orbit
  std::uint64_t size = 0;
  int leader_weight = -1;  // -1 if the orbit mixes leader weights
};

struct OrbitTable {
  std::vector<std::uint32_t> orbit_of;  // syndrome -> orbit index
  std::vector<Orbit> orbits;           // ordered by representative

  std::size_t count() const { return orbits.size(); }
  bool refines_leader_weights() const;
};

// Accumulates orbits of coset permutations. A coordinate permutation acts on
// the coset with syndrome s through the image of its minimum-weight leader.
class OrbitAccumulator {
 public:
  OrbitAccumulator(const Code& code, const CosetProfile& profile);

  // Throws std::invalid_argument if pi does not map the code to itself.
  void add(const Permutation& pi);
  // Syndrome permutation induced by pi, without the automorphism check.
  std::vector<std::uint64_t> syndrome_permutation(const Permutation& pi) const;
  OrbitTable finish();

 private:
  const CosetProfile* profile_;
  RowSpace row_space_;
  std::vector<BitVec> rows_;
  std::vector<std::vector<std::size_t>> leaders_;
  std::vector<std::uint32_t> parent_;

  std::uint32_t find(std::uint32_t x);
};

OrbitTable orbit_count(std::span<const Permutation> action, const Code& code,
                       const CosetProfile& profile);

struct AutomorphismCheck {
  std::uint64_t tested = 0;
  std::uint64_t accepted = 0;
};
AutomorphismCheck count_automorphisms(std::span<const GroupElement> elements, const Code& code,
                                      int m);

// Orbits of the cosets of C_{pair} under the closure elements (or generators
// when `generators_only`).
OrbitTable symplectic_orbits(int m, WeightClassPair pair, const GroupClosure& group,
                             bool generators_only = false);

// Aut(C) extended by the translations of F_2^m, acting on the 2^m coordinates
// of the extended code.
struct AffineGroup {
  int m = 0;
  std::vector<AffineMap> generators;
  std::vector<AffineMap> elements;  // empty unless materialized
  std::uint64_t order = 0;
  std::string method;  // "closure" or "orbit-stabilizer"
};

AffineGroup extended_group(int m, const GroupClosure& base, std::size_t materialize_cap = 200'000);

// Orbits of the cosets of the extended code of C_{pair} under the group.
// Requires an odd-difference pair without 0.
OrbitTable orbit_count_extended(int m, WeightClassPair pair, const AffineGroup& group);

struct EvenPartCheck {
  std::uint64_t group_order = 0;
  std::uint64_t accepted = 0;
  OrbitTable orbits;
};
// Cosets of C_{0,2} under all of GL(m, 2); m = 4 only.
EvenPartCheck gl_orbit_check_even_part(int m);

struct WeightTwoCheck {
  std::uint64_t weight_two_pairs = 0;
  bool form_differs_from_epsilon = true;
  std::size_t pair_orbits = 0;
};
// For every pair {j1, j2} whose sum e_j1 + e_j2 leads a weight-2 coset,
// checks B(h_j1, h_j2) != epsilon and counts orbits of such pairs.
WeightTwoCheck weight_two_coset_check(int m, WeightClassPair pair, const GroupClosure& group);

}  // namespace ctcodes
