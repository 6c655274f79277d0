#include "ctcodes/symplectic.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ctcodes/errors.hpp"

namespace ctcodes {

namespace {

void require_group_dimension(int m) {
  if (m < 1 || m > kMaxGroupDimension)
    throw std::out_of_range("group dimension must lie in [1, 8], got " + std::to_string(m));
}

// Coordinate vector of x: position r holds bit m - 1 - r.
BitVec coordinates(int m, std::uint32_t x) {
  BitVec v(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r)
    if ((x >> (m - 1 - r)) & 1u) v.set(static_cast<std::size_t>(r));
  return v;
}

std::vector<BitVec> permuted_rows(const std::vector<BitVec>& rows, const Permutation& pi) {
  std::vector<BitVec> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    BitVec moved(r.size());
    for (std::size_t p : r.support()) moved.set(pi[p]);
    out.push_back(std::move(moved));
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Forms

bool weight_class_function(WeightClassPair pair, std::uint32_t x) {
  return pair.contains(std::popcount(x) % 4);
}

QuadraticFormSpec QuadraticFormSpec::standard(int m) {
  if (m < 2 || m > 16) throw std::out_of_range("quadratic form dimension must lie in [2, 16]");
  QuadraticFormSpec form;
  form.m = m;
  form.q = BitMatrix(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r)
    for (int c = r + 1; c < m; ++c) form.q.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  form.l = BitVec::ones(static_cast<std::size_t>(m));
  return form;
}

bool QuadraticFormSpec::quadratic(std::uint32_t x) const {
  const BitVec v = coordinates(m, x);
  return v.dot(q.multiply(v));
}

bool QuadraticFormSpec::linear(std::uint32_t x) const { return l.dot(coordinates(m, x)); }

std::vector<IdentityCheck> verify_quadratic_identities(int m) {
  require_even_m(m);
  if (m < 4) throw std::out_of_range("quadratic identities need m >= 4");
  const auto form = QuadraticFormSpec::standard(m);
  std::vector<IdentityCheck> out{{WeightClassPair(2, 3), true},
                                 {WeightClassPair(1, 2), true},
                                 {WeightClassPair(0, 1), true},
                                 {WeightClassPair(0, 3), true}};
  for (std::uint32_t x = 0; x < (1u << m); ++x) {
    const bool q = form.quadratic(x);
    const bool l = form.linear(x);
    const bool expected[4] = {q, q != l, !q, !(q != l)};
    for (std::size_t i = 0; i < 4; ++i)
      if (weight_class_function(out[i].pair, x) != expected[i]) out[i].passed = false;
  }
  return out;
}

SymplecticForm::SymplecticForm(int m, WeightClassPair pair)
    : m_(m), pair_(pair), spec_(QuadraticFormSpec::standard(m)) {
  if (!pair.odd_difference())
    throw std::invalid_argument("symplectic form needs an odd-difference pair, got {" +
                                pair.label() + "}");
  q_sym_ = BitMatrix::from_rows(spec_.q.row_vectors());
  const BitMatrix qt = spec_.q.transposed();
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c)
      if (qt.get(static_cast<std::size_t>(r), static_cast<std::size_t>(c)))
        q_sym_.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c),
                   !q_sym_.get(static_cast<std::size_t>(r), static_cast<std::size_t>(c)));
}

bool SymplecticForm::operator()(std::uint32_t u, std::uint32_t v) const {
  return weight_class_function(pair_, u ^ v) ^ weight_class_function(pair_, u) ^
         weight_class_function(pair_, v) ^ pair_.epsilon();
}

bool SymplecticForm::gram(std::uint32_t u, std::uint32_t v) const {
  return coordinates(m_, u).dot(q_sym_.multiply(coordinates(m_, v)));
}

BitMatrix SymplecticForm::gram_matrix() const {
  BitMatrix g(static_cast<std::size_t>(m_), static_cast<std::size_t>(m_));
  for (int r = 0; r < m_; ++r)
    for (int c = 0; c < m_; ++c)
      if ((*this)(1u << (m_ - 1 - r), 1u << (m_ - 1 - c)))
        g.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  return g;
}

bool verify_nondegenerate(int m, WeightClassPair pair) {
  require_even_m(m);
  const SymplecticForm form(m, pair);
  return rank(form.gram_matrix()) == static_cast<std::size_t>(m);
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement GroupElement::identity(int m) {
  require_group_dimension(m);
  GroupElement g;
  g.m_ = m;
  for (int b = 0; b < m; ++b) g.images_[b] = static_cast<std::uint8_t>(1u << b);
  return g;
}

GroupElement GroupElement::from_images(int m, std::span<const std::uint32_t> images) {
  require_group_dimension(m);
  if (images.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("group element needs exactly m images");
  GroupElement g;
  g.m_ = m;
  for (int b = 0; b < m; ++b) {
    if (images[b] >= (1u << m)) throw std::invalid_argument("image outside F_2^m");
    g.images_[b] = static_cast<std::uint8_t>(images[b]);
  }
  return g;
}

GroupElement GroupElement::from_key(int m, std::uint64_t key) {
  std::vector<std::uint32_t> images(static_cast<std::size_t>(m));
  for (int b = 0; b < m; ++b) images[b] = static_cast<std::uint32_t>((key >> (8 * b)) & 0xFF);
  return from_images(m, images);
}

std::uint32_t GroupElement::apply(std::uint32_t x) const {
  std::uint32_t y = 0;
  while (x) {
    y ^= images_[std::countr_zero(x)];
    x &= x - 1;
  }
  return y;
}

std::uint64_t GroupElement::key() const {
  std::uint64_t k = 0;
  for (int b = 0; b < m_; ++b) k |= std::uint64_t{images_[b]} << (8 * b);
  return k;
}

bool GroupElement::invertible() const {
  std::vector<bool> hit(std::size_t{1} << m_, false);
  for (std::uint32_t x = 0; x < (1u << m_); ++x) {
    const auto y = apply(x);
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

GroupElement GroupElement::inverse() const {
  std::vector<std::uint32_t> preimage(std::size_t{1} << m_, 0);
  std::vector<bool> hit(std::size_t{1} << m_, false);
  for (std::uint32_t x = 0; x < (1u << m_); ++x) {
    const auto y = apply(x);
    if (hit[y]) throw std::domain_error("group element is singular");
    hit[y] = true;
    preimage[y] = x;
  }
  std::vector<std::uint32_t> images(static_cast<std::size_t>(m_));
  for (int b = 0; b < m_; ++b) images[b] = preimage[1u << b];
  return from_images(m_, images);
}

BitMatrix GroupElement::matrix() const {
  BitMatrix k(static_cast<std::size_t>(m_), static_cast<std::size_t>(m_));
  for (int c = 0; c < m_; ++c) {
    const std::uint32_t image = apply(1u << (m_ - 1 - c));
    for (int r = 0; r < m_; ++r)
      if ((image >> (m_ - 1 - r)) & 1u) k.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  }
  return k;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("group elements of different dimension");
  GroupElement g;
  g.m_ = a.m_;
  for (int i = 0; i < a.m_; ++i) g.images_[i] = static_cast<std::uint8_t>(a.apply(b.images_[i]));
  return g;
}

GroupElement transvection(const SymplecticForm& form, std::uint32_t a) {
  const int m = form.m();
  if (a == 0 || a >= (1u << m)) throw std::invalid_argument("transvection vector must be nonzero");
  std::vector<std::uint32_t> images(static_cast<std::size_t>(m));
  for (int b = 0; b < m; ++b) {
    const std::uint32_t x = 1u << b;
    images[b] = form(x, a) ? x ^ a : x;
  }
  return GroupElement::from_images(m, images);
}

bool preserves_form(const GroupElement& k, const SymplecticForm& form) {
  const std::uint32_t size = 1u << form.m();
  for (std::uint32_t u = 0; u < size; ++u)
    for (std::uint32_t v = u + 1; v < size; ++v)
      if (form(k.apply(u), k.apply(v)) != form(u, v)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Closures

GroupClosure group_closure(int m, std::span<const GroupElement> generators, std::size_t cap) {
  GroupClosure closure;
  closure.m = m;
  closure.generators.assign(generators.begin(), generators.end());
  for (const auto& g : generators)
    if (g.m() != m || !g.invertible())
      throw std::invalid_argument("closure generators must be invertible of dimension m");

  std::unordered_set<std::uint64_t> seen;
  const auto id = GroupElement::identity(m);
  closure.elements.push_back(id);
  seen.insert(id.key());
  for (std::size_t head = 0; head < closure.elements.size(); ++head) {
    const GroupElement current = closure.elements[head];
    for (const auto& g : generators) {
      GroupElement next = g * current;
      if (!seen.insert(next.key()).second) continue;
      if (closure.elements.size() >= cap)
        throw CapacityError("group closure exceeded the cap of " + std::to_string(cap) +
                            " elements");
      closure.elements.push_back(next);
    }
  }
  return closure;
}

GroupClosure symplectic_group(int m, WeightClassPair pair) {
  require_even_m(m);
  if (m > kMaxClosureDimension)
    throw CapacityError("Sp(m,2) closure is limited to m <= 6 (m = " + std::to_string(m) +
                        " requested)");
  const SymplecticForm form(m, pair);
  std::vector<GroupElement> gens;
  for (std::uint32_t a = 1; a < (1u << m); ++a) gens.push_back(transvection(form, a));
  return group_closure(m, gens);
}

std::uint64_t symplectic_order_formula(int m) {
  if (m < 2 || m > 10 || m % 2) throw std::out_of_range("order formula needs even m in [2, 10]");
  std::uint64_t order = 1;
  for (int j = m; j >= 1; --j) order *= (j % 2 == 0) ? (std::uint64_t{1} << j) - 1 : std::uint64_t{1} << j;
  return order;
}

std::uint64_t general_linear_order(int m) {
  std::uint64_t order = 1;
  for (int i = 0; i < m; ++i) order *= (std::uint64_t{1} << m) - (std::uint64_t{1} << i);
  return order;
}

std::vector<GroupElement> enumerate_general_linear(int m) {
  if (m < 1 || m > 4) throw std::out_of_range("GL(m,2) enumeration is limited to m <= 4");
  std::vector<GroupElement> out;
  std::vector<std::uint32_t> images;
  // Depth-first over images of 1, 2, 4, ..., each outside the span so far.
  auto extend = [&](auto&& self, std::vector<bool>& span) -> void {
    if (images.size() == static_cast<std::size_t>(m)) {
      out.push_back(GroupElement::from_images(m, images));
      return;
    }
    for (std::uint32_t v = 1; v < (1u << m); ++v) {
      if (span[v]) continue;
      std::vector<bool> next = span;
      for (std::uint32_t s = 0; s < (1u << m); ++s)
        if (span[s]) next[s ^ v] = true;
      images.push_back(v);
      self(self, next);
      images.pop_back();
    }
  };
  std::vector<bool> span(std::size_t{1} << m, false);
  span[0] = true;
  extend(extend, span);
  return out;
}

std::string dump_closure_hex(const GroupClosure& closure) {
  std::vector<std::uint64_t> keys;
  keys.reserve(closure.elements.size());
  for (const auto& e : closure.elements) keys.push_back(e.key());
  std::sort(keys.begin(), keys.end());
  std::string out;
  out.reserve(keys.size() * 17);
  char buf[32];
  for (auto k : keys) {
    std::snprintf(buf, sizeof buf, "%016llx\n", static_cast<unsigned long long>(k));
    out += buf;
  }
  return out;
}

AffineMap AffineMap::inverse() const {
  const GroupElement inv = linear.inverse();
  return {inv, inv.apply(shift)};
}

AffineMap operator*(const AffineMap& a, const AffineMap& b) {
  return {a.linear * b.linear, a.linear.apply(b.shift) ^ a.shift};
}

// ---------------------------------------------------------------------------
// Coordinate actions

CoordinateAction::CoordinateAction(const Code& code, int m) : m_(m), code_(&code) {
  require_group_dimension(m);
  if (code.parity.rows() < static_cast<std::size_t>(m))
    throw std::invalid_argument("parity matrix has fewer than m rows");
  position_of_.assign(std::size_t{1} << m, -1);
  labels_.resize(code.length);
  for (std::size_t p = 0; p < code.length; ++p) {
    std::uint32_t label = 0;
    for (int r = 0; r < m; ++r)
      label = (label << 1) | (code.parity.get(static_cast<std::size_t>(r), p) ? 1u : 0u);
    if (position_of_[label] >= 0)
      throw std::invalid_argument("coordinate labels on the first m rows are not distinct");
    position_of_[label] = static_cast<std::int64_t>(p);
    labels_[p] = label;
  }
  row_space_ = RowSpace(code.parity);
}

std::optional<Permutation> CoordinateAction::permutation(const GroupElement& k) const {
  return permutation(AffineMap{k, 0});
}

std::optional<Permutation> CoordinateAction::permutation(const AffineMap& g) const {
  if (g.linear.m() != m_) throw std::invalid_argument("map dimension differs from the action");
  Permutation pi(labels_.size());
  for (std::size_t p = 0; p < labels_.size(); ++p) {
    const std::int64_t target = position_of_[g.apply(labels_[p])];
    if (target < 0) return std::nullopt;
    pi[p] = static_cast<std::uint32_t>(target);
  }
  return pi;
}

bool CoordinateAction::preserves_code(const Permutation& pi) const {
  for (const auto& r : permuted_rows(code_->parity.row_vectors(), pi))
    if (!row_space_.contains(r)) return false;
  return true;
}

std::optional<Permutation> CoordinateAction::induced_permutation(const GroupElement& k) const {
  return induced_permutation(AffineMap{k, 0});
}

std::optional<Permutation> CoordinateAction::induced_permutation(const AffineMap& g) const {
  auto pi = permutation(g);
  if (!pi || !preserves_code(*pi)) return std::nullopt;
  return pi;
}

// ---------------------------------------------------------------------------
// Orbits

bool OrbitTable::refines_leader_weights() const {
  return std::all_of(orbits.begin(), orbits.end(), [](const Orbit& o) { return o.leader_weight >= 0; });
}

OrbitAccumulator::OrbitAccumulator(const Code& code, const CosetProfile& profile)
    : profile_(&profile), row_space_(code.parity), rows_(code.parity.row_vectors()) {
  if (profile.length != code.length) throw std::invalid_argument("profile belongs to another code");
  const auto size = profile.syndrome_count();
  leaders_.reserve(size);
  for (std::uint64_t s = 0; s < size; ++s) leaders_.push_back(profile.leader(s));
  parent_.resize(size);
  std::iota(parent_.begin(), parent_.end(), 0u);
}

std::uint32_t OrbitAccumulator::find(std::uint32_t x) {
  while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
  return x;
}

std::vector<std::uint64_t> OrbitAccumulator::syndrome_permutation(const Permutation& pi) const {
  const auto& cols = profile_->columns;
  std::vector<std::uint64_t> image(leaders_.size());
  for (std::size_t s = 0; s < leaders_.size(); ++s) {
    std::uint64_t t = 0;
    for (auto j : leaders_[s]) t ^= cols[pi[j]];
    image[s] = t;
  }
  return image;
}

void OrbitAccumulator::add(const Permutation& pi) {
  if (pi.size() != rows_.front().size()) throw std::invalid_argument("permutation has the wrong length");
  for (const auto& r : permuted_rows(rows_, pi))
    if (!row_space_.contains(r))
      throw std::invalid_argument("permutation does not map the code to itself");
  const auto& cols = profile_->columns;
  for (std::size_t s = 0; s < leaders_.size(); ++s) {
    std::uint64_t t = 0;
    for (auto j : leaders_[s]) t ^= cols[pi[j]];
    auto a = find(static_cast<std::uint32_t>(s));
    auto b = find(static_cast<std::uint32_t>(t));
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
}

OrbitTable OrbitAccumulator::finish() {
  OrbitTable table;
  const std::size_t size = leaders_.size();
  table.orbit_of.assign(size, 0);
  std::unordered_map<std::uint32_t, std::uint32_t> index;
  for (std::size_t s = 0; s < size; ++s) {
    const auto root = find(static_cast<std::uint32_t>(s));
    auto [it, inserted] = index.try_emplace(root, static_cast<std::uint32_t>(table.orbits.size()));
    if (inserted) {
      Orbit o;
      o.representative = s;
      o.leader_weight = profile_->leader_weight[s];
      table.orbits.push_back(o);
    }
    Orbit& o = table.orbits[it->second];
    ++o.size;
    if (o.leader_weight != profile_->leader_weight[s]) o.leader_weight = -1;
    table.orbit_of[s] = it->second;
  }
  return table;
}

OrbitTable orbit_count(std::span<const Permutation> action, const Code& code,
                       const CosetProfile& profile) {
  OrbitAccumulator acc(code, profile);
  for (const auto& pi : action) acc.add(pi);
  return acc.finish();
}

AutomorphismCheck count_automorphisms(std::span<const GroupElement> elements, const Code& code, int m) {
  const CoordinateAction action(code, m);
  AutomorphismCheck check;
  for (const auto& k : elements) {
    ++check.tested;
    if (action.induced_permutation(k)) ++check.accepted;
  }
  return check;
}

OrbitTable symplectic_orbits(int m, WeightClassPair pair, const GroupClosure& group,
                             bool generators_only) {
  const Code code = weight_class_code(m, pair);
  const CosetProfile profile = coset_profile(code);
  const CoordinateAction action(code, m);
  OrbitAccumulator acc(code, profile);
  const auto& elements = generators_only ? group.generators : group.elements;
  for (const auto& k : elements) {
    auto pi = action.permutation(k);
    if (!pi) throw std::invalid_argument("group element does not permute the coordinates");
    acc.add(*pi);
  }
  return acc.finish();
}

// ---------------------------------------------------------------------------
// Extended group

AffineGroup extended_group(int m, const GroupClosure& base, std::size_t materialize_cap) {
  if (base.m != m) throw std::invalid_argument("base group has a different dimension");
  AffineGroup group;
  group.m = m;
  for (const auto& g : base.generators) group.generators.push_back({g, 0});
  for (int b = 0; b < m; ++b) group.generators.push_back(AffineMap::translation(m, 1u << b));

  const std::uint64_t expected = base.order() << m;
  if (expected <= materialize_cap) {
    std::unordered_set<std::uint64_t> seen;
    const AffineMap id{GroupElement::identity(m), 0};
    group.elements.push_back(id);
    seen.insert(id.key());
    for (std::size_t head = 0; head < group.elements.size(); ++head) {
      const AffineMap current = group.elements[head];
      for (const auto& g : group.generators) {
        AffineMap next = g * current;
        if (!seen.insert(next.key()).second) continue;
        if (group.elements.size() >= materialize_cap)
          throw CapacityError("extended group closure exceeded its cap");
        group.elements.push_back(next);
      }
    }
    group.order = group.elements.size();
    group.method = "closure";
  } else {
    // |G| = |orbit of 0| * |stabilizer of 0|. The lifted base fixes 0, so it
    // lies in the stabilizer; Schreier generators of the stabilizer are
    // checked to lie in the base, so the stabilizer equals the base.
    std::unordered_set<std::uint64_t> base_keys;
    base_keys.reserve(base.elements.size() * 2);
    for (const auto& e : base.elements) base_keys.insert(e.key());
    std::vector<std::optional<AffineMap>> transversal(std::size_t{1} << m);
    transversal[0] = AffineMap{GroupElement::identity(m), 0};
    std::vector<std::uint32_t> orbit{0};
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const std::uint32_t p = orbit[head];
      for (const auto& g : group.generators) {
        const std::uint32_t q = g.apply(p);
        if (transversal[q]) continue;
        transversal[q] = g * *transversal[p];
        orbit.push_back(q);
      }
    }
    for (const auto p : orbit) {
      for (const auto& g : group.generators) {
        const AffineMap schreier = transversal[g.apply(p)]->inverse() * g * *transversal[p];
        if (schreier.shift != 0 || !base_keys.count(schreier.linear.key()))
          throw std::logic_error("stabilizer of the parity coordinate leaves the base group");
      }
    }
    group.order = static_cast<std::uint64_t>(orbit.size()) * base.order();
    group.method = "orbit-stabilizer";
  }
  if (group.order != expected)
    throw std::logic_error("extended group order " + std::to_string(group.order) +
                           " differs from |base| * 2^m = " + std::to_string(expected));
  return group;
}

OrbitTable orbit_count_extended(int m, WeightClassPair pair, const AffineGroup& group) {
  if (!pair.odd_difference() || pair.contains(0))
    throw std::invalid_argument("extended orbit count needs an odd-difference pair without 0");
  const Code code = extend_code(weight_class_code(m, pair));
  const CosetProfile profile = coset_profile(code);
  const CoordinateAction action(code, m);
  OrbitAccumulator acc(code, profile);
  // Orbits of a group are the orbits of any generating set.
  const auto& maps = group.elements.empty() ? group.generators : group.elements;
  for (const auto& g : maps) {
    auto pi = action.permutation(g);
    if (!pi) throw std::invalid_argument("affine map does not permute the coordinates");
    acc.add(*pi);
  }
  return acc.finish();
}

EvenPartCheck gl_orbit_check_even_part(int m) {
  if (m != 4) throw std::invalid_argument("GL orbit check is defined for m = 4 only");
  const WeightClassPair pair(0, 2);
  const Code code = weight_class_code(m, pair);
  const CosetProfile profile = coset_profile(code);
  const CoordinateAction action(code, m);
  const auto gl = enumerate_general_linear(m);
  EvenPartCheck check;
  check.group_order = gl.size();
  OrbitAccumulator acc(code, profile);
  for (const auto& k : gl) {
    if (auto pi = action.induced_permutation(k)) {
      ++check.accepted;
      acc.add(*pi);
    }
  }
  check.orbits = acc.finish();
  return check;
}

WeightTwoCheck weight_two_coset_check(int m, WeightClassPair pair, const GroupClosure& group) {
  const SymplecticForm form(m, pair);
  const Code code = weight_class_code(m, pair);
  const CosetProfile profile = coset_profile(code);
  const CoordinateAction action(code, m);
  const std::size_t n = code.length;

  WeightTwoCheck check;
  // Unordered label pairs {h1, h2} with h1 < h2, indexed densely.
  std::unordered_map<std::uint64_t, std::size_t> index;
  auto key = [](std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t{a} << 32) | b;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t s = profile.columns[i] ^ profile.columns[j];
      if (profile.leader_weight[s] != 2) continue;
      ++check.weight_two_pairs;
      const auto h1 = action.label(i);
      const auto h2 = action.label(j);
      if (form(h1, h2) == pair.epsilon()) check.form_differs_from_epsilon = false;
      index.emplace(key(h1, h2), index.size());
    }

  UnionFind sets(index.size());
  const bool small = group.elements.size() <= 100'000;
  const auto& elements = small ? group.elements : group.generators;
  for (const auto& k : elements)
    for (const auto& [pair_key, id] : index) {
      const auto h1 = static_cast<std::uint32_t>(pair_key >> 32);
      const auto h2 = static_cast<std::uint32_t>(pair_key & 0xFFFFFFFFu);
      auto it = index.find(key(k.apply(h1), k.apply(h2)));
      if (it == index.end())
        throw std::logic_error("group element moved a weight-2 leader pair out of its class");
      sets.unite(id, it->second);
    }
  std::unordered_set<std::size_t> roots;
  for (std::size_t i = 0; i < index.size(); ++i) roots.insert(sets.find(i));
  check.pair_orbits = roots.size();
  return check;
}

}  // namespace ctcodes
