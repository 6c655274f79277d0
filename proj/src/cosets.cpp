#include "ctcodes/cosets.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "ctcodes/errors.hpp"
#include "ctcodes/parallel.hpp"

namespace ctcodes {

namespace {

constexpr std::uint8_t kUnreached = 0xFF;
constexpr int kMaxAllCosetBits = 16;
constexpr std::size_t kMaxExhaustiveLength = 26;

void require_simple_columns(const SyndromeTable& table) {
  std::unordered_set<std::uint64_t> seen;
  for (auto c : table.columns) {
    if (c == 0) throw std::invalid_argument("parity matrix has a zero column");
    if (!seen.insert(c).second) throw std::invalid_argument("parity matrix has repeated columns");
  }
}

WeightHistogram histogram_from_sums(const std::vector<Int128>& sums, int bits, std::size_t n) {
  WeightHistogram h;
  h.counts.assign(n + 1, 0);
  const Int128 scale = Int128{1} << bits;
  for (std::size_t j = 0; j <= n; ++j) {
    if (sums[j] < 0 || sums[j] % scale != 0)
      throw std::logic_error("weight enumerator transform produced a non-integral or negative count");
    h.counts[j] = static_cast<std::uint64_t>(sums[j] / scale);
    h.total += h.counts[j];
  }
  return h;
}

std::vector<std::vector<Int128>> krawtchouk_table(std::size_t n) {
  std::vector<std::vector<Int128>> k;  // k[w][j]
  k.reserve(n + 1);
  for (std::size_t w = 0; w <= n; ++w)
    k.push_back(krawtchouk_column(static_cast<int>(w), static_cast<int>(n)));
  return k;
}

// In-place Walsh-Hadamard transform: out[s] = sum_c (-1)^{popcount(c & s)} in[c].
void walsh_hadamard(std::vector<std::int64_t>& a) {
  for (std::size_t len = 1; len < a.size(); len <<= 1)
    for (std::size_t i = 0; i < a.size(); i += len << 1)
      for (std::size_t j = i; j < i + len; ++j) {
        const std::int64_t u = a[j];
        const std::int64_t v = a[j + len];
        a[j] = u + v;
        a[j + len] = u - v;
      }
}

}  // namespace

std::string IntersectionArray::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? ", " : "") + std::to_string(b[i]);
  s += "; ";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + std::to_string(c[i]);
  return s + ")";
}

std::uint64_t SyndromeTable::syndrome_of(const BitVec& x) const {
  if (x.size() != rows.cols()) throw std::invalid_argument("syndrome: length mismatch");
  std::uint64_t s = 0;
  for (const auto& r : rows.row_vectors()) s = (s << 1) | (r.dot(x) ? 1u : 0u);
  return s;
}

SyndromeTable syndrome_table(const Code& code) {
  SyndromeTable t;
  t.rows = independent_rows(code.parity);
  t.bits = static_cast<int>(t.rows.rows());
  if (t.bits > 63) throw CapacityError("syndrome space exceeds 63 bits");
  t.columns = t.rows.rows() == 0 ? std::vector<std::uint64_t>(code.length, 0)
                                 : t.rows.column_values();
  return t;
}

BitVec syndrome(const BitMatrix& parity, const BitVec& x) { return parity.multiply(x); }

std::vector<std::size_t> CosetProfile::leader(std::uint64_t syndrome) const {
  std::vector<std::size_t> support;
  // Walk back towards the zero syndrome one column at a time.
  while (leader_weight.at(syndrome) > 0) {
    const std::uint32_t j = leader_step[syndrome];
    support.push_back(j);
    syndrome ^= columns[j];
  }
  std::sort(support.begin(), support.end());
  return support;
}

CosetProfile coset_profile(const Code& code, int threads) {
  const SyndromeTable table = syndrome_table(code);
  if (table.bits > kMaxSyndromeBits)
    throw CapacityError("coset profile supports at most " + std::to_string(kMaxSyndromeBits) +
                        " independent parity rows");
  require_simple_columns(table);

  const std::uint64_t size = table.size();
  const std::size_t n = code.length;
  CosetProfile p;
  p.length = n;
  p.syndrome_bits = table.bits;
  p.columns = table.columns;
  p.leader_weight.assign(size, kUnreached);
  p.leader_step.assign(size, 0);

  std::deque<std::uint64_t> queue{0};
  p.leader_weight[0] = 0;
  while (!queue.empty()) {
    const std::uint64_t s = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t t = s ^ table.columns[j];
      if (p.leader_weight[t] != kUnreached) continue;
      p.leader_weight[t] = static_cast<std::uint8_t>(p.leader_weight[s] + 1);
      p.leader_step[t] = static_cast<std::uint32_t>(j);
      queue.push_back(t);
    }
  }
  p.covering_radius = *std::max_element(p.leader_weight.begin(), p.leader_weight.end());
  p.level_sizes.assign(static_cast<std::size_t>(p.covering_radius) + 1, 0);
  for (auto w : p.leader_weight) ++p.level_sizes[w];

  p.counts.assign(size, {});
  parallel_for(size, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      const int l = p.leader_weight[s];
      NeighborCounts nc;
      for (auto col : table.columns) {
        const int other = p.leader_weight[s ^ col];
        if (other == l - 1)
          ++nc.c;
        else if (other == l + 1)
          ++nc.b;
      }
      nc.a = static_cast<int>(n) - nc.b - nc.c;
      p.counts[s] = nc;
    }
  });

  // Complete regularity: (b, c) is a function of the level alone.
  std::vector<std::optional<NeighborCounts>> per_level(p.level_sizes.size());
  p.completely_regular = true;
  for (std::uint64_t s = 0; s < size; ++s) {
    auto& slot = per_level[p.leader_weight[s]];
    if (!slot)
      slot = p.counts[s];
    else if (slot->b != p.counts[s].b || slot->c != p.counts[s].c)
      p.completely_regular = false;
  }
  if (p.completely_regular) {
    IntersectionArray array;
    for (int l = 0; l < p.covering_radius; ++l) array.b.push_back(per_level[l]->b);
    for (int l = 1; l <= p.covering_radius; ++l) array.c.push_back(per_level[l]->c);
    p.intersection_array = std::move(array);
  }
  return p;
}

int covering_radius(const Code& code) { return coset_profile(code).covering_radius; }

std::vector<std::size_t> WeightHistogram::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < counts.size(); ++w)
    if (counts[w] != 0) out.push_back(w);
  return out;
}

WeightHistogram coset_weights_macwilliams(const Code& code, const BitVec& x) {
  const std::size_t n = code.length;
  if (x.size() != n) throw std::invalid_argument("coset representative has the wrong length");
  const BitMatrix rows = independent_rows(code.parity);
  const int r = static_cast<int>(rows.rows());
  if (r > kMaxSyndromeBits) throw CapacityError("dual dimension exceeds 24");
  const auto kraw = krawtchouk_table(n);

  // signed_count[w] = sum over dual words u of weight w of (-1)^{u.x}
  std::vector<std::int64_t> signed_count(n + 1, 0);
  BitVec u(n);
  signed_count[0] += 1;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << r); ++i) {
    u ^= rows.row(static_cast<std::size_t>(std::countr_zero(i)));
    signed_count[u.weight()] += u.dot(x) ? -1 : 1;
  }
  std::vector<Int128> sums(n + 1, 0);
  for (std::size_t w = 0; w <= n; ++w)
    if (signed_count[w] != 0)
      for (std::size_t j = 0; j <= n; ++j) sums[j] += Int128(signed_count[w]) * kraw[w][j];
  return histogram_from_sums(sums, r, n);
}

std::vector<WeightHistogram> all_coset_weights_macwilliams(const Code& code, int threads) {
  const std::size_t n = code.length;
  const SyndromeTable table = syndrome_table(code);
  const int r = table.bits;
  if (r > kMaxAllCosetBits)
    throw CapacityError("all-coset enumerator supports at most 16 independent parity rows");
  const std::size_t size = std::size_t{1} << r;
  const auto kraw = krawtchouk_table(n);

  // Dual word for coefficient vector c: bit (r - 1 - i) of c selects row i,
  // matching the syndrome bit order, so u_c . x = popcount(c & s(x)).
  std::vector<std::uint32_t> dual_weight(size, 0);
  {
    BitVec u(n);
    std::uint64_t gray = 0;
    for (std::uint64_t i = 1; i < size; ++i) {
      const int bit = std::countr_zero(i);
      gray ^= std::uint64_t{1} << bit;
      u ^= table.rows.row(static_cast<std::size_t>(r - 1 - bit));
      dual_weight[gray] = static_cast<std::uint32_t>(u.weight());
    }
  }
  std::vector<std::size_t> present;
  std::vector<std::vector<std::int64_t>> transformed(n + 1);
  for (std::size_t w = 0; w <= n; ++w) {
    std::vector<std::int64_t> f(size, 0);
    bool any = false;
    for (std::size_t c = 0; c < size; ++c)
      if (dual_weight[c] == w) {
        f[c] = 1;
        any = true;
      }
    if (!any) continue;
    walsh_hadamard(f);
    transformed[w] = std::move(f);
    present.push_back(w);
  }

  std::vector<WeightHistogram> out(size);
  parallel_for(size, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<Int128> sums(n + 1);
    for (std::size_t s = begin; s < end; ++s) {
      std::fill(sums.begin(), sums.end(), 0);
      for (std::size_t w : present) {
        const std::int64_t f = transformed[w][s];
        if (f == 0) continue;
        for (std::size_t j = 0; j <= n; ++j) sums[j] += Int128(f) * kraw[w][j];
      }
      out[s] = histogram_from_sums(sums, r, n);
    }
  });
  return out;
}

std::vector<WeightHistogram> all_coset_weights_exhaustive(const Code& code) {
  const std::size_t n = code.length;
  if (n > kMaxExhaustiveLength) throw CapacityError("exhaustive enumeration supports n <= 26");
  const SyndromeTable table = syndrome_table(code);
  std::vector<WeightHistogram> out(table.size());
  for (auto& h : out) h.counts.assign(n + 1, 0);
  std::uint64_t s = 0;
  std::size_t w = 0;
  std::uint64_t gray = 0;
  out[0].counts[0] = 1;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i) {
    const int bit = std::countr_zero(i);
    gray ^= std::uint64_t{1} << bit;
    s ^= table.columns[static_cast<std::size_t>(bit)];
    w = static_cast<std::size_t>(std::popcount(gray));
    ++out[s].counts[w];
  }
  for (auto& h : out)
    for (auto c : h.counts) h.total += c;
  return out;
}

std::vector<std::uint8_t> leader_weights_exhaustive(const Code& code) {
  const std::size_t n = code.length;
  if (n > kMaxExhaustiveLength) throw CapacityError("exhaustive enumeration supports n <= 26");
  const SyndromeTable table = syndrome_table(code);
  std::vector<std::uint8_t> best(table.size(), kUnreached);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    std::uint64_t s = 0;
    for (std::uint64_t rest = x; rest; rest &= rest - 1)
      s ^= table.columns[static_cast<std::size_t>(std::countr_zero(rest))];
    best[s] = std::min<std::uint8_t>(best[s], static_cast<std::uint8_t>(std::popcount(x)));
  }
  return best;
}

WeightHistogram dual_coset_histogram(int m, WeightClassPair pair, DualSpan span) {
  const BitVec v = weight_class_vector(m, pair);
  const std::size_t n = v.size() + 1;
  BitVec extended(n);
  for (std::size_t p : v.support()) extended.set(p + 1);
  if (v.weight() % 2 == 1) extended.set(0);

  const BitMatrix h = extended_hamming_parity(m);
  const std::size_t generators = span == DualSpan::linear_rows ? static_cast<std::size_t>(m)
                                                               : static_cast<std::size_t>(m) + 1;
  WeightHistogram hist;
  hist.counts.assign(n + 1, 0);
  BitVec word = extended;
  ++hist.counts[word.weight()];
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << generators); ++i) {
    word ^= h.row(static_cast<std::size_t>(std::countr_zero(i)));
    ++hist.counts[word.weight()];
  }
  hist.total = std::uint64_t{1} << generators;
  return hist;
}

}  // namespace ctcodes
