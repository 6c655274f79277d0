#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ctcodes/gf2.hpp"
#include "oracles.hpp"

using namespace ctcodes;

TEST_CASE("bit vectors: construction, weight and dot product") {
  const auto v = BitVec::from_string("1011000");
  CHECK(v.size() == 7);
  CHECK(v.weight() == 3);
  CHECK(v.support() == std::vector<std::size_t>{0, 2, 3});
  CHECK(v.to_string() == "1011000");
  CHECK(BitVec::from_positions(7, {0, 2, 3}) == v);
  CHECK(BitVec::from_word(7, 0b1101) == v);
  CHECK(BitVec::ones(70).weight() == 70);
  CHECK(BitVec::unit(70, 66).support() == std::vector<std::size_t>{66});
  CHECK(BitVec(5).is_zero());

  const auto w = BitVec::from_string("0011010");
  CHECK((v ^ w) == BitVec::from_string("1000010"));
  CHECK((v + w) == (v ^ w));
  CHECK(v.dot(w) == false);  // overlap {2, 3}
  CHECK(v.dot(BitVec::from_string("0010000")) == true);
  CHECK(hamming_distance(v, w) == 2);
}

TEST_CASE("bit vectors: weight_mod and errors") {
  const auto v = BitVec::ones(13);
  CHECK(weight_mod(v, 4) == 1);
  CHECK(weight_mod(v, 2) == 1);
  CHECK_THROWS_AS(weight_mod(v, 1), std::invalid_argument);
  CHECK_THROWS_AS(hamming_distance(BitVec(3), BitVec(4)), std::invalid_argument);
  CHECK_THROWS(BitVec::from_string("10x"));
}

TEST_CASE("bit matrices: columns, transpose, multiply") {
  const auto m = BitMatrix::from_rows({BitVec::from_string("0111"), BitVec::from_string("1011")});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 4);
  CHECK(m.column_value(0) == 0b01);
  CHECK(m.column_value(1) == 0b10);
  CHECK(m.column_value(2) == 0b11);
  CHECK(m.column_values() == std::vector<std::uint64_t>{1, 2, 3, 3});
  CHECK(m.transposed().transposed() == m);
  CHECK(m.multiply(BitVec::from_string("0010")) == BitVec::from_string("11"));
  CHECK(m.row_sum() == BitVec::from_string("1100"));
  CHECK(m.with_row(BitVec::from_string("1111")).rows() == 3);
  CHECK(BitMatrix::identity(5) == BitMatrix::identity(5).transposed());
}

TEST_CASE("elimination: rank, independent rows, nullspace") {
  const auto m = BitMatrix::from_rows(
      {BitVec::from_string("1100"), BitVec::from_string("0110"), BitVec::from_string("1010")});
  CHECK(rank(m) == 2);
  const auto ind = independent_rows(m);
  CHECK(ind.rows() == 2);
  CHECK(ind.row(0) == m.row(0));
  CHECK(ind.row(1) == m.row(1));
  const auto ns = nullspace(m);
  CHECK(ns.rows() == 2);
  for (const auto& v : ns.row_vectors()) CHECK(m.multiply(v).is_zero());
  CHECK(rank(BitMatrix(3, 5)) == 0);
  CHECK(nullspace(BitMatrix::identity(4)).rows() == 0);
}

TEST_CASE("property: rank agrees with a naive elimination and survives row operations") {
  std::mt19937_64 rng(0xC0DE0001);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 9;
    const std::size_t cols = 1 + rng() % 80;
    auto m = oracle::random_matrix(rng, rows, cols);
    const auto r = rank(m);
    CHECK(r == static_cast<std::size_t>(oracle::rank(oracle::rows_of(m))));

    auto rows_v = m.row_vectors();
    for (int op = 0; op < 10 && rows_v.size() > 1; ++op) {
      const auto i = rng() % rows_v.size();
      auto j = rng() % rows_v.size();
      if (i == j) j = (j + 1) % rows_v.size();
      rows_v[i] ^= rows_v[j];
    }
    const auto moved = BitMatrix::from_rows(rows_v);
    CHECK(rank(moved) == r);
    CHECK(same_row_space(m, moved));
    CHECK(rank(m.transposed()) == r);
  }
}

TEST_CASE("property: in_row_space matches enumeration of all row combinations") {
  std::mt19937_64 rng(0xC0DE0002);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 9;
    const auto m = oracle::random_matrix(rng, rows, cols);
    std::vector<BitVec> span;
    for (std::uint32_t mask = 0; mask < (1u << rows); ++mask) {
      BitVec s(cols);
      for (std::size_t r = 0; r < rows; ++r)
        if ((mask >> r) & 1u) s ^= m.row(r);
      span.push_back(s);
    }
    for (std::uint32_t x = 0; x < (1u << cols); ++x) {
      const auto v = BitVec::from_word(cols, x);
      const bool expected = std::find(span.begin(), span.end(), v) != span.end();
      CHECK(in_row_space(m, v) == expected);
    }
  }
}

TEST_CASE("property: nullspace dimension and orthogonality") {
  std::mt19937_64 rng(0xC0DE0003);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + rng() % 10;
    const std::size_t cols = 1 + rng() % 70;
    const auto m = oracle::random_matrix(rng, rows, cols);
    const auto ns = nullspace(m);
    CHECK(ns.rows() == cols - rank(m));
    CHECK(rank(ns) == ns.rows());
    for (const auto& v : ns.row_vectors()) CHECK(m.multiply(v).is_zero());
  }
}

TEST_CASE("row space: insert and contains") {
  RowSpace space(6, std::span<const BitVec>{});
  CHECK(space.dimension() == 0);
  CHECK(space.insert(BitVec::from_string("110000")));
  CHECK(space.insert(BitVec::from_string("011000")));
  CHECK_FALSE(space.insert(BitVec::from_string("101000")));
  CHECK(space.contains(BitVec::from_string("101000")));
  CHECK_FALSE(space.contains(BitVec::from_string("000001")));
  CHECK(space.dimension() == 2);
  CHECK(space.pivots().size() == 2);
}

TEST_CASE("binomials and Krawtchouk values") {
  CHECK(binomial(15, 2) == 105);
  CHECK(binomial(64, 32) == Int128{1832624140942590534LL});
  CHECK(binomial(5, 7) == 0);
  CHECK(krawtchouk(2, 1, 15) == 77);
  CHECK(krawtchouk(0, 9, 15) == 1);
  CHECK(krawtchouk(1, 4, 15) == 7);
  CHECK(to_string(Int128{-123}) == "-123");
  CHECK_THROWS(krawtchouk(3, 1, 65));
  CHECK_THROWS(krawtchouk(5, 1, 4));
}

TEST_CASE("property: Krawtchouk recurrence equals the binomial sum") {
  for (int n = 1; n <= 20; ++n)
    for (int w = 0; w <= n; ++w) {
      const auto column = krawtchouk_column(w, n);
      REQUIRE(column.size() == static_cast<std::size_t>(n + 1));
      for (int j = 0; j <= n; ++j) CHECK(column[j] == oracle::krawtchouk(j, w, n));
    }
}

TEST_CASE("property: Krawtchouk orthogonality for n <= 16") {
  for (int n = 1; n <= 16; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        Int128 sum = 0;
        for (int w = 0; w <= n; ++w) sum += binomial(n, w) * krawtchouk(i, w, n) * krawtchouk(j, w, n);
        const Int128 expected = i == j ? (Int128{1} << n) * binomial(n, i) : 0;
        CHECK(sum == expected);
      }
}
