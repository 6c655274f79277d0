#include <doctest.h>

#include <json.hpp>
#include <random>
#include <stdexcept>

#include "ctcodes/graphs.hpp"

using namespace ctcodes;

namespace {

struct Built {
  CosetGraph graph;
  DistanceMatrix dist;
  GraphClassification cls;
};

Built build(const Code& code, int threads = 1) {
  Built b;
  b.graph = coset_graph(code);
  b.dist = distance_matrix(b.graph, threads);
  b.cls = classify(b.graph, b.dist);
  return b;
}

}  // namespace

TEST_CASE("coset graph of C_{0,1}, m = 4") {
  const auto code = weight_class_code(4, WeightClassPair(0, 1));
  const auto b = build(code);
  CHECK(b.graph.vertex_count == 32);
  CHECK(b.graph.valency() == 15);
  CHECK(b.graph.edge_count() == 240);
  CHECK(b.dist.diameter() == 3);
  CHECK(b.cls.distance_regular);
  CHECK(b.cls.intersection_array->to_string() == "(15, 6, 1; 1, 6, 15)");
  CHECK(b.cls.intersection_array == coset_profile(code).intersection_array);
  CHECK(b.cls.antipodal == Verdict::yes);
  CHECK_FALSE(b.cls.primitive);
  CHECK(b.cls.taylor == Verdict::yes);
  CHECK(b.cls.q_polynomial == Verdict::yes);
  CHECK_FALSE(b.cls.hadamard_order);

  // Distance-3 graph is a perfect matching.
  CHECK_FALSE(distance_graph_connected(b.dist, 3));
  for (std::size_t u = 0; u < 32; ++u) {
    int far = 0;
    for (std::size_t v = 0; v < 32; ++v) far += b.dist.at(u, v) == 3;
    CHECK(far == 1);
  }
  const auto anti = check_antipodal(b.graph, b.dist);
  CHECK(anti.classes.size() == 16);
  for (const auto& c : anti.classes) CHECK(c.size() == 2);
}

TEST_CASE("coset graph of C_{1,2}, m = 4 and m = 6") {
  const auto b4 = build(weight_class_code(4, WeightClassPair(1, 2)));
  CHECK(b4.cls.intersection_array->to_string() == "(15, 8, 1; 1, 8, 15)");
  CHECK(b4.cls.taylor == Verdict::yes);
  const auto b6 = build(weight_class_code(6, WeightClassPair(1, 2)), 2);
  CHECK(b6.cls.vertex_count == 128);
  CHECK(b6.cls.intersection_array->to_string() == "(63, 32, 1; 1, 32, 63)");
  CHECK(b6.cls.antipodal == Verdict::yes);
  CHECK(b6.cls.q_polynomial == Verdict::yes);
}

TEST_CASE("extended coset graph is a Hadamard graph") {
  const auto code = extend_code(weight_class_code(4, WeightClassPair(1, 2)));
  const auto b = build(code);
  CHECK(b.cls.vertex_count == 64);
  CHECK(b.cls.valency == 16);
  CHECK(b.cls.diameter == 4);
  CHECK(b.cls.intersection_array->to_string() == "(16, 15, 8, 1; 1, 8, 15, 16)");
  CHECK(b.cls.antipodal == Verdict::yes);
  CHECK_FALSE(b.cls.primitive);
  CHECK(b.cls.hadamard_order == 16);
  CHECK(b.cls.taylor == Verdict::no);
  // The array criterion only speaks about antipodal diameter-3 graphs.
  CHECK(b.cls.q_polynomial == Verdict::not_applicable);
}

TEST_CASE("extended code with 0 in the pair: graph is not distance-regular") {
  const auto b = build(extend_code(weight_class_code(4, WeightClassPair(0, 1))));
  CHECK_FALSE(b.cls.distance_regular);
  CHECK_FALSE(b.cls.intersection_array);
}

TEST_CASE("Hamming coset graph is complete") {
  const auto b = build(hamming_code(4));
  CHECK(b.cls.vertex_count == 16);
  CHECK(b.cls.valency == 15);
  CHECK(b.cls.diameter == 1);
  CHECK(b.cls.primitive);
  CHECK(b.cls.antipodal == Verdict::not_applicable);
  CHECK(b.cls.taylor == Verdict::not_applicable);
  for (std::size_t u = 0; u < 16; ++u) CHECK(b.dist.at(u, u) == 0);
}

TEST_CASE("distance matrix is symmetric and matches adjacency") {
  const auto b = build(weight_class_code(4, WeightClassPair(2, 3)));
  for (std::uint32_t u = 0; u < 32; ++u)
    for (std::uint32_t v = 0; v < 32; ++v) {
      CHECK(b.dist.at(u, v) == b.dist.at(v, u));
      CHECK((b.dist.at(u, v) == 1) == b.graph.adjacent(u, v));
    }
}

TEST_CASE("translations by syndromes are automorphisms") {
  const auto g = coset_graph(weight_class_code(4, WeightClassPair(0, 3)));
  for (std::uint32_t d = 0; d < 32; ++d) CHECK(is_translation_automorphism(g, d));
}

TEST_CASE("toy graph K_3") {
  const auto k3 = CosetGraph::from_adjacency({{1, 2}, {0, 2}, {0, 1}});
  CHECK(k3.vertex_count == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(k3.valency() == 2);
  const auto dist = distance_matrix(k3);
  CHECK(dist.diameter() == 1);
  const auto cls = classify(k3, dist);
  CHECK(cls.distance_regular);
  CHECK(cls.intersection_array->to_string() == "(2; 1)");
  const auto dot = export_graph(k3, GraphFormat::dot);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
  CHECK(dot.find("1 -- 0;") == std::string::npos);
}

TEST_CASE("graph validation errors") {
  CHECK_THROWS_AS(CosetGraph::from_adjacency({{1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(CosetGraph::from_adjacency({{0}}), std::invalid_argument);
  CHECK_THROWS_AS(CosetGraph::from_adjacency({{1, 1}, {0, 0}}), std::invalid_argument);
  const auto two_parts = CosetGraph::from_adjacency({{1}, {0}, {3}, {2}});
  CHECK_THROWS(distance_matrix(two_parts));
  const auto even = code_from_parity(BitMatrix::from_rows({BitVec::from_string("11")}));
  CHECK_THROWS(coset_graph(even));
}

TEST_CASE("export formats") {
  const auto g = coset_graph(weight_class_code(4, WeightClassPair(0, 1)));
  const auto text = export_graph(g, GraphFormat::adjacency_list);
  CHECK(parse_adjacency_list(text).adjacency == g.adjacency);

  const auto j = nlohmann::json::parse(export_graph(g, GraphFormat::json));
  CHECK(j["schema"] == 1);
  CHECK(j["vertices"] == 32);
  CHECK(j["adjacency"].size() == 32);

  CHECK(parse_graph_format("dot") == GraphFormat::dot);
  CHECK(parse_graph_format("text") == GraphFormat::adjacency_list);
  CHECK(parse_graph_format("json") == GraphFormat::json);
  CHECK_THROWS_AS(parse_graph_format("xml"), std::invalid_argument);
}

TEST_CASE("property: adjacency-list round trip on random regular Cayley graphs") {
  std::mt19937_64 rng(0xC0DE0301);
  for (int trial = 0; trial < 20; ++trial) {
    const int bits = 3 + static_cast<int>(rng() % 4);
    // Parity matrix with a random set of distinct nonzero columns spanning F_2^bits.
    std::vector<std::uint64_t> cols;
    for (int r = 0; r < bits; ++r) cols.push_back(std::uint64_t{1} << r);
    for (std::uint64_t c = 1; c < (std::uint64_t{1} << bits); ++c)
      if (__builtin_popcountll(c) > 1 && rng() % 2) cols.push_back(c);
    BitMatrix h(static_cast<std::size_t>(bits), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (int r = 0; r < bits; ++r)
        if ((cols[j] >> (bits - 1 - r)) & 1u) h.set(static_cast<std::size_t>(r), j);
    const auto g = coset_graph(code_from_parity(h));
    CHECK(g.valency() == static_cast<int>(cols.size()));
    CHECK(parse_adjacency_list(export_graph(g, GraphFormat::adjacency_list)).adjacency == g.adjacency);
  }
}

TEST_CASE("distance matrix does not depend on thread count") {
  const auto g = coset_graph(extend_code(weight_class_code(6, WeightClassPair(1, 2))));
  const auto a = distance_matrix(g, 1);
  const auto b = distance_matrix(g, 4);
  bool same = true;
  for (std::size_t u = 0; u < g.vertex_count; ++u)
    for (std::size_t v = 0; v < g.vertex_count; ++v) same = same && a.at(u, v) == b.at(u, v);
  CHECK(same);
}
