#pragma once

// Coset graphs and the structural checks used on them: distance regularity,
// antipodality, primitivity, and the Taylor / Hadamard / Q-polynomial
// parameter patterns.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctcodes/construct.hpp"
#include "ctcodes/cosets.hpp"

namespace ctcodes {

// Largest vertex count accepted by distance_matrix (one byte per pair).
inline constexpr std::size_t kMaxGraphVertices = std::size_t{1} << 14;

struct CosetGraph {
  std::size_t vertex_count = 0;
  std::vector<std::vector<std::uint32_t>> adjacency;

  // Common degree, or -1 when the graph is not regular.
  int valency() const;
  std::size_t edge_count() const;
  bool adjacent(std::uint32_t u, std::uint32_t v) const;

  // Validates that the lists describe a simple undirected graph.
  static CosetGraph from_adjacency(std::vector<std::vector<std::uint32_t>> adjacency);
};

// Vertices are syndromes; s ~ s + column_j for every parity column. Requires
// minimum distance >= 3.
CosetGraph coset_graph(const Code& code);

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t vertex_count, std::vector<std::uint8_t> distances);

  std::size_t vertex_count() const { return n_; }
  int at(std::size_t u, std::size_t v) const { return d_[u * n_ + v]; }
  int diameter() const { return diameter_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> d_;
  int diameter_ = 0;
};

// BFS from every vertex. Throws on a disconnected graph.
DistanceMatrix distance_matrix(const CosetGraph& graph, int threads = 1);

struct DistanceRegularity {
  bool distance_regular = false;
  std::optional<IntersectionArray> array;
};

DistanceRegularity check_distance_regular(const CosetGraph& graph, const DistanceMatrix& dist);

enum class Verdict { no, yes, not_applicable };
std::string to_string(Verdict v);

struct Antipodality {
  Verdict antipodal = Verdict::not_applicable;
  // Classes {v} plus the vertices at maximum distance from v; filled when
  // antipodal.
  std::vector<std::vector<std::uint32_t>> classes;
};

// Diameter below 3 reports not_applicable.
Antipodality check_antipodal(const CosetGraph& graph, const DistanceMatrix& dist);

// Whether the distance-i graph is connected.
bool distance_graph_connected(const DistanceMatrix& dist, int i);
bool check_primitive(const CosetGraph& graph, const DistanceMatrix& dist);

struct GraphClassification {
  std::size_t vertex_count = 0;
  int valency = 0;
  int diameter = 0;
  bool distance_regular = false;
  std::optional<IntersectionArray> intersection_array;
  Verdict antipodal = Verdict::not_applicable;
  bool primitive = false;
  Verdict taylor = Verdict::not_applicable;
  std::optional<int> hadamard_order;
  Verdict q_polynomial = Verdict::not_applicable;
};

GraphClassification classify(const CosetGraph& graph, const DistanceMatrix& dist);

// True if x -> x ^ delta maps edges to edges.
bool is_translation_automorphism(const CosetGraph& graph, std::uint32_t delta);

enum class GraphFormat { dot, adjacency_list, json };
GraphFormat parse_graph_format(std::string_view name);

std::string export_graph(const CosetGraph& graph, GraphFormat format);
// Inverse of the adjacency_list format.
CosetGraph parse_adjacency_list(std::string_view text);

}  // namespace ctcodes
