#include "ctcodes/graphs.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ctcodes/errors.hpp"
#include "ctcodes/parallel.hpp"

namespace ctcodes {

namespace {

constexpr std::uint8_t kFar = 0xFF;

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
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

bool matches_pattern(const IntersectionArray& a, const std::vector<int>& b, const std::vector<int>& c) {
  return a.b == b && a.c == c;
}

}  // namespace

int CosetGraph::valency() const {
  if (adjacency.empty()) return 0;
  const std::size_t k = adjacency.front().size();
  for (const auto& nbrs : adjacency)
    if (nbrs.size() != k) return -1;
  return static_cast<int>(k);
}

std::size_t CosetGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& nbrs : adjacency) total += nbrs.size();
  return total / 2;
}

bool CosetGraph::adjacent(std::uint32_t u, std::uint32_t v) const {
  const auto& nbrs = adjacency.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

CosetGraph CosetGraph::from_adjacency(std::vector<std::vector<std::uint32_t>> adjacency) {
  CosetGraph g;
  g.vertex_count = adjacency.size();
  for (std::size_t u = 0; u < adjacency.size(); ++u) {
    auto& nbrs = adjacency[u];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw std::invalid_argument("repeated neighbour at vertex " + std::to_string(u));
    for (auto v : nbrs) {
      if (v >= adjacency.size()) throw std::invalid_argument("neighbour index out of range");
      if (v == u) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    }
  }
  g.adjacency = std::move(adjacency);
  for (std::uint32_t u = 0; u < g.vertex_count; ++u)
    for (auto v : g.adjacency[u])
      if (!g.adjacent(v, u)) throw std::invalid_argument("adjacency lists are not symmetric");
  return g;
}

CosetGraph coset_graph(const Code& code) {
  if (code.min_distance < 3)
    throw std::invalid_argument("coset graph needs minimum distance at least 3");
  const SyndromeTable table = syndrome_table(code);
  if (table.bits > kMaxSyndromeBits) throw CapacityError("coset graph too large");
  const std::size_t v = table.size();
  std::vector<std::vector<std::uint32_t>> adjacency(v);
  for (std::size_t s = 0; s < v; ++s) {
    auto& nbrs = adjacency[s];
    nbrs.reserve(table.columns.size());
    for (auto col : table.columns) nbrs.push_back(static_cast<std::uint32_t>(s ^ col));
  }
  return CosetGraph::from_adjacency(std::move(adjacency));
}

DistanceMatrix::DistanceMatrix(std::size_t vertex_count, std::vector<std::uint8_t> distances)
    : n_(vertex_count), d_(std::move(distances)) {
  if (d_.size() != n_ * n_) throw std::invalid_argument("distance matrix has the wrong size");
  for (auto x : d_) diameter_ = std::max<int>(diameter_, x);
}

DistanceMatrix distance_matrix(const CosetGraph& graph, int threads) {
  const std::size_t n = graph.vertex_count;
  if (n > kMaxGraphVertices)
    throw CapacityError("distance matrix limited to " + std::to_string(kMaxGraphVertices) +
                        " vertices");
  std::vector<std::uint8_t> d(n * n, kFar);
  parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<std::uint32_t> queue;
    queue.reserve(n);
    for (std::size_t src = begin; src < end; ++src) {
      std::uint8_t* row = &d[src * n];
      row[src] = 0;
      queue.assign(1, static_cast<std::uint32_t>(src));
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t u = queue[head];
        for (auto v : graph.adjacency[u]) {
          if (row[v] != kFar) continue;
          row[v] = static_cast<std::uint8_t>(row[u] + 1);
          queue.push_back(v);
        }
      }
    }
  });
  if (std::find(d.begin(), d.end(), kFar) != d.end())
    throw std::invalid_argument("graph is disconnected");
  return DistanceMatrix(n, std::move(d));
}

DistanceRegularity check_distance_regular(const CosetGraph& graph, const DistanceMatrix& dist) {
  DistanceRegularity result;
  const int k = graph.valency();
  if (k < 0) return result;
  const int diameter = dist.diameter();
  std::vector<int> b(static_cast<std::size_t>(diameter) + 1, -1);
  std::vector<int> c(static_cast<std::size_t>(diameter) + 1, -1);
  const std::size_t n = graph.vertex_count;
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t delta = 0; delta < n; ++delta) {
      const int i = dist.at(g, delta);
      int towards = 0;
      int away = 0;
      for (auto w : graph.adjacency[delta]) {
        const int j = dist.at(g, w);
        if (j == i - 1)
          ++towards;
        else if (j == i + 1)
          ++away;
      }
      auto record = [](int& slot, int value) {
        if (slot < 0) slot = value;
        return slot == value;
      };
      if (!record(c[i], towards) || !record(b[i], away)) return result;
    }
  }
  IntersectionArray array;
  for (int i = 0; i < diameter; ++i) array.b.push_back(b[i]);
  for (int i = 1; i <= diameter; ++i) array.c.push_back(c[i]);
  result.distance_regular = true;
  result.array = std::move(array);
  return result;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::not_applicable:
      return "not applicable";
  }
  return "unknown";
}

Antipodality check_antipodal(const CosetGraph& graph, const DistanceMatrix& dist) {
  Antipodality result;
  const int diameter = dist.diameter();
  if (diameter < 3) return result;
  const std::size_t n = graph.vertex_count;
  auto class_of = [&](std::size_t u) {
    std::vector<std::uint32_t> cls;
    for (std::size_t v = 0; v < n; ++v)
      if (v == u || dist.at(u, v) == diameter) cls.push_back(static_cast<std::uint32_t>(v));
    return cls;
  };
  std::vector<bool> assigned(n, false);
  for (std::size_t u = 0; u < n; ++u) {
    const auto cls = class_of(u);
    for (auto w : cls)
      if (class_of(w) != cls) {
        result.antipodal = Verdict::no;
        result.classes.clear();
        return result;
      }
    if (!assigned[u]) {
      for (auto w : cls) assigned[w] = true;
      result.classes.push_back(cls);
    }
  }
  result.antipodal = Verdict::yes;
  return result;
}

bool distance_graph_connected(const DistanceMatrix& dist, int i) {
  const std::size_t n = dist.vertex_count();
  DisjointSets sets(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (dist.at(u, v) == i) sets.unite(u, v);
  for (std::size_t u = 1; u < n; ++u)
    if (sets.find(u) != sets.find(0)) return false;
  return true;
}

bool check_primitive(const CosetGraph& graph, const DistanceMatrix& dist) {
  if (graph.vertex_count == 0) return false;
  for (int i = 1; i <= dist.diameter(); ++i)
    if (!distance_graph_connected(dist, i)) return false;
  return true;
}

GraphClassification classify(const CosetGraph& graph, const DistanceMatrix& dist) {
  GraphClassification cls;
  cls.vertex_count = graph.vertex_count;
  cls.valency = graph.valency();
  cls.diameter = dist.diameter();
  const auto dr = check_distance_regular(graph, dist);
  cls.distance_regular = dr.distance_regular;
  cls.intersection_array = dr.array;
  cls.antipodal = check_antipodal(graph, dist).antipodal;
  cls.primitive = check_primitive(graph, dist);

  const int k = cls.valency;
  const auto v = static_cast<long long>(graph.vertex_count);
  // Pattern (k, mu, 1; 1, mu, k).
  const bool taylor_pattern = dr.array && dr.array->diameter() == 3 &&
                              matches_pattern(*dr.array, {k, dr.array->b[1], 1},
                                              {1, dr.array->b[1], k});
  if (cls.diameter >= 3)
    cls.taylor = (taylor_pattern && v == 2LL * (k + 1)) ? Verdict::yes : Verdict::no;
  if (cls.distance_regular && cls.antipodal == Verdict::yes && cls.diameter == 3)
    cls.q_polynomial = taylor_pattern ? Verdict::yes : Verdict::no;

  if (dr.array && cls.diameter == 4 && v % 4 == 0 && (v / 4) % 2 == 0) {
    const int order = static_cast<int>(v / 4);
    if (matches_pattern(*dr.array, {order, order - 1, order / 2, 1},
                        {1, order / 2, order - 1, order}))
      cls.hadamard_order = order;
  }
  return cls;
}

bool is_translation_automorphism(const CosetGraph& graph, std::uint32_t delta) {
  const std::size_t n = graph.vertex_count;
  for (std::uint32_t u = 0; u < n; ++u) {
    const std::uint32_t image = u ^ delta;
    if (image >= n) return false;
    for (auto w : graph.adjacency[u])
      if ((w ^ delta) >= n || !graph.adjacent(image, w ^ delta)) return false;
  }
  return true;
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "dot") return GraphFormat::dot;
  if (name == "adjacency-list" || name == "adjacency" || name == "text")
    return GraphFormat::adjacency_list;
  if (name == "json") return GraphFormat::json;
  throw std::invalid_argument("unknown graph format '" + std::string(name) +
                              "' (expected dot, adjacency-list, json)");
}

std::string export_graph(const CosetGraph& graph, GraphFormat format) {
  std::ostringstream out;
  switch (format) {
    case GraphFormat::dot:
      out << "graph coset_graph {\n";
      for (std::size_t u = 0; u < graph.vertex_count; ++u) out << "  " << u << ";\n";
      for (std::size_t u = 0; u < graph.vertex_count; ++u)
        for (auto v : graph.adjacency[u])
          if (u < v) out << "  " << u << " -- " << v << ";\n";
      out << "}\n";
      break;
    case GraphFormat::adjacency_list:
      out << graph.vertex_count << "\n";
      for (std::size_t u = 0; u < graph.vertex_count; ++u) {
        out << u << ":";
        for (auto v : graph.adjacency[u]) out << " " << v;
        out << "\n";
      }
      break;
    case GraphFormat::json: {
      nlohmann::ordered_json j;
      j["schema"] = 1;
      j["vertices"] = graph.vertex_count;
      j["valency"] = graph.valency();
      j["adjacency"] = graph.adjacency;
      out << j.dump() << "\n";
      break;
    }
  }
  return out.str();
}

CosetGraph parse_adjacency_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t n = 0;
  if (!(in >> n)) throw std::invalid_argument("adjacency list must start with the vertex count");
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<std::uint32_t>> adjacency(n);
  std::vector<bool> seen(n, false);
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("adjacency line lacks ':'");
    const std::size_t u = std::stoul(line.substr(0, colon));
    if (u >= n || seen[u]) throw std::invalid_argument("bad or repeated vertex label");
    seen[u] = true;
    std::istringstream nbrs(line.substr(colon + 1));
    std::uint32_t v = 0;
    while (nbrs >> v) adjacency[u].push_back(v);
    if (!nbrs.eof()) throw std::invalid_argument("malformed neighbour list");
  }
  return CosetGraph::from_adjacency(std::move(adjacency));
}

}  // namespace ctcodes
