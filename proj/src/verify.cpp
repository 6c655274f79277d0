#include "ctcodes/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "ctcodes/errors.hpp"

namespace ctcodes {

namespace {

std::string tag(WeightClassPair p) {
  return "c" + std::to_string(p.first()) + std::to_string(p.second());
}

std::string braces(WeightClassPair p) { return "{" + p.label() + "}"; }

std::string params(std::size_t n, std::size_t k, int d) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
}

Json verdict_json(Verdict v) {
  if (v == Verdict::not_applicable) return "not_applicable";
  return v == Verdict::yes;
}

Json array_text(const std::optional<IntersectionArray>& a) {
  return a ? Json(a->to_string()) : Json();
}

IntersectionArray three_level_array(int n, int mu) { return {{n, mu, 1}, {1, mu, n}}; }

// Checks B on pairs of basis vectors only; enough once B is known bilinear.
bool preserves_form_on_basis(const GroupElement& k, const SymplecticForm& form) {
  const int m = form.m();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (form(k.apply(1u << i), k.apply(1u << j)) != form(1u << i, 1u << j)) return false;
  return true;
}

bool same_histograms_within_orbits(const OrbitTable& orbits, const std::vector<WeightHistogram>& h) {
  for (std::size_t s = 0; s < orbits.orbit_of.size(); ++s)
    if (!(h[s] == h[orbits.orbits[orbits.orbit_of[s]].representative])) return false;
  return true;
}

class Builder {
 public:
  explicit Builder(VerifyReport& report) : report_(report) {}

  void check(std::string id, std::string statement, Json expected, Json computed) {
    Claim c;
    c.id = std::move(id);
    c.statement = std::move(statement);
    c.status = expected == computed ? ClaimStatus::pass : ClaimStatus::fail;
    c.expected = std::move(expected);
    c.computed = std::move(computed);
    report_.claims.push_back(std::move(c));
  }

  // Runs `compute` only when `enabled`; otherwise records a skipped claim.
  void maybe(bool enabled, std::string id, std::string statement, Json expected,
             const std::function<Json()>& compute) {
    if (enabled) {
      check(std::move(id), std::move(statement), std::move(expected), compute());
      return;
    }
    Claim c;
    c.id = std::move(id);
    c.statement = std::move(statement);
    c.expected = std::move(expected);
    c.status = ClaimStatus::skipped;
    report_.claims.push_back(std::move(c));
  }

 private:
  VerifyReport& report_;
};

void construction_claims(Builder& b, int m) {
  const std::size_t n = (std::size_t{1} << m) - 1;
  for (auto p : WeightClassPair::all()) {
    const Code code = weight_class_code(m, p);
    std::string expected;
    std::string what;
    if (p.odd_difference()) {
      expected = params(n, n - m - 1, 3);
      what = "has parameters [n, n-m-1, 3]";
    } else if (p.contains(0)) {
      expected = params(n, n - m - 1, 4);
      what = "is the even-weight subcode of the Hamming code, [n, n-m-1, 4]";
    } else {
      expected = params(n, n - m, 3);
      what = "has the Hamming parameters [n, n-m, 3]";
    }
    b.check("construct." + tag(p) + ".params", "The code for " + braces(p) + " " + what, expected,
            code_summary(code));
    if (p == WeightClassPair(1, 3))
      b.check("construct." + tag(p) + ".hamming", "The code for {1,3} equals the Hamming code", true,
              same_code(code, hamming_code(m)));
  }
}

void coset_claims(Builder& b, int m, int threads) {
  const int n = (1 << m) - 1;
  for (auto p : WeightClassPair::all()) {
    const Code code = weight_class_code(m, p);
    const CosetProfile profile = coset_profile(code, threads);
    const int rho = p == WeightClassPair(1, 3) ? 1 : 3;
    const std::string who = "The code for " + braces(p);
    b.check("cosets." + tag(p) + ".rho", who + " has covering radius " + std::to_string(rho), rho,
            profile.covering_radius);
    b.check("cosets." + tag(p) + ".completely_regular", who + " is completely regular", true,
            profile.completely_regular);
    if (p.odd_difference()) {
      const int mu = p.contains(0) ? (n - 3) / 2 : (n + 1) / 2;
      b.check("cosets." + tag(p) + ".array",
              who + " has intersection array (n, " + std::string(p.contains(0) ? "(n-3)/2" : "(n+1)/2") +
                  ", 1; 1, same, n)",
              three_level_array(n, mu).to_string(), array_text(profile.intersection_array));
      b.check("cosets." + tag(p) + ".deepest", who + " has exactly one coset of leader weight 3", 1,
              profile.level_sizes.size() > 3 ? profile.level_sizes[3] : 0);
    }
  }

  for (auto p : WeightClassPair::odd_pairs()) {
    const Code ext = extend_code(weight_class_code(m, p));
    const CosetProfile profile = coset_profile(ext, threads);
    const std::string who = "The extension of the code for " + braces(p);
    const bool regular = !p.contains(0);
    b.check("extended." + tag(p) + ".completely_regular",
            who + (regular ? " is completely regular" : " is not completely regular"), regular,
            profile.completely_regular);
    if (!regular) continue;
    b.check("extended." + tag(p) + ".rho", who + " has covering radius 4", 4, profile.covering_radius);
    const IntersectionArray expected{{n + 1, n, (n + 1) / 2, 1}, {1, (n + 1) / 2, n, n + 1}};
    b.check("extended." + tag(p) + ".array",
            who + " has intersection array (n+1, n, (n+1)/2, 1; 1, (n+1)/2, n, n+1)",
            expected.to_string(), array_text(profile.intersection_array));
    b.check("extended." + tag(p) + ".deepest", who + " has exactly one coset of leader weight 4", 1,
            profile.level_sizes.size() > 4 ? profile.level_sizes[4] : 0);
  }
}

void dual_claims(Builder& b, int m) {
  const int half = 1 << (m - 1);
  const int delta = 1 << (m / 2 - 1);
  for (auto p : WeightClassPair::all()) {
    Json expected;
    if (p.odd_difference())
      expected = Json::array({half - delta, half + delta});
    else if (p.contains(0))
      expected = Json::array({half, 2 * half});
    else
      expected = Json::array({0, half});
    const auto hist = dual_coset_histogram(m, p);
    b.check("dual." + tag(p) + ".weights",
            "Weights of the extended weight-class vector plus the linear span of the extended Hamming rows, " +
                braces(p),
            expected, hist.support());
  }
}

void star_claims(Builder& b, int m) {
  for (auto p : WeightClassPair::odd_pairs()) {
    const bool expected = !p.contains(0);
    const auto shifted = p.shifted();
    b.check("star." + tag(p) + ".equal",
            "The extension of the code for " + braces(p) + (expected ? " equals" : " differs from") +
                " the starred construction for " + braces(shifted),
            expected, same_code(extend_code(weight_class_code(m, p)), star_construction(m, shifted)));
  }
}

void form_claims(Builder& b, int m) {
  for (const auto& r : verify_quadratic_identities(m))
    b.check("forms.quadratic." + tag(r.pair),
            "f for " + braces(r.pair) + " matches its quadratic-form expression at every point", true,
            r.passed);
  const std::uint32_t size = 1u << m;
  for (auto p : WeightClassPair::odd_pairs()) {
    const SymplecticForm form(m, p);
    bool gram = true;
    bool alternating = true;
    bool bilinear = true;
    for (std::uint32_t u = 0; u < size; ++u) {
      if (form(u, u)) alternating = false;
      for (std::uint32_t v = 0; v < size; ++v) {
        if (form(u, v) != form.gram(u, v)) gram = false;
        if (m <= 4)
          for (std::uint32_t w = 0; w < size; ++w)
            if (form(u ^ w, v) != (form(u, v) ^ form(w, v))) bilinear = false;
      }
    }
    if (m > 4) {
      std::mt19937 rng(20261015u);
      std::uniform_int_distribution<std::uint32_t> pick(0, size - 1);
      for (int t = 0; t < 20000; ++t) {
        const auto u = pick(rng), v = pick(rng), w = pick(rng);
        if (form(u ^ w, v) != (form(u, v) ^ form(w, v))) bilinear = false;
      }
    }
    b.check("forms." + tag(p) + ".gram", "B for " + braces(p) + " equals u(Q+Q^T)v^T", true, gram);
    b.check("forms." + tag(p) + ".bilinear", "B for " + braces(p) + (m > 4 ? " is bilinear on 20000 seeded random triples" : " is bilinear"), true, bilinear);
    b.check("forms." + tag(p) + ".alternating", "B for " + braces(p) + " is alternating", true, alternating);
    b.check("forms." + tag(p) + ".nondegenerate", "B for " + braces(p) + " is nondegenerate", true,
            verify_nondegenerate(m, p));
  }
}

struct GroupData {
  int m = 0;
  int threads = 1;
  std::optional<GroupClosure> sp;
  std::optional<AffineGroup> extended;

  const GroupClosure& closure() {
    if (!sp) sp = symplectic_group(m, WeightClassPair(0, 1));
    return *sp;
  }
  const AffineGroup& affine() {
    if (!extended) extended = extended_group(m, closure());
    return *extended;
  }
};

void group_claims(Builder& b, int m, bool run, int threads) {
  GroupData g{m, threads, std::nullopt, std::nullopt};
  const std::uint64_t order = symplectic_order_formula(m);

  b.maybe(run, "group.sp.order", "The transvection closure has the product-formula order", order,
          [&] { return Json(g.closure().order()); });

  for (auto p : WeightClassPair::odd_pairs()) {
    const std::string who = braces(p);
    b.maybe(run, "group.sp." + tag(p) + ".preserves_form", "Every closure element preserves B for " + who,
            order, [&] {
              const SymplecticForm form(m, p);
              std::uint64_t count = 0;
              for (const auto& k : g.closure().elements)
                if (m <= 4 ? preserves_form(k, form) : preserves_form_on_basis(k, form)) ++count;
              return Json(count);
            });
    b.maybe(run, "group.sp." + tag(p) + ".automorphisms",
            "Every closure element induces an automorphism of the code for " + who, order, [&] {
              return Json(count_automorphisms(g.closure().elements, weight_class_code(m, p), m).accepted);
            });
    b.maybe(run, "group.sp." + tag(p) + ".orbits",
            "The group has rho+1 = 4 orbits on the cosets of the code for " + who, 4, [&] {
              return Json(symplectic_orbits(m, p, g.closure(), m > 4).count());
            });
    b.maybe(run, "group.sp." + tag(p) + ".orbit_enumerators",
            "Cosets in one orbit share leader weight and weight distribution, " + who, true, [&] {
              const Code code = weight_class_code(m, p);
              const auto orbits = symplectic_orbits(m, p, g.closure(), m > 4);
              return Json(orbits.refines_leader_weights() &&
                          same_histograms_within_orbits(orbits, all_coset_weights_macwilliams(code, threads)));
            });
    b.maybe(run, "group.sp." + tag(p) + ".weight_two",
            "Every weight-2 leader e_i + e_j has B(h_i, h_j) != epsilon and the group is transitive on them, " + who,
            Json::array({true, 1}), [&] {
              const auto w = weight_two_coset_check(m, p, g.closure());
              return Json::array({w.form_differs_from_epsilon, w.pair_orbits});
            });
  }

  b.maybe(run, "group.extended.order", "The extended group has order |Sp(m,2)| * 2^m", order << m,
          [&] { return Json(g.affine().order); });
  for (auto p : {WeightClassPair(1, 2), WeightClassPair(2, 3)}) {
    const std::string who = "the extension of the code for " + braces(p);
    b.maybe(run, "group.extended." + tag(p) + ".orbits", "The extended group has 5 orbits on the cosets of " + who,
            5, [&] { return Json(orbit_count_extended(m, p, g.affine()).count()); });
    b.maybe(run, "group.extended." + tag(p) + ".deepest_fixed",
            "The unique weight-4 coset of " + who + " is a fixed point", Json::array({4, 1}), [&] {
              const auto t = orbit_count_extended(m, p, g.affine());
              Json out = Json::array();
              for (const auto& o : t.orbits)
                if (o.leader_weight == 4) out = Json::array({o.leader_weight, o.size});
              return out;
            });
  }

  if (m != 4) return;
  b.maybe(run, "group.gl.order", "Enumerating GL(4,2) gives (2^4-1)(2^4-2)(2^4-4)(2^4-8) elements",
          general_linear_order(4), [&] { return Json(enumerate_general_linear(4).size()); });
  b.maybe(run, "group.gl.c02.orbits", "GL(4,2) has 4 orbits on the cosets of the code for {0,2}", 4,
          [&] { return Json(gl_orbit_check_even_part(4).orbits.count()); });
  b.maybe(run, "group.gl.form_preservers",
          "The elements of GL(4,2) preserving B are exactly the closure elements", Json::array({order, order}), [&] {
            const SymplecticForm form(4, WeightClassPair(0, 1));
            std::unordered_set<std::uint64_t> keys;
            for (const auto& k : g.closure().elements) keys.insert(k.key());
            std::uint64_t preserving = 0;
            std::uint64_t inside = 0;
            for (const auto& k : enumerate_general_linear(4))
              if (preserves_form(k, form)) {
                ++preserving;
                if (keys.count(k.key())) ++inside;
              }
            return Json::array({preserving, inside});
          });
  b.maybe(run, "group.gl.c01.automorphisms",
          "Exactly |Sp(4,2)| elements of GL(4,2) induce automorphisms of the code for {0,1}", order, [&] {
            return Json(count_automorphisms(enumerate_general_linear(4), weight_class_code(4, WeightClassPair(0, 1)), 4)
                            .accepted);
          });
}

void graph_claims(Builder& b, int m, int threads) {
  const int n = (1 << m) - 1;
  auto expect = [&](const std::string& prefix, const std::string& who, const Code& code, std::size_t vertices) {
    const CosetProfile profile = coset_profile(code, threads);
    const CosetGraph graph = coset_graph(code);
    const DistanceMatrix dist = distance_matrix(graph, threads);
    const GraphClassification c = classify(graph, dist);
    b.check(prefix + ".vertices", who + " has " + std::to_string(vertices) + " vertices", vertices, c.vertex_count);
    b.check(prefix + ".valency", who + " is regular of valency equal to the code length", code.length,
            c.valency);
    return std::tuple{profile, c};
  };

  for (auto p : WeightClassPair::odd_pairs()) {
    const std::string prefix = "graph." + tag(p);
    const std::string who = "The coset graph of the code for " + braces(p);
    auto [profile, c] = expect(prefix, who, weight_class_code(m, p), std::size_t{1} << (m + 1));
    b.check(prefix + ".array", who + " is distance-regular with the code's intersection array",
            array_json(profile.intersection_array), c.distance_regular ? array_json(c.intersection_array) : Json());
    b.check(prefix + ".antipodal", who + " is antipodal", true, verdict_json(c.antipodal));
    b.check(prefix + ".primitive", who + " is imprimitive", false, c.primitive);
    b.check(prefix + ".taylor", who + " is a Taylor graph", true, verdict_json(c.taylor));
    b.check(prefix + ".q_polynomial", who + " satisfies the antipodal diameter-3 Q-polynomial criterion", true,
            verdict_json(c.q_polynomial));
  }

  for (auto p : WeightClassPair::odd_pairs()) {
    const std::string prefix = "graph.extended." + tag(p);
    const std::string who = "The coset graph of the extension of the code for " + braces(p);
    auto [profile, c] = expect(prefix, who, extend_code(weight_class_code(m, p)), std::size_t{1} << (m + 2));
    if (p.contains(0)) {
      b.check(prefix + ".distance_regular", who + " is not distance-regular", false, c.distance_regular);
      continue;
    }
    b.check(prefix + ".array", who + " is distance-regular with the code's intersection array",
            array_json(profile.intersection_array), c.distance_regular ? array_json(c.intersection_array) : Json());
    b.check(prefix + ".antipodal", who + " is antipodal", true, verdict_json(c.antipodal));
    b.check(prefix + ".primitive", who + " is imprimitive", false, c.primitive);
    b.check(prefix + ".hadamard_order", who + " has the Hadamard graph array of order n+1", n + 1,
            c.hadamard_order ? Json(*c.hadamard_order) : Json());
  }
}

void oracle_claims(Builder& b, int m, int threads) {
  std::vector<std::pair<std::string, Code>> codes;
  for (auto p : WeightClassPair::all()) codes.emplace_back(tag(p), weight_class_code(m, p));
  for (auto p : WeightClassPair::odd_pairs())
    codes.emplace_back("extended." + tag(p), extend_code(weight_class_code(m, p)));
  for (const auto& [name, code] : codes) {
    b.check("oracle.macwilliams." + name,
            "Transform coset weight distributions equal exhaustive enumeration, " + name, true,
            all_coset_weights_macwilliams(code, threads) == all_coset_weights_exhaustive(code));
    b.check("oracle.leaders." + name, "BFS leader weights equal exhaustive minimum weights, " + name, true,
            coset_profile(code, threads).leader_weight == leader_weights_exhaustive(code));
  }
}

}  // namespace

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::skipped: return "skipped";
  }
  return "unknown";
}

std::size_t VerifyReport::count(ClaimStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [s](const Claim& c) { return c.status == s; }));
}

std::optional<std::string> VerifyReport::first_failure() const {
  for (const auto& c : claims)
    if (c.status == ClaimStatus::fail) return c.id;
  return std::nullopt;
}

Json VerifyReport::to_json() const {
  Json j;
  j["schema"] = kReportSchema;
  j["m"] = m;
  j["summary"] = {{"passed", count(ClaimStatus::pass)},
                  {"failed", count(ClaimStatus::fail)},
                  {"skipped", count(ClaimStatus::skipped)}};
  Json list = Json::array();
  for (const auto& c : claims)
    list.push_back({{"id", c.id},
                    {"statement", c.statement},
                    {"expected", c.expected},
                    {"computed", c.computed},
                    {"status", to_string(c.status)}});
  j["claims"] = std::move(list);
  j["notes"] = notes;
  return j;
}

VerifyReport verify_all(const VerifyOptions& options) {
  const int m = options.m;
  if (m != 4 && m != 6) throw std::invalid_argument("verify-all supports m = 4 or m = 6, got " + std::to_string(m));
  if (options.threads < 1) throw std::invalid_argument("threads must be positive");

  VerifyReport report;
  report.m = m;
  Builder b(report);
  construction_claims(b, m);
  coset_claims(b, m, options.threads);
  dual_claims(b, m);
  star_claims(b, m);
  form_claims(b, m);
  const bool run_group = !options.skip_group && (m == 4 || options.heavy);
  group_claims(b, m, run_group, options.threads);
  graph_claims(b, m, options.threads);
  if (m == 4) oracle_claims(b, m, options.threads);

  report.notes.push_back(
      "Distance transitivity of the coset graphs is not searched for directly; it follows from complete "
      "transitivity of the codes, which the orbit claims certify, via the coset-graph correspondence.");
  report.notes.push_back("Antipodality is evaluated on coset graphs only; no code-level antipodality is reported.");
  report.notes.push_back(
      "Dual histograms use the weight-class vector plus the span of the m linear rows of the extended Hamming "
      "matrix.");
  if (!run_group)
    report.notes.push_back(options.skip_group ? "Group claims skipped on request."
                                              : "Group claims at m = 6 are skipped unless --heavy is given.");
  return report;
}

Json code_json(const Code& code) {
  return {{"n", code.length},
          {"k", code.dimension},
          {"d", code.min_distance},
          {"d_is_bound", code.min_distance_is_bound},
          {"summary", code_summary(code)}};
}

Json array_json(const std::optional<IntersectionArray>& array) {
  if (!array) return nullptr;
  return {{"b", array->b}, {"c", array->c}, {"text", array->to_string()}};
}

Json profile_json(const Code& code, const CosetProfile& profile) {
  Json j;
  j["schema"] = kReportSchema;
  j["code"] = code_json(code);
  j["syndromes"] = profile.syndrome_count();
  j["rho"] = profile.covering_radius;
  j["completely_regular"] = profile.completely_regular;
  j["intersection_array"] = array_json(profile.intersection_array);
  j["level_sizes"] = profile.level_sizes;
  return j;
}

Json classification_json(const GraphClassification& c) {
  Json j;
  j["schema"] = kReportSchema;
  j["vertices"] = c.vertex_count;
  j["valency"] = c.valency;
  j["diameter"] = c.diameter;
  j["distance_regular"] = c.distance_regular;
  j["intersection_array"] = array_json(c.intersection_array);
  j["antipodal"] = verdict_json(c.antipodal);
  j["primitive"] = c.primitive;
  j["taylor"] = verdict_json(c.taylor);
  j["hadamard_order"] = c.hadamard_order ? Json(*c.hadamard_order) : Json();
  j["q_polynomial"] = verdict_json(c.q_polynomial);
  return j;
}

namespace {
void require_group_m(int m, bool heavy) {
  require_even_m(m);
  if (m > kMaxClosureDimension)
    throw CapacityError("group closure is limited to m <= 6");
  if (m == 6 && !heavy) throw std::invalid_argument("the m = 6 group closure requires --heavy");
}
}  // namespace

Json group_report(const GroupReportOptions& options) {
  const int m = options.m;
  require_group_m(m, options.heavy);
  std::vector<WeightClassPair> pairs;
  if (options.pair) {
    if (!options.pair->odd_difference())
      throw std::invalid_argument("group reports need an odd-difference pair, got {" + options.pair->label() + "}");
    pairs.push_back(*options.pair);
  } else {
    const auto odd = WeightClassPair::odd_pairs();
    pairs.assign(odd.begin(), odd.end());
  }
  const GroupClosure sp = symplectic_group(m, WeightClassPair(0, 1));
  const AffineGroup ext = extended_group(m, sp);
  Json j;
  j["schema"] = kReportSchema;
  j["m"] = m;
  j["order"] = sp.order();
  j["order_formula"] = symplectic_order_formula(m);
  j["generators"] = sp.generators.size();
  j["extended_order"] = ext.order;
  j["extended_method"] = ext.method;
  Json list = Json::array();
  for (auto p : pairs) {
    const auto orbits = symplectic_orbits(m, p, sp, m > 4);
    Json entry;
    entry["pair"] = p.label();
    entry["automorphisms"] = count_automorphisms(sp.elements, weight_class_code(m, p), m).accepted;
    entry["orbits"] = orbits.count();
    Json sizes = Json::array();
    for (const auto& o : orbits.orbits) sizes.push_back({{"leader_weight", o.leader_weight}, {"size", o.size}});
    entry["orbit_sizes"] = std::move(sizes);
    entry["extended_orbits"] = p.contains(0) ? Json() : Json(orbit_count_extended(m, p, ext).count());
    list.push_back(std::move(entry));
  }
  j["pairs"] = std::move(list);
  return j;
}

std::string group_dump_hex(int m, bool heavy) {
  require_group_m(m, heavy);
  return dump_closure_hex(symplectic_group(m, WeightClassPair(0, 1)));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ctcodes
