#include <doctest.h>

#include <json.hpp>
#include <algorithm>
#include <string>

#include "ctcodes/ctcodes.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  ct_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("C API: code lifecycle and parameters") {
  ct_code_t* code = nullptr;
  REQUIRE(ct_code_create_augmented(4, 0, 1, &code) == CT_OK);
  ct_code_params params{};
  REQUIRE(ct_code_get_params(code, &params) == CT_OK);
  CHECK(params.length == 15);
  CHECK(params.dimension == 10);
  CHECK(params.min_distance == 3);
  CHECK(params.redundancy == 5);

  char* summary = nullptr;
  REQUIRE(ct_code_summary(code, &summary) == CT_OK);
  CHECK(take(summary) == "[15,10,3]");

  char* text = nullptr;
  REQUIRE(ct_code_parity_text(code, &text) == CT_OK);
  const std::string matrix = take(text);
  ct_code_t* parsed = nullptr;
  REQUIRE(ct_code_create_from_text(matrix.c_str(), &parsed) == CT_OK);
  int same = 0;
  REQUIRE(ct_code_equal(code, parsed, &same) == CT_OK);
  CHECK(same == 1);

  ct_code_destroy(parsed);
  ct_code_destroy(code);
  ct_code_destroy(nullptr);
}

TEST_CASE("C API: Hamming identification and starred construction") {
  ct_code_t* c13 = nullptr;
  ct_code_t* ham = nullptr;
  REQUIRE(ct_code_create_augmented(4, 3, 1, &c13) == CT_OK);
  REQUIRE(ct_code_create_hamming(4, &ham) == CT_OK);
  int same = 0;
  REQUIRE(ct_code_equal(c13, ham, &same) == CT_OK);
  CHECK(same == 1);

  ct_code_t* c12 = nullptr;
  ct_code_t* ext = nullptr;
  ct_code_t* star = nullptr;
  REQUIRE(ct_code_create_augmented(4, 1, 2, &c12) == CT_OK);
  REQUIRE(ct_code_extend(c12, &ext) == CT_OK);
  REQUIRE(ct_code_create_star(4, 2, 3, &star) == CT_OK);
  REQUIRE(ct_code_equal(ext, star, &same) == CT_OK);
  CHECK(same == 1);

  ct_code_t* ext_ham = nullptr;
  REQUIRE(ct_code_create_extended_hamming(4, &ext_ham) == CT_OK);
  ct_code_params params{};
  REQUIRE(ct_code_get_params(ext_ham, &params) == CT_OK);
  CHECK(params.length == 16);
  CHECK(params.dimension == 11);

  for (auto* c : {c13, ham, c12, ext, star, ext_ham}) ct_code_destroy(c);
}

TEST_CASE("C API: profile and graph JSON") {
  ct_code_t* code = nullptr;
  REQUIRE(ct_code_create_augmented(4, 1, 2, &code) == CT_OK);
  char* profile = nullptr;
  REQUIRE(ct_code_profile_json(code, 2, &profile) == CT_OK);
  const auto p = nlohmann::json::parse(take(profile));
  CHECK(p["schema"] == 1);
  CHECK(p["rho"] == 3);
  CHECK(p["completely_regular"] == true);
  CHECK(p["intersection_array"]["text"] == "(15, 8, 1; 1, 8, 15)");

  ct_graph_t* graph = nullptr;
  REQUIRE(ct_graph_create(code, &graph) == CT_OK);
  char* cls = nullptr;
  REQUIRE(ct_graph_classification_json(graph, 1, &cls) == CT_OK);
  const auto c = nlohmann::json::parse(take(cls));
  CHECK(c["vertices"] == 32);
  CHECK(c["taylor"] == true);
  CHECK(c["antipodal"] == true);
  CHECK(c["primitive"] == false);
  CHECK(c["hadamard_order"].is_null());

  char* dot = nullptr;
  REQUIRE(ct_graph_export(graph, "dot", &dot) == CT_OK);
  CHECK(take(dot).rfind("graph coset_graph {", 0) == 0);
  char* bad = nullptr;
  CHECK(ct_graph_export(graph, "xml", &bad) == CT_INVALID_ARGUMENT);
  CHECK(std::string(ct_last_error_message()).find("xml") != std::string::npos);

  ct_graph_destroy(graph);
  ct_code_destroy(code);
}

TEST_CASE("C API: error codes") {
  ct_code_t* code = nullptr;
  CHECK(ct_code_create_augmented(3, 0, 1, &code) == CT_INVALID_ARGUMENT);
  CHECK(code == nullptr);
  CHECK(std::string(ct_last_error_message()) == "m must be even");
  CHECK(ct_code_create_augmented(4, 1, 1, &code) == CT_INVALID_ARGUMENT);
  CHECK(ct_code_create_augmented(4, 0, 1, nullptr) == CT_INVALID_ARGUMENT);
  CHECK(ct_code_create_from_text("2 2\n1\n", &code) != CT_OK);
  CHECK(ct_code_get_params(nullptr, nullptr) == CT_INVALID_ARGUMENT);

  char* out = nullptr;
  CHECK(ct_group_report_json(8, -1, -1, 1, &out) == CT_CAPACITY);
  CHECK(ct_group_report_json(6, -1, -1, 0, &out) == CT_INVALID_ARGUMENT);
  CHECK(ct_group_report_json(4, 0, 2, 0, &out) == CT_INVALID_ARGUMENT);
  ct_verify_options bad{5, 0, 0, 1};
  int passed = 0;
  CHECK(ct_verify_all_json(&bad, &out, &passed) == CT_INVALID_ARGUMENT);
  CHECK(std::string(ct_status_name(CT_CAPACITY)) == "capacity exceeded");
}

TEST_CASE("C API: group report and hex dump, m = 4") {
  char* out = nullptr;
  REQUIRE(ct_group_report_json(4, 1, 2, 0, &out) == CT_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["order"] == 720);
  CHECK(j["extended_order"] == 11520);
  CHECK(j["pairs"][0]["orbits"] == 4);
  CHECK(j["pairs"][0]["extended_orbits"] == 5);

  REQUIRE(ct_group_dump_hex(4, 0, &out) == CT_OK);
  const auto hex = take(out);
  CHECK(std::count(hex.begin(), hex.end(), '\n') == 720);
}

TEST_CASE("C API: verify-all at m = 4 passes every claim") {
  ct_verify_options options{4, 0, 0, 1};
  char* out = nullptr;
  int passed = 0;
  REQUIRE(ct_verify_all_json(&options, &out, &passed) == CT_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(passed == 1);
  CHECK(j["schema"] == 1);
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["summary"]["skipped"] == 0);
  bool saw_vertices = false;
  for (const auto& c : j["claims"])
    if (c["id"] == "graph.c01.vertices") {
      saw_vertices = true;
      CHECK(c["computed"] == 32);
    }
  CHECK(saw_vertices);
}

TEST_CASE("C API: verify-all at m = 6 with group claims skipped") {
  ct_verify_options options{6, 0, 1, 2};
  char* out = nullptr;
  int passed = 0;
  REQUIRE(ct_verify_all_json(&options, &out, &passed) == CT_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(passed == 1);
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["summary"]["skipped"].get<int>() > 0);
  for (const auto& c : j["claims"]) {
    const std::string id = c["id"];
    CHECK((c["status"] == "skipped") == (id.rfind("group.", 0) == 0));
  }
}
