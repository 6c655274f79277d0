// Command-line front end. Talks to the library only through ctcodes.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ctcodes/ctcodes.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;

using Json = nlohmann::ordered_json;

struct CliError : std::runtime_error {
  CliError(int code, const std::string& message) : std::runtime_error(message), exit_code(code) {}
  int exit_code;
};

void log(const std::string& message) { std::cerr << "ctcodes: " << message << "\n"; }

void check(ct_status status) {
  if (status == CT_OK) return;
  const int code = status == CT_INTERNAL ? kExitClaimFailure : kExitUsage;
  throw CliError(code, std::string(ct_status_name(status)) + ": " + ct_last_error_message());
}

// Owns a string returned by the C API.
std::string take(char* s) {
  std::string out(s ? s : "");
  ct_string_free(s);
  return out;
}

template <typename T, void (*Destroy)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& o) noexcept : p(std::exchange(o.p, nullptr)) {}
  ~Handle() { Destroy(p); }
};
using CodeHandle = Handle<ct_code_t, ct_code_destroy>;
using GraphHandle = Handle<ct_graph_t, ct_graph_destroy>;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError(kExitUsage, "cannot open " + path + " for writing");
  out << content;
  if (!out) throw CliError(kExitUsage, "failed writing " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitUsage, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Pair {
  int i1;
  int i2;
  std::string label() const { return std::to_string(i1) + "," + std::to_string(i2); }
  std::string file_tag() const { return std::to_string(i1) + std::to_string(i2); }
};

std::vector<Pair> all_pairs() { return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}; }

std::optional<Pair> parse_pair(const std::string& text) {
  if (text == "all") return std::nullopt;
  int a = 0, b = 0;
  char comma = 0;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%d %c %d %c", &a, &comma, &b, &extra) != 3 || comma != ',')
    throw CliError(kExitUsage, "--pair expects i,j or all, got '" + text + "'");
  if (a > b) std::swap(a, b);
  return Pair{a, b};
}

void require_even_m(int m) {
  if (m % 2 != 0) throw CliError(kExitUsage, "m must be even (got " + std::to_string(m) + ")");
  if (m < 4 || m > 12) throw CliError(kExitUsage, "m must lie in [4, 12] (got " + std::to_string(m) + ")");
}

struct Options {
  int m = 4;
  std::string pair = "all";
  bool extended = false;
  std::string format = "dot";
  std::string out;
  std::string input;
  std::string dump_hex;
  int threads = 1;
  bool heavy = false;
  bool skip_group = false;
};

CodeHandle build_code(const Options& o, std::optional<Pair> pair) {
  CodeHandle code;
  if (!o.input.empty()) {
    check(ct_code_create_from_text(read_file(o.input).c_str(), &code.p));
  } else {
    require_even_m(o.m);
    if (!pair) throw CliError(kExitUsage, "a single --pair i,j is required here");
    check(ct_code_create_augmented(o.m, pair->i1, pair->i2, &code.p));
  }
  if (o.extended) {
    CodeHandle ext;
    check(ct_code_extend(code.p, &ext.p));
    return ext;
  }
  return code;
}

std::string summary_of(const ct_code_t* code, int m, bool extended) {
  std::string s = take([&] {
    char* out = nullptr;
    check(ct_code_summary(code, &out));
    return out;
  }());
  CodeHandle reference;
  if (extended)
    check(ct_code_create_extended_hamming(m, &reference.p));
  else
    check(ct_code_create_hamming(m, &reference.p));
  int same = 0;
  check(ct_code_equal(code, reference.p, &same));
  if (same) s += extended ? " (extended Hamming)" : " (Hamming)";
  return s;
}

int cmd_construct(const Options& o) {
  if (!o.input.empty()) throw CliError(kExitUsage, "construct does not take --input");
  require_even_m(o.m);
  const auto selected = parse_pair(o.pair);
  std::vector<Pair> pairs = selected ? std::vector<Pair>{*selected} : all_pairs();
  if (!selected && !o.out.empty()) std::filesystem::create_directories(o.out);

  for (const auto& p : pairs) {
    CodeHandle code = build_code(o, p);
    char* text = nullptr;
    check(ct_code_parity_text(code.p, &text));
    const std::string matrix = take(text);
    const std::string summary = summary_of(code.p, o.m, o.extended);
    if (selected) {
      if (o.out.empty())
        std::cout << matrix;
      else
        write_file(o.out, matrix);
      std::cout << summary << "\n";
    } else {
      if (!o.out.empty()) {
        const std::string name = "C" + p.file_tag() + (o.extended ? "_ext" : "") + ".txt";
        write_file((std::filesystem::path(o.out) / name).string(), matrix);
      }
      std::cout << "{" << p.label() << "} " << summary << "\n";
    }
  }
  return kExitOk;
}

std::string profile_of(const ct_code_t* code, int threads) {
  char* out = nullptr;
  check(ct_code_profile_json(code, threads, &out));
  return take(out);
}

int cmd_cosets(const Options& o) {
  const auto selected = o.input.empty() ? parse_pair(o.pair) : std::nullopt;
  std::string result;
  if (!o.input.empty() || selected) {
    CodeHandle code = build_code(o, selected);
    result = profile_of(code.p, o.threads);
  } else {
    require_even_m(o.m);
    Json report;
    report["schema"] = 1;
    report["m"] = o.m;
    report["extended"] = o.extended;
    Json list = Json::array();
    for (const auto& p : all_pairs()) {
      if (o.extended && (p.i2 - p.i1) % 2 == 0) continue;
      CodeHandle code = build_code(o, p);
      Json entry;
      entry["pair"] = p.label();
      entry["profile"] = Json::parse(profile_of(code.p, o.threads));
      list.push_back(std::move(entry));
    }
    report["profiles"] = std::move(list);
    result = report.dump(2) + "\n";
  }
  if (o.out.empty())
    std::cout << result;
  else
    write_file(o.out, result);
  return kExitOk;
}

int cmd_graph(const Options& o) {
  const auto selected = o.input.empty() ? parse_pair(o.pair) : std::nullopt;
  if (o.input.empty() && !selected) throw CliError(kExitUsage, "graph needs a single --pair i,j or --input");
  // Validate the format before doing any work.
  if (o.format != "dot" && o.format != "json" && o.format != "text")
    throw CliError(kExitUsage, "unknown format '" + o.format + "' (expected dot, json or text)");
  CodeHandle code = build_code(o, selected);
  GraphHandle graph;
  check(ct_graph_create(code.p, &graph.p));

  char* text = nullptr;
  check(ct_graph_export(graph.p, o.format.c_str(), &text));
  const std::string exported = take(text);
  char* cls = nullptr;
  check(ct_graph_classification_json(graph.p, o.threads, &cls));
  const std::string classification = take(cls);

  if (o.out.empty()) {
    std::cout << exported;
    std::cerr << classification;
  } else {
    write_file(o.out, exported);
    std::cout << classification;
  }
  return kExitOk;
}

int cmd_group(const Options& o) {
  if (o.m % 2 != 0) throw CliError(kExitUsage, "m must be even (got " + std::to_string(o.m) + ")");
  const auto selected = parse_pair(o.pair);
  char* out = nullptr;
  check(ct_group_report_json(o.m, selected ? selected->i1 : -1, selected ? selected->i2 : -1, o.heavy, &out));
  const std::string report = take(out);
  if (!o.dump_hex.empty()) {
    char* hex = nullptr;
    check(ct_group_dump_hex(o.m, o.heavy, &hex));
    write_file(o.dump_hex, take(hex));
  }
  if (o.out.empty())
    std::cout << report;
  else
    write_file(o.out, report);
  return kExitOk;
}

int cmd_verify_all(const Options& o) {
  if (o.m % 2 != 0) throw CliError(kExitUsage, "m must be even (got " + std::to_string(o.m) + ")");
  ct_verify_options options{o.m, o.heavy ? 1 : 0, o.skip_group ? 1 : 0, o.threads};
  char* out = nullptr;
  int passed = 0;
  check(ct_verify_all_json(&options, &out, &passed));
  const std::string report = take(out);
  if (o.out.empty())
    std::cout << report;
  else
    write_file(o.out, report);

  const Json j = Json::parse(report);
  const auto& s = j["summary"];
  log("verify-all m=" + std::to_string(o.m) + ": " + std::to_string(s["passed"].get<int>()) + " passed, " +
      std::to_string(s["failed"].get<int>()) + " failed, " + std::to_string(s["skipped"].get<int>()) + " skipped");
  if (passed) return kExitOk;
  for (const auto& c : j["claims"])
    if (c["status"] == "fail") log("claim failed: " + c["id"].get<std::string>());
  return kExitClaimFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Completely transitive codes: construction, cosets, graphs, groups and verification"};
  app.require_subcommand(1);
  Options o;

  auto add_m = [&](CLI::App* sub) { sub->add_option("-m", o.m, "Even parameter m (code length 2^m - 1)"); };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* construct = app.add_subcommand("construct", "Build parity matrices and print code parameters");
  add_m(construct);
  construct->add_option("--pair", o.pair, "Residue pair i,j or 'all'");
  construct->add_flag("--extended", o.extended, "Extend by an overall parity coordinate");
  construct->add_option("--out", o.out, "Matrix file (single pair) or directory (all pairs)");

  auto* cosets = app.add_subcommand("cosets", "Coset profile: covering radius and intersection array");
  add_m(cosets);
  cosets->add_option("--pair", o.pair, "Residue pair i,j or 'all'");
  cosets->add_flag("--extended", o.extended, "Use the extended code");
  cosets->add_option("--input", o.input, "Parity matrix file instead of a constructed code");
  cosets->add_option("--out", o.out, "Write the JSON profile here");
  add_threads(cosets);

  auto* graph = app.add_subcommand("graph", "Coset graph export and classification");
  add_m(graph);
  graph->add_option("--pair", o.pair, "Residue pair i,j");
  graph->add_flag("--extended", o.extended, "Use the extended code");
  graph->add_option("--input", o.input, "Parity matrix file instead of a constructed code");
  graph->add_option("--format", o.format, "dot, json or text");
  graph->add_option("--out", o.out, "Write the graph here; classification goes to stdout");
  add_threads(graph);

  auto* group = app.add_subcommand("group", "Symplectic group closure, extended group and coset orbits");
  add_m(group);
  group->add_option("--pair", o.pair, "Odd-difference pair i,j or 'all'");
  group->add_flag("--heavy", o.heavy, "Allow the m = 6 closure");
  group->add_option("--dump-hex", o.dump_hex, "Write the closure elements as sorted hex lines");
  group->add_option("--out", o.out, "Write the JSON report here");

  auto* verify = app.add_subcommand("verify-all", "Check every claim and emit a JSON report");
  add_m(verify);
  verify->add_flag("--heavy", o.heavy, "Run the m = 6 group claims");
  verify->add_flag("--skip-group", o.skip_group, "Mark group claims as skipped");
  verify->add_option("--out", o.out, "Write the JSON report here");
  add_threads(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(o);
    if (*cosets) return cmd_cosets(o);
    if (*graph) return cmd_graph(o);
    if (*group) return cmd_group(o);
    if (*verify) return cmd_verify_all(o);
  } catch (const CliError& e) {
    log(e.what());
    return e.exit_code;
  } catch (const std::exception& e) {
    log(e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
