#include "ctcodes/ctcodes.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <functional>
#include <ios>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>

#include "ctcodes/errors.hpp"
#include "ctcodes/verify.hpp"

struct ct_code {
  ctcodes::Code code;
};

struct ct_graph {
  ctcodes::CosetGraph graph;
};

namespace {

thread_local std::string last_error;

template <typename F>
ct_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return CT_OK;
  } catch (const ctcodes::CapacityError& e) {
    last_error = e.what();
    return CT_CAPACITY;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return CT_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return CT_OUT_OF_RANGE;
  } catch (const std::ios_base::failure& e) {
    last_error = e.what();
    return CT_IO;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CT_CAPACITY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CT_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return CT_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string(what) + " must not be null");
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ct_status make_code(ct_code_t** out, const std::function<ctcodes::Code()>& build) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    *out = new ct_code{build()};
  });
}

}  // namespace

extern "C" {

const char* ct_last_error_message(void) { return last_error.c_str(); }

const char* ct_status_name(ct_status status) {
  switch (status) {
    case CT_OK: return "ok";
    case CT_INVALID_ARGUMENT: return "invalid argument";
    case CT_OUT_OF_RANGE: return "out of range";
    case CT_CAPACITY: return "capacity exceeded";
    case CT_IO: return "i/o error";
    case CT_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void ct_string_free(char* s) { std::free(s); }

ct_status ct_code_create_hamming(int m, ct_code_t** out) {
  return make_code(out, [m] { return ctcodes::hamming_code(m); });
}

ct_status ct_code_create_augmented(int m, int i1, int i2, ct_code_t** out) {
  return make_code(out, [=] { return ctcodes::weight_class_code(m, ctcodes::WeightClassPair(i1, i2)); });
}

ct_status ct_code_create_extended_hamming(int m, ct_code_t** out) {
  return make_code(out, [m] { return ctcodes::code_from_parity(ctcodes::extended_hamming_parity(m)); });
}

ct_status ct_code_create_star(int m, int j1, int j2, ct_code_t** out) {
  return make_code(out, [=] { return ctcodes::star_construction(m, ctcodes::WeightClassPair(j1, j2)); });
}

ct_status ct_code_create_from_text(const char* text, ct_code_t** out) {
  return make_code(out, [text] {
    require(text, "text");
    return ctcodes::code_from_parity(ctcodes::parse_matrix(text));
  });
}

ct_status ct_code_extend(const ct_code_t* code, ct_code_t** out) {
  return make_code(out, [code] {
    require(code, "code");
    return ctcodes::extend_code(code->code);
  });
}

void ct_code_destroy(ct_code_t* code) { delete code; }

ct_status ct_code_get_params(const ct_code_t* code, ct_code_params* out) {
  return guarded([&] {
    require(code, "code");
    require(out, "out");
    out->length = code->code.length;
    out->dimension = code->code.dimension;
    out->min_distance = code->code.min_distance;
    out->min_distance_is_bound = code->code.min_distance_is_bound ? 1 : 0;
    out->redundancy = code->code.redundancy();
  });
}

ct_status ct_code_summary(const ct_code_t* code, char** out) {
  return guarded([&] {
    require(code, "code");
    require(out, "out");
    *out = copy_out(ctcodes::code_summary(code->code));
  });
}

ct_status ct_code_equal(const ct_code_t* a, const ct_code_t* b, int* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = ctcodes::same_code(a->code, b->code) ? 1 : 0;
  });
}

ct_status ct_code_parity_text(const ct_code_t* code, char** out) {
  return guarded([&] {
    require(code, "code");
    require(out, "out");
    *out = copy_out(ctcodes::format_matrix(code->code.parity));
  });
}

ct_status ct_code_profile_json(const ct_code_t* code, int threads, char** out) {
  return guarded([&] {
    require(code, "code");
    require(out, "out");
    if (threads < 1) throw std::invalid_argument("threads must be positive");
    const auto profile = ctcodes::coset_profile(code->code, threads);
    *out = copy_out(ctcodes::dump(ctcodes::profile_json(code->code, profile)));
  });
}

ct_status ct_graph_create(const ct_code_t* code, ct_graph_t** out) {
  return guarded([&] {
    require(code, "code");
    require(out, "out");
    *out = nullptr;
    *out = new ct_graph{ctcodes::coset_graph(code->code)};
  });
}

void ct_graph_destroy(ct_graph_t* graph) { delete graph; }

ct_status ct_graph_export(const ct_graph_t* graph, const char* format, char** out) {
  return guarded([&] {
    require(graph, "graph");
    require(format, "format");
    require(out, "out");
    *out = copy_out(ctcodes::export_graph(graph->graph, ctcodes::parse_graph_format(format)));
  });
}

ct_status ct_graph_classification_json(const ct_graph_t* graph, int threads, char** out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    if (threads < 1) throw std::invalid_argument("threads must be positive");
    const auto dist = ctcodes::distance_matrix(graph->graph, threads);
    *out = copy_out(ctcodes::dump(ctcodes::classification_json(ctcodes::classify(graph->graph, dist))));
  });
}

ct_status ct_group_report_json(int m, int pair_i1, int pair_i2, int heavy, char** out) {
  return guarded([&] {
    require(out, "out");
    ctcodes::GroupReportOptions options;
    options.m = m;
    options.heavy = heavy != 0;
    if (pair_i1 >= 0) options.pair = ctcodes::WeightClassPair(pair_i1, pair_i2);
    *out = copy_out(ctcodes::dump(ctcodes::group_report(options)));
  });
}

ct_status ct_group_dump_hex(int m, int heavy, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_out(ctcodes::group_dump_hex(m, heavy != 0));
  });
}

ct_status ct_verify_all_json(const ct_verify_options* options, char** out, int* all_passed) {
  return guarded([&] {
    require(options, "options");
    require(out, "out");
    ctcodes::VerifyOptions o;
    o.m = options->m;
    o.heavy = options->heavy != 0;
    o.skip_group = options->skip_group != 0;
    o.threads = options->threads;
    const auto report = ctcodes::verify_all(o);
    *out = copy_out(ctcodes::dump(report.to_json()));
    if (all_passed) *all_passed = report.all_passed() ? 1 : 0;
  });
}

}  // extern "C"
