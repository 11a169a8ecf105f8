#include "stairprune.h"

#include <cstring>
#include <new>
#include <string>

#include "core/builtin_checks.hpp"
#include "core/ci.hpp"
#include "core/distances.hpp"
#include "core/errors.hpp"
#include "core/io.hpp"
#include "core/module.hpp"
#include "core/pruning.hpp"

using namespace stairprune;

struct sp_module {
  Module value;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const char* message) {
  g_last_error = message;
  return code;
}

// runs the body, translating exceptions into status codes
template <typename Fn>
int guarded(Fn&& body) {
  try {
    body();
    g_last_error.clear();
    return SP_OK;
  } catch (const parse_error& e) {
    return fail(SP_ERROR_PARSE, e.what());
  } catch (const validation_error& e) {
    return fail(SP_ERROR_VALIDATION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SP_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SP_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(SP_ERROR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int require(bool ok, const char* message) {
  if (!ok) throw validation_error(message);
  return 0;
}

}  // namespace

extern "C" {

const char* sp_version(void) { return "1.0.0"; }

const char* sp_last_error(void) { return g_last_error.c_str(); }

void sp_string_free(char* s) { delete[] s; }

void sp_module_free(sp_module* m) { delete m; }

int sp_module_parse_json(const char* json_text, sp_module** out) {
  return guarded([&] {
    require(json_text && out, "null argument");
    *out = new sp_module{parse_module_json(json_text)};
  });
}

int sp_module_to_json(const sp_module* m, char** out) {
  return guarded([&] {
    require(m && out, "null argument");
    *out = copy_string(module_to_json(m->value));
  });
}

int sp_module_dim(const sp_module* m, int* out) {
  return guarded([&] {
    require(m && out, "null argument");
    *out = m->value.dim();
  });
}

int sp_module_supdim(const sp_module* m, int* out) {
  return guarded([&] {
    require(m && out, "null argument");
    *out = m->value.supdim();
  });
}

int sp_module_generate(uint64_t seed, int r, int dim, int gens_per_summand, int coord_bound,
                       sp_module** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new sp_module{random_module(seed, r, dim, gens_per_summand, coord_bound)};
  });
}

int sp_module_shift(const sp_module* m, const char* eps, sp_module** out) {
  return guarded([&] {
    require(m && eps && out, "null argument");
    *out = new sp_module{m->value.shifted(parse_rational(eps))};
  });
}

int sp_module_iso(const sp_module* a, const sp_module* b, int* isomorphic) {
  return guarded([&] {
    require(a && b && isomorphic, "null argument");
    *isomorphic = iso_check(a->value, b->value) ? 1 : 0;
  });
}

int sp_prune(const sp_module* m, const char* alpha, sp_module** out) {
  return guarded([&] {
    require(m && alpha && out, "null argument");
    *out = new sp_module{prune(m->value, parse_rational(alpha))};
  });
}

int sp_graph_dot(const sp_module* m, const char* alpha, char** out) {
  return guarded([&] {
    require(m && alpha && out, "null argument");
    *out = copy_string(graph_to_dot(m->value, parse_rational(alpha)));
  });
}

int sp_plot_svg(const sp_module* m, char** out) {
  return guarded([&] {
    require(m && out, "null argument");
    *out = copy_string(module_to_svg(m->value));
  });
}

int sp_distance_pruning(const sp_module* a, const sp_module* b, const char* tol, int exact,
                        char** out) {
  return guarded([&] {
    require(a && b && tol && out, "null argument");
    const auto mode = exact ? PruningDistanceMode::exact : PruningDistanceMode::bisect;
    *out = copy_string(format_distance(pruning_distance(a->value, b->value, parse_rational(tol), mode)));
  });
}

int sp_distance_bottleneck(const sp_module* a, const sp_module* b, char** out) {
  return guarded([&] {
    require(a && b && out, "null argument");
    *out = copy_string(format_distance(bottleneck_distance(a->value, b->value)));
  });
}

int sp_distance_interleaving(const sp_module* a, const sp_module* b, const char* field, int max_r,
                             char** out) {
  return guarded([&] {
    require(a && b && field && out, "null argument");
    Field f;
    if (std::strcmp(field, "f2") == 0)
      f = Field::f2;
    else if (std::strcmp(field, "f3") == 0)
      f = Field::f3;
    else
      throw validation_error("field must be 'f2' or 'f3'");
    *out = copy_string(
        format_distance(interleaving_distance_bruteforce(a->value, b->value, f, max_r)));
  });
}

int sp_verify(char** report, int* failures) {
  return guarded([&] {
    require(report && failures, "null argument");
    std::string text;
    int failed = 0;
    for (const auto& r : run_builtin_checks()) {
      text += (r.passed ? "ok   " : "FAIL ") + r.name + "\n";
      if (!r.passed) ++failed;
    }
    *failures = failed;
    *report = copy_string(text);
  });
}

}  // extern "C"
