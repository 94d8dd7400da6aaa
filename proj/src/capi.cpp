#include "fanodelta/fanodelta.h"

#include <functional>
#include <new>

#include "fanodelta/errors.hpp"
#include "report.hpp"

struct fd_result {
  std::string json;
  std::string text;
  std::string csv;
  std::string error;
};

namespace {

using fanodelta::ojson;

ojson str_or_null(const char* s) { return s ? ojson(s) : ojson(nullptr); }

fd_status guarded(fd_result** out, const std::function<fanodelta::Rendered()>& body) {
  if (!out) return FD_ERR_INTERNAL;
  *out = new (std::nothrow) fd_result;
  if (!*out) return FD_ERR_INTERNAL;
  try {
    fanodelta::Rendered r = body();
    (*out)->json = std::move(r.json);
    (*out)->text = std::move(r.text);
    (*out)->csv = std::move(r.csv);
    if (r.status != 0) {
      (*out)->error = "one or more oracle checks failed";
      return static_cast<fd_status>(r.status);
    }
    return FD_OK;
  } catch (const fanodelta::ParseError& e) {
    (*out)->error = e.what();
    return FD_ERR_PARSE;
  } catch (const fanodelta::DomainError& e) {
    (*out)->error = e.what();
    return FD_ERR_DOMAIN;
  } catch (const fanodelta::OracleDisagreement& e) {
    (*out)->error = e.what();
    return FD_ERR_ORACLE;
  } catch (const std::exception& e) {
    (*out)->error = e.what();
    return FD_ERR_INTERNAL;
  }
}

void require(const char* s, const char* name) {
  if (!s) throw fanodelta::ParseError(std::string("missing value for '") + name + "'");
}

}  // namespace

extern "C" {

fd_status fd_bundle(int n, const char* r, const char* delta_v, const char* a, const char* b, fd_result** out) {
  return guarded(out, [&] {
    require(r, "r");
    require(delta_v, "delta_v");
    return fanodelta::run_command("bundle", {{"n", n},
                                             {"r", r},
                                             {"delta_v", delta_v},
                                             {"a", a ? a : "0"},
                                             {"b", b ? b : "0"}});
  });
}

fd_status fd_cone(int n, const char* r, const char* delta_v, const char* c, fd_result** out) {
  return guarded(out, [&] {
    require(r, "r");
    require(delta_v, "delta_v");
    return fanodelta::run_command("cone", {{"n", n}, {"r", r}, {"delta_v", delta_v}, {"c", c ? c : "0"}});
  });
}

fd_status fd_cone_iterate(int n, int d, int i, const char* delta_v0, fd_result** out) {
  return guarded(out, [&] {
    return fanodelta::run_command("cone-iterate",
                                  {{"n", n}, {"d", d}, {"i", i}, {"delta_v0", delta_v0 ? delta_v0 : "ge1"}});
  });
}

fd_status fd_branched_cone(int n, int k, int d, int l, const char* delta_pair, fd_result** out) {
  return guarded(out, [&] {
    return fanodelta::run_command("branched-cone",
                                  {{"n", n}, {"k", k}, {"d", d}, {"l", l}, {"delta_pair", str_or_null(delta_pair)}});
  });
}

fd_status fd_angle(int n, const char* lambda, const char* a, int base_semistable, int divisor_semistable,
                   int base_polystable, int divisor_polystable, fd_result** out) {
  return guarded(out, [&] {
    require(lambda, "lambda");
    return fanodelta::run_command("angle", {{"n", n},
                                            {"lambda", lambda},
                                            {"a", str_or_null(a)},
                                            {"base_semistable", base_semistable != 0},
                                            {"divisor_semistable", divisor_semistable != 0},
                                            {"base_polystable", base_polystable != 0},
                                            {"divisor_polystable", divisor_polystable != 0}});
  });
}

fd_status fd_calabi(int n, const char* r, const char* beta, const char* mu, int csv_samples, fd_result** out) {
  return guarded(out, [&] {
    require(r, "r");
    return fanodelta::run_command("calabi", {{"n", n},
                                             {"r", r},
                                             {"beta", str_or_null(beta)},
                                             {"mu", mu ? mu : "1"},
                                             {"csv_samples", csv_samples > 0 ? ojson(csv_samples) : ojson(nullptr)}});
  });
}

fd_status fd_verify(int deep, const char* grid, int grid_is_json, fd_result** out) {
  return guarded(out, [&] {
    ojson grid_value = grid ? ojson(grid) : ojson("default");
    if (grid && grid_is_json) {
      try {
        grid_value = ojson::parse(grid);
      } catch (const nlohmann::json::exception& e) {
        throw fanodelta::ParseError(std::string("grid file is not valid JSON: ") + e.what());
      }
    }
    return fanodelta::run_command("verify", {{"deep", deep != 0}, {"grid", grid_value}});
  });
}

fd_status fd_check(const char* json_text, fd_result** out) {
  return guarded(out, [&] {
    require(json_text, "json");
    return fanodelta::run_check(json_text);
  });
}

const char* fd_result_json(const fd_result* result) { return result ? result->json.c_str() : ""; }
const char* fd_result_text(const fd_result* result) { return result ? result->text.c_str() : ""; }
const char* fd_result_csv(const fd_result* result) { return result ? result->csv.c_str() : ""; }
const char* fd_result_error(const fd_result* result) { return result ? result->error.c_str() : ""; }

void fd_result_free(fd_result* result) { delete result; }

const char* fd_status_name(fd_status status) {
  switch (status) {
    case FD_OK:
      return "ok";
    case FD_ERR_INTERNAL:
      return "internal error";
    case FD_ERR_PARSE:
      return "parse error";
    case FD_ERR_DOMAIN:
      return "domain error";
    case FD_ERR_ORACLE:
      return "oracle disagreement";
  }
  return "unknown";
}

const char* fd_version(void) { return "1.0.0"; }

}  // extern "C"
