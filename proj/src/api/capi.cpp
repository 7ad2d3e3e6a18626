#include "vertexcalc.h"

#include "api/suites.hpp"

#include <cstring>

using vc::api::Json;

struct vc_algebra {
  vc::va::Presentation pres;
  vc::va::Engine engine;
  explicit vc_algebra(vc::va::Presentation p) : pres(std::move(p)), engine(pres) {}
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

}  // namespace

extern "C" {

const char* vc_version(void) { return vc::api::engine_version(); }

void vc_free(char* s) { std::free(s); }

int vc_list_suites(char** json_out) {
  if (!json_out) return VC_USAGE;
  *json_out = dup_string(vc::api::list_suites().dump(2));
  return VC_OK;
}

int vc_run_suite(const char* suite, const char* params_json, char** report_out) {
  if (!suite || !report_out) return VC_USAGE;
  Json params = Json::object();
  if (params_json && *params_json) {
    try {
      params = Json::parse(params_json);
    } catch (const std::exception& e) {
      *report_out = dup_string(Json{{"error", std::string("bad params: ") + e.what()}}.dump(2));
      return VC_USAGE;
    }
  }
  vc::api::SuiteResult r = vc::api::run_suite(suite, params);
  *report_out = dup_string(r.report.dump(2));
  return r.status;
}

vc_algebra* vc_algebra_open_preset(const char* name, char** error_out) {
  if (!name) {
    set_error(error_out, "null preset name");
    return nullptr;
  }
  try {
    return new vc_algebra(vc::va::preset(name));
  } catch (const std::exception& e) {
    set_error(error_out, e.what());
    return nullptr;
  }
}

vc_algebra* vc_algebra_open_text(const char* text, char** error_out) {
  if (!text) {
    set_error(error_out, "null presentation text");
    return nullptr;
  }
  try {
    return new vc_algebra(vc::va::parse_presentation(text));
  } catch (const std::exception& e) {
    set_error(error_out, e.what());
    return nullptr;
  }
}

void vc_algebra_close(vc_algebra* a) { delete a; }

int vc_algebra_describe(const vc_algebra* a, char** json_out) {
  if (!a || !json_out) return VC_USAGE;
  Json gens = Json::array();
  for (uint32_t i = 0; i < a->pres.ngens(); ++i) {
    const auto& g = a->pres.gen(i);
    gens.push_back(Json{{"name", g.name},
                        {"parity", g.parity == vc::va::Parity::Odd ? "odd" : "even"},
                        {"weight", vc::rat_str(g.weight)}});
  }
  Json params = Json::array();
  for (size_t i = 0; i < a->pres.params()->size(); ++i)
    params.push_back(a->pres.params()->name(i));
  Json out{{"algebra", a->pres.name()},
           {"kind", a->pres.kind() == vc::va::Kind::FreeField ? "free" : "structure"},
           {"generators", gens},
           {"params", params}};
  *json_out = dup_string(out.dump(2));
  return VC_OK;
}

int vc_ope(const vc_algebra* a, const char* left, const char* right, char** json_out,
           char** error_out) {
  if (!a || !left || !right || !json_out) return VC_USAGE;
  try {
    vc::va::FieldExpr l = vc::va::parse_field(a->pres, left);
    vc::va::FieldExpr r = vc::va::parse_field(a->pres, right);
    vc::va::PoleExpansion pe = a->engine.ope(l, r);
    Json poles = Json::object();
    for (const auto& [n, f] : pe.poles)
      poles[std::to_string(n)] = vc::api::field_str(a->pres, f);
    *json_out = dup_string(
        Json{{"max_pole", pe.max_pole()}, {"poles", poles}}.dump(2));
    return VC_OK;
  } catch (const vc::parse_error& e) {
    set_error(error_out, e.what());
    return VC_USAGE;
  } catch (const std::exception& e) {
    set_error(error_out, e.what());
    return VC_ERROR;
  }
}

int vc_normal_order(const vc_algebra* a, const char* expr, char** out,
                    char** error_out) {
  if (!a || !expr || !out) return VC_USAGE;
  try {
    vc::va::FieldExpr f = vc::va::parse_field(a->pres, expr);
    *out = dup_string(vc::api::field_str(a->pres, a->engine.canonical(f)));
    return VC_OK;
  } catch (const vc::parse_error& e) {
    set_error(error_out, e.what());
    return VC_USAGE;
  } catch (const std::exception& e) {
    set_error(error_out, e.what());
    return VC_ERROR;
  }
}

}  // extern "C"
