#pragma once

#include "va/engine.hpp"

#include "json.hpp"

namespace vc::api {

using Json = nlohmann::ordered_json;

struct SuiteResult {
  int status;  // 0 pass, 1 fail, 2 refused, 3 usage, 4 internal
  Json report;
};

/** Runs a named verification suite with JSON parameters. */
SuiteResult run_suite(const std::string& name, const Json& params);

/** Catalog of suites: name, what it verifies, accepted parameters. */
Json list_suites();

/** Field expression rendered in the presentation's input syntax. */
std::string field_str(const va::Presentation& P, const va::FieldExpr& f);

const char* engine_version();

}  // namespace vc::api
