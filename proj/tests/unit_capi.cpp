#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vertexcalc.h"

#include "json.hpp"

using Json = nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  vc_free(s);
  return out;
}

Json strip_timing(Json j) {
  j.erase("timing_ms");
  return j;
}

}  // namespace

TEST_CASE("suite catalog is populated") {
  char* out = nullptr;
  REQUIRE(vc_list_suites(&out) == VC_OK);
  Json catalog = Json::parse(take(out));
  CHECK(catalog.size() >= 12);
  bool has_decouple = false, has_jacobi = false;
  for (const auto& s : catalog) {
    CHECK_FALSE(s["anchor"].get<std::string>().empty());
    if (s["suite"] == "decouple-wt12") has_decouple = true;
    if (s["suite"] == "jacobi-large-n4") has_jacobi = true;
  }
  CHECK(has_decouple);
  CHECK(has_jacobi);
}

TEST_CASE("exit codes: pass, fail, refused, usage") {
  char* rep = nullptr;
  CHECK(vc_run_suite("euler-poincare", "{\"bound\": 6}", &rep) == VC_OK);
  take(rep);
  CHECK(vc_run_suite("external-curves", "{}", &rep) == VC_REFUSED);
  take(rep);
  CHECK(vc_run_suite("nosuch-suite", "{}", &rep) == VC_USAGE);
  take(rep);
  CHECK(vc_run_suite("curves-eval", "{\"map\": \"k2\", \"k\": \"2\"}", &rep) ==
        VC_USAGE);  // parametrization pole
  Json r = Json::parse(take(rep));
  CHECK(r["error"].get<std::string>().find("pole") != std::string::npos);
}

TEST_CASE("reports are deterministic modulo the timing field") {
  char* a = nullptr;
  char* b = nullptr;
  vc_run_suite("curves-points", "{}", &a);
  vc_run_suite("curves-points", "{}", &b);
  CHECK(strip_timing(Json::parse(take(a))) == strip_timing(Json::parse(take(b))));
}

TEST_CASE("algebra handles: presets, text, ope, normal order") {
  char* err = nullptr;
  vc_algebra* a = vc_algebra_open_preset("heisenberg1", &err);
  REQUIRE(a != nullptr);
  char* out = nullptr;
  REQUIRE(vc_ope(a, ":alpha1 alpha1:", "alpha1", &out, &err) == VC_OK);
  Json pe = Json::parse(take(out));
  CHECK(pe["max_pole"] == 2);
  CHECK(pe["poles"]["2"] == "(2)*alpha1");
  CHECK(pe["poles"]["1"] == "(2)*D^1 alpha1");
  CHECK(vc_ope(a, "nosuch", "alpha1", &out, &err) == VC_USAGE);
  take(err);
  vc_algebra_close(a);

  vc_algebra* g = vc_algebra_open_preset("godd4", &err);
  REQUIRE(g != nullptr);
  REQUIRE(vc_ope(g, "phi1", "phi2", &out, &err) == VC_OK);
  CHECK(Json::parse(take(out))["max_pole"] == 0);
  REQUIRE(vc_ope(g, "phi1", "phi1", &out, &err) == VC_OK);
  CHECK(Json::parse(take(out))["poles"]["3"] == "(1)");
  vc_algebra_close(g);

  const char* text =
      "algebra toy\nkind free\ngen a even 1\nope a a { 2: 1 }\n";
  vc_algebra* t = vc_algebra_open_text(text, &err);
  REQUIRE(t != nullptr);
  REQUIRE(vc_algebra_describe(t, &out) == VC_OK);
  Json desc = Json::parse(take(out));
  CHECK(desc["generators"].size() == 1);
  REQUIRE(vc_normal_order(t, ":a (D a):", &out, &err) == VC_OK);
  CHECK(take(out) == "(1)*:D^1 a a:");
  vc_algebra_close(t);

  vc_algebra* bad = vc_algebra_open_preset("nosuch", &err);
  CHECK(bad == nullptr);
  CHECK(take(err).find("unknown preset") != std::string::npos);
}

TEST_CASE("bundled presentation files parse to the embedded presets") {
  char* err = nullptr;
  for (const char* name : {"affine-sl2", "large-n4", "small-n4"}) {
    vc_algebra* a = vc_algebra_open_preset(name, &err);
    REQUIRE(a != nullptr);
    vc_algebra_close(a);
  }
}
