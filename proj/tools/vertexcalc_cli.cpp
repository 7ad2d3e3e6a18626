// Batch front-end over the C API: named verification suites, algebra
// presentations and exact truncation-curve arithmetic.
//
// Exit codes: 0 pass, 1 check failed, 2 refused, 3 usage error.

#include "vertexcalc.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using Json = nlohmann::ordered_json;

std::string take(char* s) {
  std::string out = s ? s : "";
  vc_free(s);
  return out;
}

int run_one(const std::string& suite, const Json& params) {
  char* rep = nullptr;
  int status = vc_run_suite(suite.c_str(), params.dump().c_str(), &rep);
  std::cout << take(rep) << "\n";
  return status;
}

int run_batch(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open batch file " << path << "\n";
    return VC_USAGE;
  }
  struct Req {
    std::string suite;
    Json params;
  };
  std::vector<Req> reqs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("suite")) {
      std::cerr << "bad batch line: " << line << "\n";
      return VC_USAGE;
    }
    reqs.push_back({j.at("suite").get<std::string>(),
                    j.contains("params") ? j.at("params") : Json::object()});
  }
  size_t workers = 1;
  if (const char* env = std::getenv("VERTEXCALC_WORKERS")) workers = std::atoi(env);
  workers = std::max<size_t>(1, std::min(workers, reqs.size() ? reqs.size() : 1));

  std::vector<std::pair<int, std::string>> results(reqs.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= reqs.size()) break;
      char* rep = nullptr;
      int status = vc_run_suite(reqs[i].suite.c_str(), reqs[i].params.dump().c_str(), &rep);
      results[i] = {status, take(rep)};
    }
  };
  std::vector<std::thread> pool;
  for (size_t t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  int worst = 0;
  for (const auto& [status, rep] : results) {
    std::cout << rep << "\n";
    worst = std::max(worst, status);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification suites for vertex-superalgebra identities"};
  app.require_subcommand(0, 1);

  // flag-style interface, equivalent to the run/batch subcommands
  std::string top_suite, top_batch;
  std::vector<std::string> top_kvs;
  long top_order = -1, top_bound = -1;
  bool top_json = false;
  app.add_option("--suite", top_suite, "suite to run");
  app.add_option("--param", top_kvs, "name=value (exact fractions)");
  app.add_option("--order", top_order, "q-expansion order");
  app.add_option("--weight-bound", top_bound, "weight bound");
  app.add_flag("--json", top_json, "JSON output (always on)");
  app.add_option("--batch", top_batch, "file with one JSON request per line");

  auto* list = app.add_subcommand("list", "catalog of suites and presets");

  std::string suite;
  std::vector<std::string> kvs;
  long order = -1, weight_bound = -1;
  auto* run = app.add_subcommand("run", "run one named suite");
  run->add_option("--suite", suite, "suite name")->required();
  run->add_option("--param", kvs, "name=value (exact fractions)");
  run->add_option("--order", order, "q-expansion order");
  run->add_option("--weight-bound", weight_bound, "weight bound");
  bool json_flag = false;
  run->add_flag("--json", json_flag, "JSON output (always on; kept for scripts)");

  std::string batch_path;
  auto* batch = app.add_subcommand("batch", "one JSON request per line");
  batch->add_option("file", batch_path, "batch file")->required();

  // curves convenience wrappers
  auto* curves = app.add_subcommand("curves", "truncation-curve arithmetic");
  auto* clist = curves->add_subcommand("list", "curve and map names");
  std::string map_name, curve_a, curve_b, family;
  std::string kval;
  auto* ceval = curves->add_subcommand("eval", "evaluate a parametrization");
  ceval->add_option("map", map_name)->required();
  ceval->add_option("k", kval)->required();
  auto* cint = curves->add_subcommand("intersect", "intersect two curves");
  cint->add_option("curveA", curve_a)->required();
  cint->add_option("curveB", curve_b)->required();
  auto* cfam = curves->add_subcommand("family", "coincidence family check");
  cfam->add_option("id", family, "family id (defaults to all)");
  long nlo = 2, nhi = 8;
  cfam->add_option("--n-lo", nlo);
  cfam->add_option("--n-hi", nhi);

  std::string algebra = "heisenberg1", left, right, expr;
  auto* ope = app.add_subcommand("ope", "singular OPE of two field expressions");
  ope->add_option("--algebra", algebra, "preset name");
  ope->add_option("left", left)->required();
  ope->add_option("right", right)->required();
  auto* no = app.add_subcommand("normal-order", "canonical PBW form");
  no->add_option("--algebra", algebra, "preset name");
  no->add_option("expr", expr)->required();

  CLI11_PARSE(app, argc, argv);

  if (!top_suite.empty()) {
    Json params = Json::object();
    for (const auto& kv : top_kvs) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) {
        std::cerr << "bad --param, expected name=value: " << kv << "\n";
        return VC_USAGE;
      }
      params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    if (top_order >= 0) params["order"] = top_order;
    if (top_bound >= 0) params["weight_bound"] = top_bound;
    return run_one(top_suite, params);
  }
  if (!top_batch.empty()) return run_batch(top_batch);
  if (list->parsed()) {
    char* out = nullptr;
    vc_list_suites(&out);
    std::cout << take(out) << "\n";
    return 0;
  }
  if (run->parsed()) {
    Json params = Json::object();
    for (const auto& kv : kvs) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) {
        std::cerr << "bad --param, expected name=value: " << kv << "\n";
        return VC_USAGE;
      }
      params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    if (order >= 0) params["order"] = order;
    if (weight_bound >= 0) params["weight_bound"] = weight_bound;
    return run_one(suite, params);
  }
  if (batch->parsed()) return run_batch(batch_path);
  if (clist->parsed()) {
    Json out{{"curves", {"p1", "p2", "p3", "p4", "degenerate"}},
             {"maps", {"k2", "kh", "kk", "small"}}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (ceval->parsed()) return run_one("curves-eval", Json{{"map", map_name}, {"k", kval}});
  if (cint->parsed())
    return run_one("curves-intersect", Json{{"curveA", curve_a}, {"curveB", curve_b}});
  if (cfam->parsed()) {
    Json params{{"n_lo", nlo}, {"n_hi", nhi}};
    if (!family.empty()) params["family"] = family;
    return run_one("curves-family", params);
  }
  if (ope->parsed() || no->parsed()) {
    char* err = nullptr;
    vc_algebra* a = vc_algebra_open_preset(algebra.c_str(), &err);
    if (!a) {
      std::cerr << take(err) << "\n";
      return VC_USAGE;
    }
    char* out = nullptr;
    int status;
    if (ope->parsed())
      status = vc_ope(a, left.c_str(), right.c_str(), &out, &err);
    else
      status = vc_normal_order(a, expr.c_str(), &out, &err);
    if (status == VC_OK)
      std::cout << take(out) << "\n";
    else
      std::cerr << take(err) << "\n";
    vc_algebra_close(a);
    return status;
  }
  std::cout << app.help();
  return 0;
}
