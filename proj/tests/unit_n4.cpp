#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "va/engine.hpp"

using namespace vc;
using namespace vc::va;

namespace {

using Triple = std::array<const char*, 3>;

const std::vector<Triple> kLargeTriples = {
    {"Gpp", "Gmm", "h"},  {"Gpp", "Gmm", "hp"}, {"Gpp", "Gmm", "L"},
    {"Gpp", "Gmm", "Gpm"}, {"Gmp", "Gpm", "h"}, {"Gmp", "Gpm", "e"},
    {"Gpp", "Gmp", "f"},  {"Gpp", "Gpm", "fp"}, {"Gmm", "Gmp", "ep"},
    {"e", "f", "Gpp"},    {"ep", "fp", "Gmm"},  {"L", "Gpp", "Gmm"},
    {"e", "f", "h"},      {"Gpp", "Gpp", "Gmm"}};

const std::vector<Triple> kSmallTriples = {
    {"Gpp", "Gmm", "h"}, {"Gpp", "Gmm", "e"}, {"Gpp", "Gmm", "L"},
    {"Gmp", "Gpm", "h"}, {"Gpp", "Gmp", "f"}, {"Gmm", "Gpm", "e"},
    {"e", "f", "Gpp"},   {"e", "f", "h"}};

long run_triples(const Presentation& P, const std::vector<Triple>& triples) {
  Engine eng(P);
  long checked = 0;
  for (const auto& t : triples) {
    auto rep = jacobi_check(eng, P.gen_index(t[0]), P.gen_index(t[1]), P.gen_index(t[2]));
    INFO(P.name(), ": triple ", t[0], " ", t[1], " ", t[2]);
    CHECK(rep.pass);
    CHECK(rep.instances > 0);
    ++checked;
  }
  return checked;
}

}  // namespace

TEST_CASE("large N=4: central charge of L is -6k-3 as a rational function") {
  Presentation P = preset("large-n4");
  Engine eng(P);
  Scalar k = Scalar::param(P.params(), 0);
  auto res = check_virasoro(eng, eng.gen_field("L"));
  REQUIRE(std::holds_alternative<Scalar>(res));
  CHECK(std::get<Scalar>(res) == Scalar(-6) * k - Scalar(3));
}

TEST_CASE("small N=4: central charge of L is -6(k+1)") {
  Presentation P = preset("small-n4");
  Engine eng(P);
  Scalar k = Scalar::param(P.params(), 0);
  auto res = check_virasoro(eng, eng.gen_field("L"));
  REQUIRE(std::holds_alternative<Scalar>(res));
  CHECK(std::get<Scalar>(res) == Scalar(-6) * (k + Scalar(1)));
}

TEST_CASE("large N=4 table is Jacobi-consistent at three rational points") {
  Presentation P = preset("large-n4");
  for (const auto& [k, a] : std::vector<std::pair<Rat, Rat>>{
           {Rat(1, 2), Rat(2)}, {Rat(1), Rat(1)}, {Rat(-3, 4), Rat(3)}}) {
    Presentation S = P.specialize({k, a});
    CHECK(run_triples(S, kLargeTriples) >= 10);
  }
}

TEST_CASE("small N=4 table is Jacobi-consistent at two rational points") {
  Presentation P = preset("small-n4");
  for (const Rat& k : {Rat(1, 2), Rat(-3, 4)}) {
    Presentation S = P.specialize({k});
    CHECK(run_triples(S, kSmallTriples) >= 6);
  }
}

TEST_CASE("a perturbed third-order pole of Gpp Gmm breaks consistency") {
  Presentation P = preset("large-n4").specialize({Rat(1, 2), Rat(2)});
  Engine eng(P);
  const FieldExpr* p3 = P.pair_ope(P.gen_index("Gpp"), P.gen_index("Gmm")).pole(3);
  REQUIRE(p3 != nullptr);
  FieldExpr bumped = *p3 + FieldExpr::identity();
  Presentation Q = P.perturbed("Gpp", "Gmm", 3, bumped);
  Engine eq(Q);
  auto rep = jacobi_check(eq, Q.gen_index("Gpp"), Q.gen_index("Gmm"), Q.gen_index("h"));
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.failures.empty());
  CHECK_FALSE(rep.failures.front().residual.is_zero());
}

TEST_CASE("level transcription of the two affine sectors") {
  Presentation P = preset("large-n4");
  auto pool = P.params();
  Scalar k = Scalar::param(pool, 0), a = Scalar::param(pool, 1);
  // e f second-order pole = ell = -((a+1)/a)k - 1; ep fp = ellp = -(a+1)k - 1
  const FieldExpr* ef = P.pair_ope(P.gen_index("e"), P.gen_index("f")).pole(2);
  REQUIRE(ef);
  CHECK(ef->terms().size() == 1);
  CHECK(ef->terms()[0].second == -((a + Scalar(1)) / a) * k - Scalar(1));
  const FieldExpr* epfp = P.pair_ope(P.gen_index("ep"), P.gen_index("fp")).pole(2);
  REQUIRE(epfp);
  CHECK(epfp->terms()[0].second == -(a + Scalar(1)) * k - Scalar(1));
}

TEST_CASE("diagonal coset dimensions over the rational function field") {
  Presentation P = affine_sl2_pair();
  Engine eng(P);
  std::vector<FieldExpr> diag;
  for (const char* g : {"e", "f", "h"})
    diag.push_back(eng.gen_field(std::string(g) + "1") +
                   eng.gen_field(std::string(g) + "2"));
  const long expected[] = {1, 0, 1, 1};
  for (long w = 0; w <= 3; ++w) {
    auto res = commutant_weight_space(eng, diag, Rat(w));
    CHECK(static_cast<long>(res.basis.size()) == expected[w]);
    CHECK_FALSE(res.formal_specialization_caveat);
    // every basis vector is annihilated by all nonnegative modes
    for (const auto& v : res.basis)
      for (const auto& a : diag)
        for (long n = 0; n <= w; ++n) CHECK(eng.field_mode(a, n, v).is_zero());
  }
  // specialized levels carry the proper-subalgebra caveat
  Presentation S = P.specialize({Rat(1), Rat(2)});
  Engine es(S);
  std::vector<FieldExpr> sdiag;
  for (const char* g : {"e", "f", "h"})
    sdiag.push_back(es.gen_field(std::string(g) + "1") +
                    es.gen_field(std::string(g) + "2"));
  auto sres = commutant_weight_space(es, sdiag, Rat(2));
  CHECK(sres.formal_specialization_caveat);
}

TEST_CASE("nesting bound signals resource exhaustion") {
  Presentation P = preset("large-n4").specialize({Rat(1, 2), Rat(2)});
  EngineConfig tight;
  tight.max_nesting = 0;
  Engine eng(P, tight);
  CHECK_THROWS_AS(eng.ope(eng.gen_field("Gpp"), eng.gen_field("Gmm")),
                  resource_error);
}
