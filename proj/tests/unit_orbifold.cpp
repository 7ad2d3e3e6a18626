#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbifold/decoupling.hpp"
#include "orbifold/span.hpp"
#include "wick_oracle.hpp"

#include <random>

using namespace vc;
using namespace vc::va;
using namespace vc::orb;

namespace {

const Presentation& h3p() {
  static Presentation P = heisenberg(3);
  return P;
}
const Engine& h3() {
  static Engine eng(h3p());
  return eng;
}
const Presentation& g4p() {
  static Presentation P = godd(4);
  return P;
}
const Engine& g4() {
  static Engine eng(g4p());
  return eng;
}

std::vector<FieldExpr> mingenset() {
  std::vector<FieldExpr> gens;
  for (unsigned j : {2, 4, 5, 6, 8}) gens.push_back(build_C(h3(), 0, 1, j));
  for (unsigned k : {0u, 1u, 2u, 3u, 4u}) gens.push_back(build_Q(h3(), 0, 2 * k));
  return gens;
}

}  // namespace

TEST_CASE("quadratic and cubic invariant generators") {
  FieldExpr q00 = build_Q(h3(), 0, 0);
  FieldExpr expect;
  for (uint32_t a = 0; a < 3; ++a)
    expect += FieldExpr::monomial({Letter{a, 0}, Letter{a, 0}});
  CHECK(q00 == h3().canonical(expect));
  CHECK(h3().field_weight_bound(q00) == Rat(2));

  CHECK(h3().field_weight_bound(build_C(h3(), 0, 1, 2)) == Rat(6));
  CHECK(build_C(h3(), 0, 2, 1) == -build_C(h3(), 0, 1, 2));
  bool warn = false;
  CHECK(build_C(h3(), 0, 1, 1, &warn).is_zero());
  CHECK(warn);
}

TEST_CASE("fermionic generators and the q01 pairing pole") {
  CHECK(g4().field_weight_bound(build_fermi_q(g4(), 0, 1)) == Rat(4));
  // odd squares with equal derivative orders collapse under PBW reduction
  CHECK(build_fermi_q(g4(), 0, 0).is_zero());
  CHECK(build_fermi_q(g4(), 1, 1).is_zero());
  // odd letters anticommute: swapping the derivative orders flips the sign
  CHECK(build_fermi_q(g4(), 1, 0) == -build_fermi_q(g4(), 0, 1));
  CHECK(g4().field_weight_bound(build_fermi_w(g4(), 0, 0, 0, 0)) == Rat(6));

  FieldExpr q01 = build_fermi_q(g4(), 0, 1);
  PoleExpansion pe = g4().ope(q01, q01);
  CHECK(pe.max_pole() == 8);
  const FieldExpr* top = pe.pole(8);
  REQUIRE(top);
  CHECK(top->terms().size() == 1);
  CHECK(top->terms()[0].first.empty());
  // frozen from the contraction oracle over all pairings
  FieldExpr oracle_top;
  for (uint32_t i = 0; i < 4; ++i)
    for (uint32_t j = 0; j < 4; ++j) {
      auto o = testing::ope_oracle(g4p(), {{i, 0}, {i, 1}}, {{j, 0}, {j, 1}});
      if (o.count(8)) oracle_top += o[8];
    }
  CHECK(*top == oracle_top);
}

TEST_CASE("so3 rotations annihilate every Q and C up to weight 12") {
  for (int axis = 0; axis < 3; ++axis) {
    for (unsigned i = 0; i <= 5; ++i)
      for (unsigned j = i; i + j + 2 <= 12; ++j)
        CHECK(so3_apply(h3(), axis, h3().state_of(build_Q(h3(), i, j))).is_zero());
    for (unsigned k = 0; k + 3 <= 9; ++k)
      for (unsigned l = k + 1; k + l + 4 <= 12; ++l)
        for (unsigned m = l + 1; k + l + m + 3 <= 12; ++m)
          CHECK(so3_apply(h3(), axis, h3().state_of(build_C(h3(), k, l, m))).is_zero());
  }
}

TEST_CASE("classical symbols: letters, products, Gram identity") {
  SymbolRing ring(h3p(), 12);
  Poly q02 = ring.symbol(build_Q(h3(), 0, 2));
  // q_{02} = sum_a a_0 a_2 over the three colors
  Poly expect(ring.pool(), Rat(0));
  for (uint32_t a = 0; a < 3; ++a) {
    Poly::Exp e(ring.pool()->size(), 0);
    e[a * 13 + 0] += 1;
    e[a * 13 + 2] += 1;
    expect = expect + Poly::from_terms(ring.pool(), {{e, Rat(1)}});
  }
  CHECK(q02 == expect);

  std::mt19937 rng(11);
  std::uniform_int_distribution<unsigned> d(0, 2);
  for (int rep = 0; rep < 6; ++rep) {
    FieldExpr a = build_Q(h3(), d(rng), d(rng));
    FieldExpr b = build_Q(h3(), d(rng), d(rng));
    CHECK(ring.symbol(h3().wick({a, b})) == ring.symbol(a) * ring.symbol(b));
  }
  CHECK(decoupling_symbol_matches_classical(h3()));
}

TEST_CASE("weight-12 decoupling relation evaluates to the zero state") {
  DecouplingReport rep = verify_decoupling_wt12(h3());
  CHECK(rep.dim12_formula == rep.dim12_enumerated);
  CHECK(rep.q010_coefficient == Rat(313, 450));
  CHECK(rep.zero);
  CHECK(rep.residual.is_zero());
}

TEST_CASE("perturbing the :C012 C012: coefficient breaks the relation") {
  State s = decoupling_with_coefficient(h3(), ":C012 C012:", Rat(2));
  CHECK_FALSE(s.is_zero());
}

TEST_CASE("strong span of {Q00} at weight 4 and closure verdicts") {
  FieldExpr q00 = build_Q(h3(), 0, 0);
  StrongSpan span4(h3(), {q00}, Rat(4));
  CHECK(span4.dimension() == 2);  // :Q00 Q00: and D^2 Q00

  // {Q00} generates a Virasoro line: every OPE pole closes on it
  ClosureReport singleton = closure_check(h3(), {q00}, Rat(4));
  CHECK(singleton.pass);

  // {Q02} alone fails: the fourth-order pole of Q02 Q02 needs weight-2 content
  ClosureReport q02only = closure_check(h3(), {build_Q(h3(), 0, 2)}, Rat(8));
  CHECK_FALSE(q02only.pass);
}

TEST_CASE("membership facts behind the minimal strong generating set") {
  auto gens = mingenset();
  // Q_{0,10} lies in the span of {C012, Q00, Q02, Q04, Q06, Q08} at weight 12
  std::vector<FieldExpr> sub = {build_C(h3(), 0, 1, 2), build_Q(h3(), 0, 0),
                                build_Q(h3(), 0, 2),    build_Q(h3(), 0, 4),
                                build_Q(h3(), 0, 6),    build_Q(h3(), 0, 8)};
  StrongSpan span12(h3(), sub, Rat(12));
  CHECK(span12.contains(h3().state_of(build_Q(h3(), 0, 10))));

  // C_{013} lies in the span of the minimal generating set at weight 7
  StrongSpan span7(h3(), gens, Rat(7));
  CHECK(span7.contains(h3().state_of(build_C(h3(), 0, 1, 3))));

  // monotonicity: a larger generator list never shrinks the span
  StrongSpan small7(h3(), {build_Q(h3(), 0, 0)}, Rat(7));
  CHECK(small7.dimension() <= span7.dimension());

  // order independence of membership verdicts
  auto perm = gens;
  std::reverse(perm.begin(), perm.end());
  StrongSpan span7p(h3(), perm, Rat(7));
  CHECK(span7p.dimension() == span7.dimension());
  CHECK(span7p.contains(h3().state_of(build_C(h3(), 0, 1, 3))));
}

TEST_CASE("closure smoke test at low weight for both generator families") {
  auto gens = mingenset();
  ClosureReport rep = closure_check(h3(), gens, Rat(8));
  CHECK(rep.pass);
  CHECK(rep.pairs_checked > 0);

  std::vector<FieldExpr> fgens;
  for (unsigned j : {1u, 3u, 5u, 7u}) fgens.push_back(build_fermi_q(g4(), 0, j));
  fgens.push_back(build_fermi_w(g4(), 0, 0, 0, 0));
  fgens.push_back(build_fermi_w(g4(), 0, 0, 0, 2));
  fgens.push_back(build_fermi_w(g4(), 0, 0, 0, 3));
  fgens.push_back(build_fermi_w(g4(), 0, 0, 2, 2));
  fgens.push_back(build_fermi_w(g4(), 0, 0, 3, 3));
  ClosureReport frep = closure_check(g4(), fgens, Rat(8));
  CHECK(frep.pass);
}

TEST_CASE("membership coordinates reconstruct the target state") {
  auto gens = mingenset();
  StrongSpan span7(h3(), gens, Rat(7));
  State target = h3().state_of(build_C(h3(), 0, 1, 3));
  auto coords = span7.member(target);
  REQUIRE(coords.has_value());
  CHECK_FALSE(coords->empty());
  State recomb;
  for (const auto& [i, c] : *coords) {
    std::vector<FieldExpr> factors;
    for (const auto& [g, d] : span7.monomials()[i])
      factors.push_back(gens[g].derivative(d));
    State s = factors.empty() ? State::vacuum() : h3().state_of(h3().wick(factors));
    recomb += c * s;
  }
  CHECK(recomb == target);

  // a state outside the span has no coordinates
  State outside = h3().state_of(build_C(h3(), 0, 1, 2));
  StrongSpan span6(h3(), {build_Q(h3(), 0, 0)}, Rat(6));
  CHECK_FALSE(span6.contains(outside));
  CHECK_FALSE(span6.member(outside).has_value());
}

TEST_CASE("solver mode recovers the transcribed corrections exactly") {
  // sabotage the Q_{0,10} coefficient; the exact solve must reconstruct it
  std::map<std::string, Rat> overrides{{"D0Q0,10", Rat(1)}};
  DecouplingReport rep = verify_decoupling_wt12(h3(), true, &overrides);
  CHECK_FALSE(rep.zero);
  REQUIRE(rep.solved_corrections.has_value());
  // the correction states are linearly independent, so the solve is unique
  // and must land back on the transcription for every term
  DecouplingReport clean = verify_decoupling_wt12(h3(), false);
  std::map<std::string, Rat> transcribed;
  for (const auto& t : clean.terms)
    if (t.correction) transcribed[t.label] = t.coefficient;
  REQUIRE(rep.solved_corrections->size() == transcribed.size());
  for (const auto& [label, value] : *rep.solved_corrections)
    CHECK(value == transcribed.at(label));
}
