#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curves/families.hpp"

using namespace vc;
using namespace vc::curves;

namespace {

bool has_point(const IntersectReport& rep, const Rat& c, const Rat& l) {
  for (const auto& p : rep.points)
    if (p.rational && p.rational->first == c && p.rational->second == l) return true;
  return false;
}

}  // namespace

TEST_CASE("pinned transcriptions of the truncation curves") {
  // tail coefficients pin the transcription against re-derivation by expansion
  const BivarPoly& p2 = curve("p2");
  CHECK(p2.eval(Rat(0), Rat(0)) == Rat(82));
  CHECK(p2.eval(Rat(1), Rat(7)) == Rat(82 - 47 - 10));  // lambda factor dies at c=1
  CHECK(p2.deg_lambda() == 1);
  const BivarPoly& p3 = curve("p3");
  CHECK(p3.eval(Rat(0), Rat(0)) == Rat(-14));
  CHECK(p3.deg_lambda() == 1);
  const BivarPoly& p4 = curve("p4");
  CHECK(p4.deg_lambda() == 2);
  CHECK(p4.eval(Rat(0), Rat(0)) == Rat(-196));
  CHECK(p4.eval(Rat(1), Rat(1)) == Rat(300));  // f(1) = 300, g(1) = h(1) = 0
  const BivarPoly& p1 = curve("p1");
  CHECK(p1.eval(Rat(0), Rat(0)) == Rat(-2633664) * 3);
  CHECK(p1.deg_lambda() == 2);

  // the degenerate weight-8 curve is not proportional to p1, p2, p3
  const BivarPoly& dg = curve("degenerate");
  CHECK_FALSE(dg.proportional_to(p1));
  CHECK_FALSE(dg.proportional_to(p2));
  CHECK_FALSE(dg.proportional_to(p3));

  // full coefficient pinning for p2: 7 lam (c-1)(2c-17)(22+5c) + 82 - 47c - 10c^2
  std::map<std::pair<unsigned, unsigned>, Rat> expect{
      {{0, 0}, Rat(82)},   {{1, 0}, Rat(-47)}, {{2, 0}, Rat(-10)},
      {{0, 1}, Rat(2618)}, {{1, 1}, Rat(-2331)}, {{2, 1}, Rat(-357)},
      {{3, 1}, Rat(70)}};
  CHECK(p2.terms() == expect);
}

TEST_CASE("paper points sit on their curves") {
  CHECK(curve("p2").eval(Rat(-24), Rat(-1, 245)) == 0);
  CHECK(curve("p2").eval(Rat(1, 2), Rat(-2, 49)) == 0);
  CHECK(curve("p2").eval(Rat(15), Rat(221, 9506)) == 0);
  CHECK(curve("p3").eval(Rat(15), Rat(221, 9506)) == 0);
}

TEST_CASE("parametrizations: pinned point values and pole diagnostics") {
  auto pt = param("k2").eval(Rat(6));
  CHECK(pt.first == Rat(27, 20));
  CHECK(pt.second == Rat(4, 12397));
  auto pt2 = param("kk").eval(Rat(3));
  CHECK(pt2.first == Rat(27, 20));
  CHECK(pt2.second == Rat(4, 12397));
  auto pt3 = param("kk").eval(Rat(-3, 4));
  CHECK(pt3.first == Rat(27, 5));
  CHECK(pt3.second == Rat(25, 1078));
  auto pt4 = param("kk").eval(Rat(-6));
  CHECK(pt4.first == Rat(27, 5));
  CHECK(pt4.second == Rat(25, 1078));
  CHECK(param("k2").eval(Rat(-8, 3)).first == Rat(15));
  CHECK(param("kh").eval(Rat(-5, 4)).first == Rat(15));
  CHECK(param("small").eval(Rat(1)).second == Rat(-1, 16));
  CHECK_THROWS_WITH_AS(param("k2").eval(Rat(2)), doctest::Contains("pole"),
                       curve_error);
}

TEST_CASE("identical vanishing along the parametrizations") {
  CHECK(on_curve_residual("p2", "k2").is_zero());
  CHECK(on_curve_residual("p3", "kh").is_zero());
  CHECK(on_curve_residual("p4", "kk").is_zero());
  // negative control: p2 does not contain the kh family
  CHECK_FALSE(on_curve_residual("p2", "kh").is_zero());
}

TEST_CASE("pairwise intersections reproduce the listed points") {
  IntersectReport r23 = intersect("p2", "p3");
  CHECK(has_point(r23, Rat(15), Rat(221, 9506)));
  IntersectReport r24 = intersect("p2", "p4");
  CHECK(has_point(r24, Rat(27, 20), Rat(4, 12397)));
  IntersectReport r34 = intersect("p3", "p4");
  CHECK(has_point(r34, Rat(49, 5), Rat(20, 781)));

  // exact resultant vanishing at every returned c-coordinate
  for (const auto* pair :
       {&r23, &r24, &r34}) {
    (void)pair;
  }
  UPoly res = resultant_lambda(curve("p2"), curve("p3"));
  for (const auto& p : r23.points)
    if (p.rational) CHECK(res.eval(p.rational->first) == 0);
}

TEST_CASE("two-to-one fibers of the parametrization") {
  // solving c(k) = c0 exactly: fiber size <= deg of the numerator of c(k)
  const RationalMap& mp = param("k2");
  for (const Rat& k0 : {Rat(6), Rat(-12), Rat(5), Rat(1)}) {
    auto [c0, l0] = mp.eval(k0);
    UPoly eqn = mp.c_num - mp.c_den.mul_rat(c0);
    auto roots = rational_roots(eqn);
    CHECK(static_cast<long>(roots.size()) <= mp.c_num.degree());
    CHECK(std::find(roots.begin(), roots.end(), k0) != roots.end());
  }
  // the paired family values lie in one fiber: c(-12) = c(6)
  CHECK(mp.eval(Rat(-12)).first == mp.eval(Rat(6)).first);
  CHECK(mp.eval(Rat(-12)) == mp.eval(Rat(6)));
}

TEST_CASE("coincidence families: pairs agree, points match where listed") {
  for (const std::string& id : family_ids()) {
    FamilyReport rep = coincidence_family_check(id, 2, 8);
    INFO("family ", id);
    CHECK(rep.pass);
    long checked = 0;
    for (const auto& it : rep.items)
      if (!it.pole_excluded) ++checked;
    CHECK(checked > 0);
  }
  // the specific instances named in the text
  FamilyReport f3 = coincidence_family_check("k2-sp-3", 3, 3);
  REQUIRE(f3.items.size() == 1);
  CHECK(f3.items[0].pair_equal);
  CHECK(param("k2").eval(Rat(-12)) == param("k2").eval(Rat(6)));
  CHECK(param("k2").eval(Rat(6)).first == Rat(27, 20));
  // family 1 at n = 2: k = -8/5 and -22/5
  CHECK(param("k2").eval(Rat(-8, 5)) == param("k2").eval(Rat(-22, 5)));
  // fifth-point c-formula against eval_param(k2, 4n-6) for n = 2..8
  for (long n = 2; n <= 8; ++n) {
    Rat k(4 * n - 6);
    if (param("k2").has_pole(k)) {
      CHECK(n == 2);  // k = 2 is the one pole in range
      continue;
    }
    Rat fifth(3 * n * (2 * n - 3), 2 * (n - 1) * (2 * n - 1));
    fifth.canonicalize();
    CHECK(param("k2").eval(k).first == fifth);
  }
}

TEST_CASE("rational roots, factors and isolation") {
  // (2c-1)(c+24)(c^2-2)
  UPoly p = UPoly({Rat(-1), Rat(2)}) * UPoly({Rat(24), Rat(1)}) *
            UPoly({Rat(-2), Rat(0), Rat(1)});
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rat(-24));
  CHECK(roots[1] == Rat(1, 2));
  auto factors = factor_rationals(p);
  bool found_quadratic = false;
  for (const auto& [f, m] : factors)
    if (f.degree() == 2) {
      found_quadratic = true;
      CHECK(certify_irreducible(f));
      auto iso = isolate_real_roots(f);
      CHECK(iso.size() == 2);
    }
  CHECK(found_quadratic);
}

TEST_CASE("full coefficient pins for the remaining curves") {
  using T = std::map<std::pair<unsigned, unsigned>, Rat>;
  T p3{{{0, 0}, Rat(-14)},   {{0, 1}, Rat(6314)},  {{1, 0}, Rat(309)},
       {{1, 1}, Rat(-5033)}, {{2, 0}, Rat(5)},     {{2, 1}, Rat(-1316)},
       {{3, 1}, Rat(35)}};
  CHECK(curve("p3").terms() == p3);
  T p4{{{0, 0}, Rat(-196)},    {{0, 1}, Rat(21560)},  {{0, 2}, Rat(-592900)},
       {{1, 0}, Rat(1476)},    {{1, 1}, Rat(-59780)}, {{1, 2}, Rat(940016)},
       {{2, 0}, Rat(-955)},    {{2, 1}, Rat(28420)},  {{2, 2}, Rat(-121177)},
       {{3, 0}, Rat(-25)},     {{3, 1}, Rat(9800)},   {{3, 2}, Rat(-204869)},
       {{4, 2}, Rat(-22295)},  {{5, 2}, Rat(1225)}};
  CHECK(curve("p4").terms() == p4);
  T p1{{{0, 0}, Rat(-7900992)}, {{0, 1}, Rat(-37743552)}, {{0, 2}, Rat(9514479744)},
       {{1, 0}, Rat(5418804)},  {{1, 1}, Rat(101255952)}, {{1, 2}, Rat(-13941702852)},
       {{2, 0}, Rat(305208)},   {{2, 1}, Rat(-40395936)}, {{2, 2}, Rat(192447696)},
       {{3, 0}, Rat(15825)},    {{3, 1}, Rat(-21464436)}, {{3, 2}, Rat(3428244183)},
       {{4, 0}, Rat(255)},      {{4, 1}, Rat(-1624308)},  {{4, 2}, Rat(761327259)},
       {{5, 1}, Rat(-27720)},   {{5, 2}, Rat(44457945)},  {{6, 2}, Rat(746025)}};
  CHECK(curve("p1").terms() == p1);
  T dg{{{0, 0}, Rat(-196)}, {{0, 2}, Rat(213444)},  {{1, 0}, Rat(172)},
       {{1, 2}, Rat(-329868)}, {{2, 0}, Rat(-1)},   {{2, 2}, Rat(30429)},
       {{3, 2}, Rat(74970)},   {{4, 2}, Rat(11025)}};
  CHECK(curve("degenerate").terms() == dg);
}
