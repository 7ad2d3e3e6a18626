#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qseries/verify.hpp"

#include <random>

using namespace vc;
using namespace vc::qs;

namespace {

VarPoolPtr zw() { return std::make_shared<VarPool>(std::vector<std::string>{"z"}); }

Ctx mkctx(VarPoolPtr v, long order) { return Ctx{std::move(v), 24, order * 24}; }

}  // namespace

TEST_CASE("theta sums: first windows") {
  Ctx c = mkctx(zw(), 5);
  QSeries th = theta_A1(c, {1}, false);
  CHECK(*th.coeff(0) == c.one());
  CHECK(*th.coeff(24) == c.mono({2}) + c.mono({-2}));
  CHECK(th.coeff(48) == nullptr);
  CHECK(*th.coeff(96) == c.mono({4}) + c.mono({-4}));

  QSeries ths = theta_A1(c, {1}, true);
  CHECK(ths.min_exp() == 6);  // q^{1/4}
  CHECK(*ths.coeff(6) == c.mono({1}) + c.mono({-1}));
}

TEST_CASE("eta expansion: pentagonal numbers") {
  Ctx c = mkctx(zw(), 16);
  QSeries e = eta(c);
  CHECK(e.min_exp() == 1);  // q^{1/24}
  auto coeff_at = [&](long n) {
    const Laurent* l = e.coeff(1 + 24 * n);
    return l ? l->eval_ones() : Rat(0);
  };
  CHECK(coeff_at(0) == 1);
  CHECK(coeff_at(1) == -1);
  CHECK(coeff_at(2) == -1);
  CHECK(coeff_at(3) == 0);
  CHECK(coeff_at(5) == 1);
  CHECK(coeff_at(7) == 1);
  CHECK(coeff_at(12) == -1);
  CHECK(coeff_at(15) == -1);
}

TEST_CASE("four-fermion character: first coefficient and symmetries") {
  auto vars = std::make_shared<VarPool>(std::vector<std::string>{"x", "y"});
  Ctx c = mkctx(vars, 4);
  QSeries F = fermion_F(c, {1, 0}, {0, 1});
  CHECK(F.min_exp() == -2);  // q^{-1/12}
  const Laurent* l = F.coeff(-2 + 12);
  REQUIRE(l);
  CHECK(*l == c.mono({1, 0}) + c.mono({-1, 0}) + c.mono({0, 1}) + c.mono({0, -1}));

  // F(x, y) = F(y, x) = F(1/x, y)
  QSeries Fyx = F.subst({{0, 1}, {1, 0}});
  QSeries Fxi = F.subst({{-1, 0}, {0, 1}});
  CHECK_FALSE(QSeries::compare(F, Fyx, 3, 1).has_value());
  CHECK_FALSE(QSeries::compare(F, Fxi, 3, 1).has_value());

  CHECK(fermion_theta_quotient_check(4));
}

TEST_CASE("Weyl denominator: reciprocal of the unit part") {
  CHECK(weyl_pi_unit_part_check(5));
}

TEST_CASE("theta numerator invariances") {
  QSeries T = theta_lhs_large(4);
  // w -> 1/w leaves it invariant (both difference factors flip sign)
  QSeries Tw = T.subst({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}});
  CHECK_FALSE(QSeries::compare(T, Tw, 4, 1).has_value());
  // z1 <-> z2
  QSeries Tz = T.subst({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  CHECK_FALSE(QSeries::compare(T, Tz, 4, 1).has_value());
}

TEST_CASE("X_m building block: leading exponent and proof-line identities") {
  QSeries x0 = x_m_large(4, 0);
  CHECK(x0.min_exp() == 3);  // q^{1/8} on the /24 grid
  REQUIRE(x0.coeff(3));
  CHECK(*x0.coeff(3) == Laurent::constant(x0.vars(), Rat(1)));

  CHECK(partial_fraction_seed_check(0, 4));
  CHECK(partial_fraction_seed_check(1, 4));
  CHECK(partial_fraction_seed_check(2, 5));
  CHECK(x_m_middle_form_check(0, 4));
  CHECK(x_m_middle_form_check(1, 4));
  CHECK(x_m_antisymmetry_check(0, 4));
  CHECK(x_m_antisymmetry_check(1, 4));
}

TEST_CASE("big character decomposition at two generic rational points") {
  CharReport r1 = verify_thm_char(CharSpec(Rat(2, 3), Rat(2, 5)), 4);
  INFO(r1.mismatch.value_or(""));
  CHECK(r1.pass);
  CharReport r2 = verify_thm_char(CharSpec(Rat(3, 4), Rat(1, 2)), 4);
  CHECK(r2.pass);
  CHECK_THROWS_AS(CharSpec(Rat(2, 3), Rat(-2, 5)), qseries_error);  // 1/l + 1/mu < 0
}

TEST_CASE("perturbing X_0 by (1+q) breaks the decomposition") {
  long order = 3;
  auto vars = std::make_shared<VarPool>(std::vector<std::string>{"z1", "z2", "w"});
  Ctx c{vars, 24, order * 24};
  QSeries lhs = theta_lhs_large(order);
  QSeries pis = weyl_pi(c, 0) * weyl_pi(c, 1) * weyl_pi(c, 2);
  QSeries sum = QSeries::zero(c.vars, c.den, c.window);
  for (long m = 0; m <= order; ++m) {
    QSeries xm = x_m_large(order, m);
    if (m == 0) xm = xm.mul_one_plus(1, c.one(), c.den);  // X_0 -> X_0 (1 + q)
    Laurent wl = c.mono({0, 0, 2 * static_cast<int>(m) + 1}) -
                 c.mono({0, 0, -2 * static_cast<int>(m) - 1});
    sum += xm.mul_laurent(wl);
  }
  auto mm = QSeries::compare(lhs, pis * sum, order, 1);
  CHECK(mm.has_value());
}

TEST_CASE("vacuum-part corollary with generator-count cross-checks") {
  Rat q1, q32;
  CharReport rep = verify_cor_char(CharSpec(Rat(2, 3), Rat(2, 5)), 4, &q1, &q32);
  INFO(rep.mismatch.value_or(""));
  CHECK(rep.pass);
  CHECK(q1 == 6);    // six weight-1 currents
  CHECK(q32 == 4);   // four weight-3/2 odd fields
  CharReport rep2 = verify_cor_char(CharSpec(Rat(3, 4), Rat(1, 2)), 4);
  CHECK(rep2.pass);
}

TEST_CASE("small character decomposition") {
  CharReport rep = verify_thm_char_small(Rat(2, 3), 4);
  INFO(rep.mismatch.value_or(""));
  CHECK(rep.pass);
  CHECK(w_m_leading_exponent(Rat(2, 3), 0) == Rat(1, 4) - Rat(1, 6));
  CHECK(w_m_leading_exponent(Rat(2, 3), 2) == Rat(2) + Rat(1, 4) - Rat(3, 2));
  CHECK(x_m_small(3, 0).min_exp() == 6);  // q^{1/4} on the /24 grid
}

TEST_CASE("Euler-Poincare multiplicity is a delta function") {
  for (long n = 0; n <= 12; ++n)
    for (long m = 0; m <= 12; ++m)
      CHECK(euler_poincare_multiplicity(n, m) == (n == m ? 1 : 0));
  CHECK(euler_poincare_multiplicity(2, 2) == 1);
  CHECK(euler_poincare_multiplicity(1, 2) == 0);
  CHECK(euler_poincare_multiplicity(0, 0) == 1);
}

TEST_CASE("window arithmetic is a commutative ring on random series") {
  auto vars = std::make_shared<VarPool>(std::vector<std::string>{"z"});
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dc(-3, 3), de(0, 20), dz(-2, 2);
  auto rnd = [&]() {
    QSeries s(vars, 12, 40);
    for (int t = 0; t < 5; ++t)
      s.add_term(de(rng), Laurent::monomial(vars, {dz(rng)}, Rat(dc(rng))));
    return s;
  };
  for (int rep = 0; rep < 20; ++rep) {
    QSeries a = rnd(), b = rnd(), c = rnd();
    CHECK_FALSE(QSeries::compare((a + b) + c, a + (b + c), 3, 1).has_value());
    CHECK_FALSE(QSeries::compare(a * b, b * a, 3, 1).has_value());
    CHECK_FALSE(QSeries::compare((a * b) * c, a * (b * c), 2, 1).has_value());
    CHECK_FALSE(QSeries::compare(a * (b + c), a * b + a * c, 2, 1).has_value());
  }
}

TEST_CASE("truncation soundness: higher order never flips a verified window") {
  QSeries l4 = theta_lhs_large(3), l6 = theta_lhs_large(5);
  CHECK_FALSE(QSeries::compare(l4, l6, 3, 1).has_value());
  CHECK(verify_thm_char(CharSpec(Rat(2, 3), Rat(2, 5)), 5).pass);
}

TEST_CASE("lowest window of the theta numerator is the shifted-theta product") {
  QSeries T = theta_lhs_large(3);
  CHECK(T.min_exp() == 12);  // q^{1/2} on the /24 grid
  auto vars = T.vars();
  Laurent expect = Laurent::var_minus_inverse(vars, 0) *
                   Laurent::var_minus_inverse(vars, 1) *
                   Laurent::var_minus_inverse(vars, 2) *
                   Laurent::var_minus_inverse(vars, 2);
  REQUIRE(T.coeff(12) != nullptr);
  CHECK(*T.coeff(12) == expect);
}

TEST_CASE("variable-degree caps guard rather than truncate") {
  CharReport ok = verify_thm_char(CharSpec(Rat(2, 3), Rat(2, 5)), 3, 64);
  CHECK(ok.pass);
  CHECK(ok.max_variable_degree > 0);
  CharReport capped = verify_thm_char(CharSpec(Rat(2, 3), Rat(2, 5)), 3, 2);
  CHECK_FALSE(capped.pass);
  REQUIRE(capped.mismatch.has_value());
  CHECK(capped.mismatch->find("cap") != std::string::npos);
}
