#include "qseries/builders.hpp"

namespace vc::qs {

namespace {

Laurent var_mono(const Ctx& c, size_t v, int e) {
  Laurent::Exp x(c.vars->size(), 0);
  x[v] = e;
  return Laurent::monomial(c.vars, x, Rat(1));
}

Laurent exp_mono(const Ctx& c, Laurent::Exp e, int mult = 1) {
  for (auto& x : e) x *= mult;
  return Laurent::monomial(c.vars, e, Rat(1));
}

}  // namespace

QSeries eta(const Ctx& c) {
  if (c.den % 24) throw qseries_error("eta needs 24 | den");
  QSeries s = c.unit();
  for (long n = 1; n * c.den < c.window; ++n)
    s = s.mul_one_plus(-1, c.one(), n * c.den);
  return s.q_shift(c.den / 24);
}

QSeries theta_A1(const Ctx& c, const Laurent::Exp& arg, bool shifted) {
  if (c.den % 4) throw qseries_error("theta needs 4 | den");
  QSeries s = QSeries::zero(c.vars, c.den, c.window);
  for (long m = shifted ? 1 : 0;; m += 2) {
    long e = m * m * (c.den / 4);
    if (e >= c.window) break;
    s.add_term(e, exp_mono(c, arg, static_cast<int>(m)));
    if (m > 0) s.add_term(e, exp_mono(c, arg, static_cast<int>(-m)));
  }
  return s;
}

QSeries weyl_pi(const Ctx& c, size_t var) {
  if (c.den % 8) throw qseries_error("weyl_pi needs 8 | den");
  QSeries s = QSeries::term(c.vars, c.den, 0, Laurent::var_minus_inverse(c.vars, var),
                            c.window);
  for (long n = 1; n * c.den < c.window; ++n) {
    s = s.mul_one_plus(-1, var_mono(c, var, 2), n * c.den);
    s = s.mul_one_plus(-1, c.one(), n * c.den);
    s = s.mul_one_plus(-1, var_mono(c, var, -2), n * c.den);
  }
  return s.q_shift(c.den / 8);
}

QSeries fermion_F(const Ctx& c, const Laurent::Exp& x, const Laurent::Exp& y) {
  if (c.den % 24) throw qseries_error("fermion_F needs 24 | den");
  QSeries s = c.unit();
  for (long n = 1; (2 * n - 1) * (c.den / 2) < c.window; ++n) {
    long e = (2 * n - 1) * (c.den / 2);
    s = s.mul_one_plus(1, exp_mono(c, x, 1), e);
    s = s.mul_one_plus(1, exp_mono(c, x, -1), e);
    s = s.mul_one_plus(1, exp_mono(c, y, 1), e);
    s = s.mul_one_plus(1, exp_mono(c, y, -1), e);
  }
  return s.q_shift(-c.den / 12);
}

QSeries x_m_product(const Ctx& c, long m, const Laurent::Exp& x, const Laurent::Exp& y,
                    const std::vector<size_t>& affine_vars) {
  if (c.den % 8) throw qseries_error("x_m needs 8 | den");
  QSeries s = c.unit();
  // numerator: fermion factors at n + 1/2 for n >= 0, n != m
  for (long n = 0; (2 * n + 1) * (c.den / 2) < c.window; ++n) {
    if (n == m) continue;
    long e = (2 * n + 1) * (c.den / 2);
    s = s.mul_one_plus(1, exp_mono(c, x, 1), e);
    s = s.mul_one_plus(1, exp_mono(c, x, -1), e);
    s = s.mul_one_plus(1, exp_mono(c, y, 1), e);
    s = s.mul_one_plus(1, exp_mono(c, y, -1), e);
  }
  for (long n = 1; n * c.den < c.window; ++n) {
    long e = n * c.den;
    // one (1 - q^n) ladder per affine spectator, one more skipping n = 2m+1
    for (size_t v = 0; v < affine_vars.size(); ++v)
      s = s.div_one_plus(-1, c.one(), e);
    if (n != 2 * m + 1) s = s.div_one_plus(-1, c.one(), e);
    for (size_t v : affine_vars) {
      // current ladders carry the full root charge (two units of the
      // fundamental-weight variable the thetas are written in)
      s = s.div_one_plus(-1, var_mono(c, v, 2), e);
      s = s.div_one_plus(-1, var_mono(c, v, -2), e);
    }
  }
  return s.q_shift(m * c.den + c.den / 8);
}

QSeries theta_numerator(const Ctx& c, size_t va, size_t vb, size_t vc_) {
  auto arg = [&](size_t u, size_t v, int sv) {
    Laurent::Exp e(c.vars->size(), 0);
    e[u] = 1;
    e[v] = sv;
    return e;
  };
  auto diff = [&](size_t u, bool shifted) {
    return theta_A1(c, arg(u, vc_, 1), shifted) - theta_A1(c, arg(u, vc_, -1), shifted);
  };
  return diff(va, true) * diff(vb, true) + diff(va, false) * diff(vb, false);
}

QSeries pf_reciprocal(const Ctx& c, const Laurent& u, long s) {
  if (s > 0) return c.unit().div_one_plus(1, u, s);
  if (s == 0) throw qseries_error("pf_reciprocal needs a nonzero exponent");
  // 1/(1 + u q^{-t}) = 1 - 1/(1 + u^{-1} q^{t}) for t > 0
  Laurent uinv = u.subst([&] {
    std::vector<Laurent::Exp> images;
    for (size_t i = 0; i < c.vars->size(); ++i) {
      Laurent::Exp e(c.vars->size(), 0);
      e[i] = -1;
      images.push_back(e);
    }
    return images;
  }());
  return c.unit() - pf_reciprocal(c, uinv, -s);
}

}  // namespace vc::qs
