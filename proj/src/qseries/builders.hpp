#pragma once

#include "qseries/qseries.hpp"

namespace vc::qs {

/** Shared context: variable list, global denominator for q-exponents and the
    window (in units of q^{1/den}) on which series are constructed. */
struct Ctx {
  VarPoolPtr vars;
  long den;
  long window;  // coefficients built for exponents e < window (scaled by den)

  Laurent mono(std::initializer_list<int> exps, const Rat& c = Rat(1)) const {
    return Laurent::monomial(vars, Laurent::Exp(exps), c);
  }
  Laurent one() const { return Laurent::constant(vars, Rat(1)); }
  QSeries unit() const { return QSeries::term(vars, den, 0, one(), window); }
};

/** Dedekind eta: q^{1/24} prod_{n>=1} (1 - q^n); needs 24 | den. */
QSeries eta(const Ctx& c);

/** A1 theta sum over even (shifted: odd) m of arg^m q^{m^2/4}; needs 4 | den. */
QSeries theta_A1(const Ctx& c, const Laurent::Exp& arg, bool shifted);

/** Weyl denominator q^{1/8} (v - v^{-1}) prod (1 - v^2 q^n)(1 - q^n)(1 - v^{-2} q^n);
    needs 8 | den. */
QSeries weyl_pi(const Ctx& c, size_t var);

/** Four-fermion character q^{-1/12} prod (1 + x^{+-1} q^{n-1/2})(1 + y^{+-1} q^{n-1/2});
    needs 24 | den (the 1/12 shift and half-integer steps). */
QSeries fermion_F(const Ctx& c, const Laurent::Exp& x, const Laurent::Exp& y);

/** The X_m building block of the big character decomposition, with x, y
    already eliminated through the given monomials; `extra_affine` counts the
    spectator affine variables (2 for the large case, 1 for the small one whose
    indices are passed in `affine_vars`). */
QSeries x_m_product(const Ctx& c, long m, const Laurent::Exp& x, const Laurent::Exp& y,
                    const std::vector<size_t>& affine_vars);

/** Numerator combination of the product of two coset characters:
    (th'(va*vc)-th'(va/vc))(th'(vb*vc)-th'(vb/vc)) + (same with theta). */
QSeries theta_numerator(const Ctx& c, size_t va, size_t vb, size_t vc);

/** 1/(1 + u q^{s/den}) for any sign of s (rewritten to a unit expansion). */
QSeries pf_reciprocal(const Ctx& c, const Laurent& u, long s);

}  // namespace vc::qs
