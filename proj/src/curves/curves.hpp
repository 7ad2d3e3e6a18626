#pragma once

#include "curves/upoly.hpp"

#include <map>
#include <optional>

namespace vc::curves {

/** Exact bivariate polynomial in (c, lambda): sparse (i, j) -> rational. */
class BivarPoly {
 public:
  BivarPoly() = default;
  static BivarPoly from_terms(std::map<std::pair<unsigned, unsigned>, Rat> t);

  const std::map<std::pair<unsigned, unsigned>, Rat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  unsigned deg_lambda() const;

  Rat eval(const Rat& c, const Rat& lambda) const;
  /** coefficient polynomials in c of each lambda power (dense in lambda). */
  std::vector<UPoly> lambda_coefficients() const;
  /** specialize c, leaving a univariate in lambda. */
  UPoly at_c(const Rat& c) const;

  BivarPoly operator*(const BivarPoly& o) const;
  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly mul_rat(const Rat& r) const;
  bool proportional_to(const BivarPoly& o) const;

  std::string str() const;

 private:
  std::map<std::pair<unsigned, unsigned>, Rat> t_;
};

/** k |-> (c(k), lambda(k)) as exact rational functions. */
struct RationalMap {
  UPoly c_num, c_den, l_num, l_den;
  /** pole diagnostics name the vanishing denominator factor. */
  std::pair<Rat, Rat> eval(const Rat& k) const;
  bool has_pole(const Rat& k) const { return c_den.eval(k) == 0 || l_den.eval(k) == 0; }
};

/** Rational point or algebraic descriptor on a curve. */
struct CurvePoint {
  std::optional<std::pair<Rat, Rat>> rational;   // (c, lambda)
  // algebraic c-coordinate: defining polynomial + isolating interval
  struct Algebraic {
    UPoly poly;
    bool minimal_certified;
    Rat lo, hi;
  };
  std::optional<Algebraic> algebraic_c;
};

/** Bundled truncation curves: p1, p2, p3, p4, degenerate. */
const BivarPoly& curve(const std::string& name);
std::vector<std::string> curve_names();

/** Bundled parametrizations: k2, kh, kk, small (lambda = -1/16). */
const RationalMap& param(const std::string& name);
std::vector<std::string> param_names();

/** Substitutes the map into the curve; zero residual means the parametrized
    family lies on the curve identically. */
UPoly on_curve_residual(const std::string& curve_name, const std::string& map_name);

struct IntersectReport {
  std::vector<CurvePoint> points;       // deterministic (c, lambda) order
  bool shared_component = false;        // resultant vanished identically
  std::vector<std::string> notes;
};
IntersectReport intersect(const std::string& curveA, const std::string& curveB);

/** resultant in lambda of two named curves (exposed for invariants). */
UPoly resultant_lambda(const BivarPoly& a, const BivarPoly& b);

}  // namespace vc::curves
