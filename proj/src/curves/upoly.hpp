#pragma once

#include "core/rat.hpp"

#include <functional>
#include <map>
#include <vector>

namespace vc::curves {

struct curve_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Dense univariate polynomial over Q; coefficient i of x^i. */
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
  static UPoly constant(const Rat& r) { return UPoly({r}); }
  static UPoly x() { return UPoly({Rat(0), Rat(1)}); }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  const Rat& operator[](size_t i) const { return c_[i]; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& lead() const { return c_.back(); }

  UPoly operator-() const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly mul_rat(const Rat& r) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  Rat eval(const Rat& x) const;
  UPoly derivative() const;
  UPoly pow(unsigned n) const;

  /** quotient and remainder over Q. */
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  static UPoly gcd(UPoly a, UPoly b);  // monic

  /** content-free integer form: returns (den-cleared, integer-primitive, lead > 0). */
  UPoly primitive_integer() const;
  UPoly monic() const;
  UPoly squarefree_part() const;

  std::string str(const std::string& var = "x") const;

 private:
  std::vector<Rat> c_;
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

/** Splits off every linear (rational-root) factor exactly; a remaining
    nonlinear part is returned as its squarefree primitive form. */
std::vector<std::pair<UPoly, int>> factor_rationals(const UPoly& p);

/** Mod-p certificate: true when some small prime keeps p irreducible. */
bool certify_irreducible(const UPoly& p);

/** Sturm-sequence real-root isolation of a squarefree polynomial: disjoint
    rational intervals (lo, hi], one per real root. */
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UPoly& squarefree);

/** All rational roots (via the linear factors of factor_rationals). */
std::vector<Rat> rational_roots(const UPoly& p);

}  // namespace vc::curves
