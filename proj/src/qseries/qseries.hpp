#pragma once

#include "qseries/laurent.hpp"

namespace vc::qs {

struct qseries_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Truncated formal series in q^{1/den} with Laurent-polynomial coefficients.
    Coefficients are known exactly for every exponent e/den with e < trunc;
    arithmetic tracks the largest window on which the result is determined. */
class QSeries {
 public:
  static constexpr long kInf = 1L << 60;

  QSeries() = default;
  QSeries(VarPoolPtr vars, long den, long trunc = kInf)
      : vars_(std::move(vars)), den_(den), trunc_(trunc) {}

  static QSeries zero(VarPoolPtr vars, long den, long trunc = kInf) {
    return QSeries(std::move(vars), den, trunc);
  }
  /** c * q^{e/den} */
  static QSeries term(VarPoolPtr vars, long den, long e, Laurent c, long trunc = kInf);

  long den() const { return den_; }
  long trunc() const { return trunc_; }
  const VarPoolPtr& vars() const { return vars_; }
  const std::map<long, Laurent>& coeffs() const { return c_; }
  bool window_empty() const { return c_.empty(); }
  /** least exponent with a nonzero coefficient (kInf when none stored). */
  long min_exp() const { return c_.empty() ? kInf : c_.begin()->first; }

  const Laurent* coeff(long e) const {
    auto it = c_.find(e);
    return it == c_.end() ? nullptr : &it->second;
  }

  /** Rewrites on a denominator that is a multiple of den(). */
  QSeries rescaled(long new_den) const;

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }
  QSeries mul_rat(const Rat& r) const;
  QSeries mul_laurent(const Laurent& l) const;
  /** multiply by q^{e/den} */
  QSeries q_shift(long e) const;

  /** multiply by (1 + sign * M q^{e/den}), exact. */
  QSeries mul_one_plus(int sign, const Laurent& M, long e) const;
  /** divide by (1 + sign * M q^{e/den}), e > 0, via the geometric series. */
  QSeries div_one_plus(int sign, const Laurent& M, long e) const;

  /** substitution on the Laurent coefficients (variable relabelling). */
  QSeries subst(const std::vector<Laurent::Exp>& images) const;

  void add_term(long e, const Laurent& l);
  void set_trunc(long t);

  /** True when the two series agree on the overlap of their windows, which
      must extend at least to `need` (in this->den units). */
  struct Mismatch {
    long exponent_num;  // over lcm denominator
    long den;
    std::string detail;
  };
  static std::optional<Mismatch> compare(const QSeries& a, const QSeries& b, long need_num,
                                         long need_den);

 private:
  VarPoolPtr vars_;
  long den_ = 1;
  std::map<long, Laurent> c_;
  long trunc_ = kInf;
};

}  // namespace vc::qs
