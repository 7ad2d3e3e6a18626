#include "qseries/qseries.hpp"

#include <numeric>
#include <sstream>

namespace vc::qs {

QSeries QSeries::term(VarPoolPtr vars, long den, long e, Laurent c, long trunc) {
  QSeries s(std::move(vars), den, trunc);
  s.add_term(e, c);
  return s;
}

void QSeries::add_term(long e, const Laurent& l) {
  if (e >= trunc_ || l.is_zero()) return;
  auto it = c_.find(e);
  if (it == c_.end()) {
    c_[e] = l;
    return;
  }
  it->second += l;
  if (it->second.is_zero()) c_.erase(it);
}

void QSeries::set_trunc(long t) {
  trunc_ = t;
  for (auto it = c_.begin(); it != c_.end();)
    it = it->first >= trunc_ ? c_.erase(it) : std::next(it);
}

QSeries QSeries::rescaled(long new_den) const {
  if (new_den == den_) return *this;
  if (new_den % den_ != 0) throw qseries_error("rescale to a non-multiple denominator");
  long f = new_den / den_;
  QSeries s(vars_, new_den, trunc_ >= kInf ? kInf : trunc_ * f);
  for (const auto& [e, l] : c_) s.c_[e * f] = l;
  return s;
}

QSeries QSeries::operator+(const QSeries& o) const {
  long nd = std::lcm(den_, o.den_);
  QSeries a = rescaled(nd), b = o.rescaled(nd);
  QSeries s(a.vars_ ? a.vars_ : b.vars_, nd, std::min(a.trunc_, b.trunc_));
  s.c_ = std::move(a.c_);
  for (const auto& [e, l] : b.c_) s.add_term(e, l);
  for (auto it = s.c_.begin(); it != s.c_.end();)
    it = it->first >= s.trunc_ ? s.c_.erase(it) : std::next(it);
  return s;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + o.mul_rat(Rat(-1)); }

QSeries QSeries::operator*(const QSeries& o) const {
  long nd = std::lcm(den_, o.den_);
  QSeries a = rescaled(nd), b = o.rescaled(nd);
  // the true series has no terms below min(stored minimum, window end)
  auto emin = [](const QSeries& s) {
    return s.c_.empty() ? s.trunc_ : s.c_.begin()->first;
  };
  // the product is determined below min(trunc_a + emin_b, trunc_b + emin_a)
  long ta = a.trunc_ >= kInf ? kInf : a.trunc_ + std::min<long>(emin(b), kInf - a.trunc_);
  long tb = b.trunc_ >= kInf ? kInf : b.trunc_ + std::min<long>(emin(a), kInf - b.trunc_);
  QSeries s(a.vars_ ? a.vars_ : b.vars_, nd, std::min({ta, tb, kInf}));
  for (const auto& [ea, la] : a.c_) {
    for (const auto& [eb, lb] : b.c_) {
      long e = ea + eb;
      if (e >= s.trunc_) break;  // b keys ascend
      s.add_term(e, la * lb);
    }
  }
  return s;
}

QSeries QSeries::mul_rat(const Rat& r) const {
  QSeries s(vars_, den_, trunc_);
  if (r == 0) return s;
  for (const auto& [e, l] : c_) s.c_[e] = l.mul_rat(r);
  return s;
}

QSeries QSeries::mul_laurent(const Laurent& l) const {
  QSeries s(vars_, den_, trunc_);
  for (const auto& [e, c] : c_) {
    Laurent p = c * l;
    if (!p.is_zero()) s.c_[e] = std::move(p);
  }
  return s;
}

QSeries QSeries::q_shift(long e) const {
  QSeries s(vars_, den_, trunc_ >= kInf ? kInf : trunc_ + e);
  for (const auto& [k, l] : c_) s.c_[k + e] = l;
  return s;
}

QSeries QSeries::mul_one_plus(int sign, const Laurent& M, long e) const {
  QSeries shifted = mul_laurent(sign > 0 ? M : -M).q_shift(e);
  // the factor has unit constant term: the window is not shortened
  QSeries s = *this + shifted;
  s.set_trunc(std::min(trunc_, shifted.trunc()));
  return s;
}

QSeries QSeries::div_one_plus(int sign, const Laurent& M, long e) const {
  if (e <= 0) throw qseries_error("div_one_plus needs a positive q-exponent");
  QSeries s = *this;
  long window = trunc_ >= kInf ? 0 : trunc_;
  if (trunc_ >= kInf)
    throw qseries_error("div_one_plus needs a finite truncation window");
  // multiply by sum_k (-sign M)^k q^{ke} until the shift leaves the window
  QSeries acc(vars_, den_, trunc_);
  Laurent pw = Laurent::constant(vars_, Rat(1));
  for (long k = 0; min_exp() + k * e < window; ++k) {
    if (k > 0) pw = pw * (sign > 0 ? -M : M);
    QSeries t = mul_laurent(pw).q_shift(k * e);
    t.set_trunc(trunc_);
    acc += t;
  }
  acc.set_trunc(trunc_);
  return acc;
}

QSeries QSeries::subst(const std::vector<Laurent::Exp>& images) const {
  QSeries s(vars_, den_, trunc_);
  for (const auto& [e, l] : c_) {
    Laurent p = l.subst(images);
    if (!p.is_zero()) s.c_[e] = std::move(p);
  }
  return s;
}

std::optional<QSeries::Mismatch> QSeries::compare(const QSeries& a, const QSeries& b,
                                                  long need_num, long need_den) {
  long nd = std::lcm(a.den(), b.den());
  QSeries x = a.rescaled(nd), y = b.rescaled(nd);
  long window = std::min(x.trunc(), y.trunc());
  if (window < kInf && window * need_den < need_num * nd) {
    std::ostringstream os;
    os << "window too small: known below q^" << window << "/" << nd;
    return Mismatch{window, nd, os.str()};
  }
  long stop = std::min(window, (need_num * nd + need_den - 1) / need_den);
  QSeries d = x - y;
  for (const auto& [e, l] : d.coeffs()) {
    if (e >= stop) break;
    if (!l.is_zero()) {
      std::ostringstream os;
      os << "first mismatch at q^" << e << "/" << nd << ": " << l.str();
      return Mismatch{e, nd, os.str()};
    }
  }
  return std::nullopt;
}

}  // namespace vc::qs
