#include "va/state.hpp"

#include <sstream>

namespace vc::va {

State State::operator+(const State& o) const {
  State s = *this;
  s += o;
  return s;
}

State& State::operator+=(const State& o) {
  for (const auto& [w, c] : o.c_) add(w, c);
  return *this;
}

State State::operator-(const State& o) const {
  State s = *this;
  for (const auto& [w, c] : o.c_) s.add(w, -c);
  return s;
}

State operator*(const Scalar& c, const State& v) {
  State s;
  if (c.is_zero()) return s;
  for (const auto& [w, x] : v.c_) {
    Scalar y = c * x;
    if (!y.is_zero()) s.c_[w] = std::move(y);
  }
  return s;
}

void State::add(const BasisWord& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = c_.find(w);
  if (it == c_.end()) {
    c_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) c_.erase(it);
}

std::string State::str(const Presentation& P) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (const auto& l : w) os << " " << P.gen(l.gen).name << "(" << l.mode << ")";
    if (w.empty()) os << " |0>";
  }
  return os.str();
}

Rat mode_letter_weight(const Presentation& P, const ModeLetter& l) {
  return P.weight(l.gen) - Rat(l.mode) - 1;
}

Rat basis_word_weight(const Presentation& P, const BasisWord& w) {
  Rat s(0);
  for (const auto& l : w) s += mode_letter_weight(P, l);
  return s;
}

namespace {

void enumerate(const Presentation& P, uint32_t gen, int32_t min_mode, const Rat& rem,
               BasisWord& acc, std::vector<BasisWord>& out) {
  if (rem == 0) {
    out.push_back(acc);
    return;
  }
  if (rem < 0) return;
  for (uint32_t g = gen; g < P.ngens(); ++g) {
    if (P.weight(g) <= 0)
      throw algebra_error("PBW enumeration needs positive generator weights");
    int32_t start = g == gen ? min_mode : INT32_MIN;
    // letter (g, m), m < 0, weight wt(g) - m - 1 <= rem
    // i.e. m >= wt(g) - 1 - rem
    Rat lo = P.weight(g) - 1 - rem;
    long mlo = rat_floor(lo);
    if (Rat(mlo) < lo) mlo += 1;  // ceil
    for (int32_t m = std::max<long>(mlo, start == INT32_MIN ? mlo : start); m <= -1; ++m) {
      acc.push_back({g, m});
      int32_t next_min = P.odd(g) ? m + 1 : m;
      enumerate(P, g, next_min, rem - mode_letter_weight(P, {g, m}), acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<BasisWord> pbw_basis(const Presentation& P, const Rat& w) {
  std::vector<BasisWord> out;
  BasisWord acc;
  enumerate(P, 0, INT32_MIN, w, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

Int pbw_dimension(const Presentation& P, const Rat& w) {
  // Coefficient extraction from prod_g prod_{n>=1} (1 -+ q^{wt(g)+n-1})^{-+1},
  // computed over the half-integer grid.
  if (w < 0) return 0;
  Int nden = 1;
  for (uint32_t g = 0; g < P.ngens(); ++g)
    nden = lcm(nden, P.weight(g).get_den());
  nden = lcm(nden, w.get_den());
  long N = nden.get_si();
  Rat wn = w * Rat(nden);
  if (!is_integer(wn)) return 0;
  long target = rat_floor(wn);
  std::vector<Int> series(target + 1, 0);
  series[0] = 1;
  for (uint32_t g = 0; g < P.ngens(); ++g) {
    for (long step = 0;; ++step) {
      Rat lw = (P.weight(g) + step) * Rat(static_cast<long>(N));  // letter weight, scaled
      long s = rat_floor(lw);
      if (s > target) break;
      if (s <= 0) throw algebra_error("nonpositive letter weight");
      if (P.odd(g)) {
        // multiply by (1 + q^s)
        for (long i = target; i >= s; --i) series[i] += series[i - s];
      } else {
        // multiply by 1/(1 - q^s)
        for (long i = s; i <= target; ++i) series[i] += series[i - s];
      }
    }
  }
  return series[target];
}

}  // namespace vc::va
