#include "core/poly.hpp"

#include <algorithm>
#include <sstream>

namespace vc {

namespace {

// Lex order on exponent vectors, highest first in the term list.
bool exp_less(const Poly::Exp& a, const Poly::Exp& b) { return a > b; }

Rat rat_gcd(const Rat& a, const Rat& b) {
  // gcd on rationals: gcd of numerators over lcm of denominators; used for
  // integer-content extraction.
  Int gn, gl;
  mpz_gcd(gn.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  mpz_lcm(gl.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  return Rat(gn, gl);
}

}  // namespace

Poly::Poly(VarPoolPtr pool, const Rat& c) : pool_(std::move(pool)) {
  if (c != 0) terms_.push_back({Exp(pool_ ? pool_->size() : 0, 0), c});
}

Poly Poly::var(VarPoolPtr pool, size_t idx) {
  Poly p;
  p.pool_ = std::move(pool);
  Exp e(p.pool_->size(), 0);
  e[idx] = 1;
  p.terms_.push_back({std::move(e), Rat(1)});
  return p;
}

Poly Poly::from_terms(VarPoolPtr pool, std::vector<std::pair<Exp, Rat>> t) {
  Poly p;
  p.pool_ = std::move(pool);
  p.terms_ = std::move(t);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const auto& a, const auto& b) { return exp_less(a.first, b.first); });
  std::vector<std::pair<Exp, Rat>> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().second == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (unsigned e : terms_[0].first)
    if (e) return false;
  return true;
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw scalar_error("polynomial is not constant: " + str());
  return terms_[0].second;
}

unsigned Poly::degree(size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first[var]);
  return d;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) {
    unsigned s = 0;
    for (unsigned e : t.first) s += e;
    d = std::max(d, s);
  }
  return d;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly p;
  p.pool_ = pool_ ? pool_ : o.pool_;
  p.terms_ = terms_;
  p.terms_.insert(p.terms_.end(), o.terms_.begin(), o.terms_.end());
  p.normalize();
  return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly p;
  p.pool_ = pool_ ? pool_ : o.pool_;
  p.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Exp e = a.first;
      for (size_t i = 0; i < e.size(); ++i) e[i] += b.first[i];
      p.terms_.push_back({std::move(e), a.second * b.second});
    }
  p.normalize();
  return p;
}

Poly Poly::mul_rat(const Rat& c) const {
  if (c == 0) return Poly(pool_, Rat(0));
  Poly p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

Poly Poly::pow(unsigned n) const {
  Poly r(pool_, Rat(1));
  Poly b = *this;
  while (n) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

Poly Poly::divexact(const Poly& d) const {
  if (d.is_zero()) throw scalar_error("division by zero polynomial");
  Poly rem = *this;
  Poly quot(pool_ ? pool_ : d.pool_, Rat(0));
  const auto& dl = d.terms_.front();
  while (!rem.is_zero()) {
    const auto& rl = rem.terms_.front();
    Exp e = rl.first;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < dl.first[i]) throw scalar_error("inexact polynomial division");
      e[i] -= dl.first[i];
    }
    Poly t;
    t.pool_ = quot.pool_;
    t.terms_.push_back({std::move(e), rl.second / dl.second});
    quot = quot + t;
    rem = rem - t * d;
  }
  return quot;
}

Poly Poly::derivative(size_t var) const {
  std::vector<std::pair<Exp, Rat>> out;
  for (const auto& t : terms_) {
    if (t.first[var] == 0) continue;
    Exp e = t.first;
    Rat c = t.second * Rat(static_cast<long>(e[var]));
    e[var] -= 1;
    out.push_back({std::move(e), std::move(c)});
  }
  return from_terms(pool_, std::move(out));
}

Rat Poly::eval(const std::vector<Rat>& xs) const {
  Rat acc(0);
  for (const auto& t : terms_) {
    Rat v = t.second;
    for (size_t i = 0; i < t.first.size(); ++i)
      for (unsigned j = 0; j < t.first[i]; ++j) v *= xs[i];
    acc += v;
  }
  return acc;
}

std::pair<Rat, Poly> Poly::primitive() const {
  if (is_zero()) return {Rat(1), *this};
  Rat content(0);
  for (const auto& t : terms_) content = rat_gcd(content, t.second);
  if (terms_.front().second < 0) content = -content;
  Poly p = *this;
  for (auto& t : p.terms_) t.second /= content;
  return {content, p};
}

namespace {

// Dense view in the main variable with Poly coefficients (main-var exponent
// stripped from the coefficients).
std::vector<Poly> to_univar(const Poly& p, size_t var) {
  std::vector<Poly> cs(p.degree(var) + 1, Poly(p.pool(), Rat(0)));
  for (const auto& t : p.terms()) {
    Poly::Exp e = t.first;
    unsigned d = e[var];
    e[var] = 0;
    cs[d] = cs[d] + Poly::from_terms(p.pool(), {{e, t.second}});
  }
  return cs;
}

Poly from_univar(const std::vector<Poly>& cs, size_t var, const VarPoolPtr& pool) {
  Poly acc(pool, Rat(0));
  for (size_t d = 0; d < cs.size(); ++d) {
    std::vector<std::pair<Poly::Exp, Rat>> ts;
    for (const auto& t : cs[d].terms()) {
      Poly::Exp e = t.first;
      e[var] += static_cast<unsigned>(d);
      ts.push_back({e, t.second});
    }
    acc = acc + Poly::from_terms(pool, std::move(ts));
  }
  return acc;
}

void trim(std::vector<Poly>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// Pseudo-remainder of dense polynomials over Poly coefficients.
std::vector<Poly> pseudo_rem(std::vector<Poly> a, const std::vector<Poly>& b) {
  trim(a);
  const Poly& lb = b.back();
  long k = static_cast<long>(a.size()) - static_cast<long>(b.size());
  while (k >= 0 && !a.empty()) {
    Poly la = a.back();
    for (auto& c : a) c = c * lb;
    for (size_t i = 0; i < b.size(); ++i) {
      size_t pos = a.size() - b.size() + i;
      a[pos] = a[pos] - la * b[i];
    }
    a.pop_back();
    trim(a);
    k = static_cast<long>(a.size()) - static_cast<long>(b.size());
  }
  return a;
}

Poly content_of(const std::vector<Poly>& cs) {
  Poly g;
  bool first = true;
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = first ? c : Poly::gcd(g, c);
    first = false;
  }
  return first ? Poly() : g;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.primitive().second;
  if (b.is_zero()) return a.primitive().second;
  VarPoolPtr pool = a.pool_ ? a.pool_ : b.pool_;
  size_t nv = pool ? pool->size() : 0;
  // main variable: highest index actually present
  std::optional<size_t> main;
  for (size_t v = nv; v-- > 0;) {
    if (a.degree(v) > 0 || b.degree(v) > 0) {
      main = v;
      break;
    }
  }
  if (!main) return Poly(pool, Rat(1));  // both constants, unit gcd over Q

  auto ua = to_univar(a, *main), ub = to_univar(b, *main);
  Poly ca = content_of(ua), cb = content_of(ub);
  for (auto& c : ua) c = c.divexact(ca);
  for (auto& c : ub) c = c.divexact(cb);
  // primitive PRS
  std::vector<Poly> f = ua.size() >= ub.size() ? ua : ub;
  std::vector<Poly> g = ua.size() >= ub.size() ? ub : ua;
  while (true) {
    trim(g);
    if (g.empty()) break;
    std::vector<Poly> r = pseudo_rem(f, g);
    trim(r);
    if (!r.empty()) {
      Poly cr = content_of(r);
      for (auto& c : r) c = c.divexact(cr);
    }
    f = std::move(g);
    g = std::move(r);
  }
  Poly cg = gcd(ca, cb);
  Poly result = from_univar(f, *main, pool) * cg;
  return result.primitive().second;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rat c = t.second;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rat ac = abs(c);
    bool hasvar = false;
    for (unsigned e : t.first) hasvar |= e > 0;
    if (ac != 1 || !hasvar) os << rat_str(ac);
    bool sep = ac != 1 || !hasvar;
    for (size_t i = 0; i < t.first.size(); ++i) {
      if (!t.first[i]) continue;
      if (sep) os << "*";
      sep = true;
      os << pool_->name(i);
      if (t.first[i] > 1) os << "^" << t.first[i];
    }
  }
  return os.str();
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw scalar_error("zero denominator in rational function");
  reduce();
}

RatFunc RatFunc::from_poly(Poly p) {
  VarPoolPtr pool = p.pool();
  return RatFunc(std::move(p), Poly(pool, Rat(1)));
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(den_.pool(), Rat(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (!g.is_constant() || g.constant_value() != 1) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  auto [ud, pd] = den_.primitive();
  auto [un, pn] = num_.primitive();
  num_ = pn.mul_rat(un / ud);
  den_ = pd;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.num_.is_zero()) throw scalar_error("division by zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

Rat RatFunc::eval(const std::vector<Rat>& xs) const {
  Rat d = den_.eval(xs);
  if (d == 0)
    throw scalar_error("specialization annihilates denominator factor " + den_.str());
  return num_.eval(xs) / d;
}

std::string RatFunc::str() const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace vc
