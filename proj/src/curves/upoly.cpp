#include "curves/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace vc::curves {

UPoly UPoly::operator-() const {
  UPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return UPoly(std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(c));
}

UPoly UPoly::mul_rat(const Rat& r) const {
  if (r == 0) return {};
  UPoly p = *this;
  for (auto& c : p.c_) c *= r;
  return p;
}

Rat UPoly::eval(const Rat& x) const {
  Rat v(0);
  for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
  return v;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UPoly(std::move(c));
}

UPoly UPoly::pow(unsigned n) const {
  UPoly r = constant(Rat(1)), b = *this;
  while (n) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw curve_error("division by zero polynomial");
  UPoly r = a;
  std::vector<Rat> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1,
                     Rat(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    long d = r.degree() - b.degree();
    Rat f = r.lead() / b.lead();
    q[d] += f;
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i + d] -= f * b.c_[i];
    r.trim();
  }
  return {UPoly(std::move(q)), std::move(r)};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

UPoly UPoly::primitive_integer() const {
  if (is_zero()) return {};
  Int den = 1;
  for (const auto& c : c_) den = lcm(den, c.get_den());
  Int content = 0;
  std::vector<Rat> out(c_.size());
  std::vector<Int> ints(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    ints[i] = c_[i].get_num() * (den / c_[i].get_den());
    Int g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), ints[i].get_mpz_t());
    content = g;
  }
  if (ints.back() < 0) content = -content;
  for (size_t i = 0; i < c_.size(); ++i) out[i] = Rat(ints[i] / content);
  return UPoly(std::move(out));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return mul_rat(1 / Rat(lead()));
}

UPoly UPoly::squarefree_part() const {
  if (degree() <= 1) return primitive_integer();
  UPoly g = gcd(*this, derivative());
  return divmod(*this, g).first.primitive_integer();
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Rat a = c_[i];
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    first = false;
    Rat aa = abs(a);
    if (aa != 1 || i == 0) os << rat_str(aa);
    if (i > 0) {
      if (aa != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---- rational roots and irreducibility certificates ------------------------

namespace {

// all positive divisors of |n| by trial division (sizes here are tiny)
std::vector<Int> divisors(Int n) {
  n = abs(n);
  if (n == 0) throw curve_error("divisor enumeration of zero");
  std::vector<std::pair<Int, int>> fac;
  Int d = 2;
  while (d * d <= n) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fac.push_back({d, e});
    }
    d += d == 2 ? 1 : 2;
    if (d > 2000000 && n > 1) throw curve_error("coefficient out of factorable range");
  }
  if (n > 1) fac.push_back({n, 1});
  std::vector<Int> out{1};
  for (const auto& [p, e] : fac) {
    size_t base = out.size();
    Int pw = 1;
    for (int i = 1; i <= e; ++i) {
      pw *= p;
      for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pw);
    }
  }
  return out;
}

// arithmetic mod a small prime
struct Fp {
  long p;
  long add(long a, long b) const { return (a + b) % p; }
  long sub(long a, long b) const { return (a - b % p + p) % p; }
  long mul(long a, long b) const { return static_cast<long>((__int128)a * b % p); }
  long inv(long a) const {
    long t = 0, nt = 1, r = p, nr = a % p;
    while (nr) {
      long q = r / nr;
      long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return (t % p + p) % p;
  }
};

using FpPoly = std::vector<long>;

void ftrim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fmod(const Fp& F, FpPoly a, const FpPoly& b) {
  ftrim(a);
  long binv = F.inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    long f = F.mul(a.back(), binv);
    size_t d = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[i + d] = F.sub(a[i + d], F.mul(f, b[i]));
    ftrim(a);
  }
  return a;
}

FpPoly fgcd(const Fp& F, FpPoly a, FpPoly b) {
  ftrim(a);
  ftrim(b);
  while (!b.empty()) {
    FpPoly r = fmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// number of irreducible factors mod p of a squarefree monic polynomial:
// the nullity of the Berlekamp matrix Q - I
long berlekamp_factor_count(const Fp& F, const FpPoly& u) {
  long n = static_cast<long>(u.size()) - 1;
  std::vector<std::vector<long>> M(n, std::vector<long>(n, 0));
  for (long i = 0; i < n; ++i) {
    FpPoly xi(static_cast<size_t>(i) * F.p + 1, 0);
    xi.back() = 1;
    FpPoly row = fmod(F, xi, u);
    row.resize(n, 0);
    for (long j = 0; j < n; ++j) M[j][i] = row[j];
    M[i][i] = F.sub(M[i][i], 1);
  }
  long rank = 0;
  for (long col = 0; col < n && rank < n; ++col) {
    long sel = -1;
    for (long r = rank; r < n; ++r)
      if (M[r][col]) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(M[sel], M[rank]);
    long inv = F.inv(M[rank][col]);
    for (long j = 0; j < n; ++j) M[rank][j] = F.mul(M[rank][j], inv);
    for (long r = 0; r < n; ++r)
      if (r != rank && M[r][col]) {
        long f = M[r][col];
        for (long j = 0; j < n; ++j) M[r][j] = F.sub(M[r][j], F.mul(f, M[rank][j]));
      }
    ++rank;
  }
  return n - rank;
}

}  // namespace

std::vector<Rat> rational_roots(const UPoly& p0) {
  std::vector<Rat> roots;
  if (p0.degree() < 1) return roots;
  UPoly p = p0.primitive_integer();
  // strip x^k
  size_t low = 0;
  while (low < p.coeffs().size() && p[low] == 0) ++low;
  if (low > 0) {
    roots.push_back(Rat(0));
    std::vector<Rat> c(p.coeffs().begin() + low, p.coeffs().end());
    p = UPoly(std::move(c));
  }
  if (p.degree() < 1) return roots;
  for (const Int& num : divisors(p[0].get_num()))
    for (const Int& den : divisors(p.lead().get_num()))
      for (int sg : {1, -1}) {
        Rat r(sg * num, den);
        r.canonicalize();
        if (p.eval(r) == 0 &&
            std::find(roots.begin(), roots.end(), r) == roots.end())
          roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool certify_irreducible(const UPoly& p0) {
  UPoly p = p0.primitive_integer();
  if (p.degree() == 1) return true;
  if (p.degree() < 1) return false;
  const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  for (long pr : primes) {
    if (p.lead().get_num() % pr == 0) continue;
    Fp F{pr};
    FpPoly u(p.coeffs().size());
    for (size_t i = 0; i < u.size(); ++i) {
      Int r = p[i].get_num() % pr;
      if (r < 0) r += pr;
      u[i] = r.get_si();
    }
    long lcinv = F.inv(u.back());
    for (auto& x : u) x = F.mul(x, lcinv);
    FpPoly d(u.size() - 1);
    for (size_t i = 1; i < u.size(); ++i)
      d[i - 1] = F.mul(u[i], static_cast<long>(i % pr));
    ftrim(d);
    if (d.empty()) continue;
    if (fgcd(F, u, d).size() > 1) continue;  // not squarefree mod p
    if (berlekamp_factor_count(F, u) == 1) return true;
  }
  return false;
}

std::vector<std::pair<UPoly, int>> factor_rationals(const UPoly& p0) {
  // linear factors split off exactly; any leftover is returned squarefree
  // (its irreducibility can be certified separately)
  std::vector<std::pair<UPoly, int>> out;
  if (p0.degree() < 1) return out;
  UPoly rest = p0.primitive_integer();
  for (const Rat& r : rational_roots(rest)) {
    UPoly lin({-r.get_num(), r.get_den()});
    int m = 0;
    while (true) {
      auto [q, rem] = UPoly::divmod(rest, lin);
      if (!rem.is_zero()) break;
      rest = q.primitive_integer();
      ++m;
    }
    if (m) out.push_back({lin.primitive_integer(), m});
  }
  // squarefree decomposition of the nonlinear leftover: rest = prod f_i^i
  if (rest.degree() >= 1) {
    UPoly g = UPoly::gcd(rest, rest.derivative());
    UPoly c = UPoly::divmod(rest, g).first;
    int i = 1;
    while (c.degree() >= 1) {
      UPoly d = UPoly::gcd(c, g);
      UPoly fi = UPoly::divmod(c, d).first;
      if (fi.degree() >= 1) out.push_back({fi.primitive_integer(), i});
      c = d;
      if (!d.is_zero() && g.degree() >= d.degree()) g = UPoly::divmod(g, d).first;
      ++i;
    }
  }
  return out;
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UPoly& u) {
  // Sturm chain
  std::vector<UPoly> chain{u, u.derivative()};
  while (!chain.back().is_zero()) {
    UPoly r = UPoly::divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  auto variations = [&](const Rat& x) {
    int v = 0, last = 0;
    for (const auto& f : chain) {
      Rat y = f.eval(x);
      int s = y == 0 ? 0 : (y > 0 ? 1 : -1);
      if (s != 0) {
        if (last != 0 && s != last) ++v;
        last = s;
      }
    }
    return v;
  };
  // Cauchy bound
  Rat M(1);
  for (long i = 0; i < u.degree(); ++i) {
    Rat c = abs(u[i] / u.lead());
    if (c + 1 > M) M = c + 1;
  }
  std::vector<std::pair<Rat, Rat>> out;
  std::function<void(Rat, Rat, int, int)> split = [&](Rat lo, Rat hi, int vlo, int vhi) {
    int n = vlo - vhi;
    if (n == 0) return;
    if (n == 1) {
      out.push_back({lo, hi});
      return;
    }
    Rat mid = (lo + hi) / 2;
    while (u.eval(mid) == 0) mid = (lo + mid) / 2;
    int vm = variations(mid);
    split(lo, mid, vlo, vm);
    split(mid, hi, vm, vhi);
  };
  split(-M, M, variations(-M), variations(M));
  return out;
}

}  // namespace vc::curves
