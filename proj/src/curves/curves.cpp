#include "curves/curves.hpp"

#include <sstream>

namespace vc::curves {

BivarPoly BivarPoly::from_terms(std::map<std::pair<unsigned, unsigned>, Rat> t) {
  BivarPoly p;
  for (auto& [k, v] : t)
    if (v != 0) p.t_.emplace(k, v);
  return p;
}

unsigned BivarPoly::deg_lambda() const {
  unsigned d = 0;
  for (const auto& [k, v] : t_) d = std::max(d, k.second);
  return d;
}

Rat BivarPoly::eval(const Rat& c, const Rat& lambda) const {
  Rat s(0);
  for (const auto& [k, v] : t_) {
    Rat m = v;
    for (unsigned i = 0; i < k.first; ++i) m *= c;
    for (unsigned j = 0; j < k.second; ++j) m *= lambda;
    s += m;
  }
  return s;
}

std::vector<UPoly> BivarPoly::lambda_coefficients() const {
  std::vector<std::vector<Rat>> cs(deg_lambda() + 1);
  for (const auto& [k, v] : t_) {
    auto& row = cs[k.second];
    if (row.size() <= k.first) row.resize(k.first + 1, Rat(0));
    row[k.first] += v;
  }
  std::vector<UPoly> out;
  for (auto& row : cs) out.push_back(UPoly(std::move(row)));
  return out;
}

UPoly BivarPoly::at_c(const Rat& c) const {
  std::vector<Rat> row(deg_lambda() + 1, Rat(0));
  for (const auto& [k, v] : t_) {
    Rat m = v;
    for (unsigned i = 0; i < k.first; ++i) m *= c;
    row[k.second] += m;
  }
  return UPoly(std::move(row));
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  std::map<std::pair<unsigned, unsigned>, Rat> t;
  for (const auto& [ka, va] : t_)
    for (const auto& [kb, vb] : o.t_)
      t[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
  return from_terms(std::move(t));
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  std::map<std::pair<unsigned, unsigned>, Rat> t = t_;
  for (const auto& [k, v] : o.t_) t[k] += v;
  return from_terms(std::move(t));
}

BivarPoly BivarPoly::mul_rat(const Rat& r) const {
  std::map<std::pair<unsigned, unsigned>, Rat> t = t_;
  for (auto& [k, v] : t) v *= r;
  return from_terms(std::move(t));
}

bool BivarPoly::proportional_to(const BivarPoly& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (t_.size() != o.t_.size()) return false;
  auto it = t_.begin(), jt = o.t_.begin();
  Rat ratio = it->second / jt->second;
  for (; it != t_.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (it->second != jt->second * ratio) return false;
  }
  return true;
}

std::string BivarPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << rat_str(v) << ")";
    if (k.first) os << "*c^" << k.first;
    if (k.second) os << "*lam^" << k.second;
  }
  return os.str();
}

// ---- bundled data ----------------------------------------------------------

namespace {

UPoly up(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long x : coeffs) c.push_back(Rat(x));
  return UPoly(std::move(c));
}

BivarPoly from_lambda_coeffs(const std::vector<UPoly>& cs) {
  std::map<std::pair<unsigned, unsigned>, Rat> t;
  for (unsigned j = 0; j < cs.size(); ++j)
    for (long i = 0; i <= cs[j].degree(); ++i)
      if (cs[j][i] != 0) t[{static_cast<unsigned>(i), j}] = cs[j][i];
  return BivarPoly::from_terms(std::move(t));
}

std::map<std::string, BivarPoly> build_curves() {
  std::map<std::string, BivarPoly> m;
  {
    UPoly a = up({-2633664, 1806268, 101736, 5275, 85}).mul_rat(Rat(3));
    UPoly b = (up({-1, 1}) * up({-1, 2}) * up({46, 3}) * up({22, 5}) * up({444, 11}))
                  .mul_rat(Rat(-84));
    UPoly c = (up({-1, 1}) * up({-1, 1}) * up({22, 5}) * up({22, 5}) *
               up({19104, 1531, 29}))
                  .mul_rat(Rat(1029));
    m["p1"] = from_lambda_coeffs({a, b, c});
  }
  m["p2"] = from_lambda_coeffs(
      {up({82, -47, -10}), (up({-1, 1}) * up({-17, 2}) * up({22, 5})).mul_rat(Rat(7))});
  m["p3"] = from_lambda_coeffs(
      {up({-14, 309, 5}), (up({-41, 1}) * up({-1, 1}) * up({22, 5})).mul_rat(Rat(7))});
  {
    UPoly f = up({-196, 1476, -955, -25});
    UPoly g = (up({-1, 1}) * up({-1, 2}) * up({22, 5})).mul_rat(Rat(980));
    UPoly h = (up({-25, 1}) * up({-1, 1}) * up({-1, 1}) * up({22, 5}) * up({22, 5}))
                  .mul_rat(Rat(49));
    m["p4"] = from_lambda_coeffs({f, g, h});
  }
  m["degenerate"] = from_lambda_coeffs(
      {up({-196, 172, -1}), UPoly{}, up({213444, -329868, 30429, 74970, 11025})});
  return m;
}

std::map<std::string, RationalMap> build_params() {
  std::map<std::string, RationalMap> m;
  m["k2"] = RationalMap{up({0, 18, 3}), up({16, 12, 2}),
                        (up({2, 1}) * up({4, 1}) * up({-5248, -4488, -352, 132, 11}))
                            .mul_rat(Rat(-2)),
                        (up({-2, 1}) * up({8, 1}) * up({68, 42, 7}) *
                         up({352, 354, 59}))
                            .mul_rat(Rat(7))};
  m["kh"] = RationalMap{up({0, -7, -2}), up({6, 7, 2}),
                        up({2, 1}) * up({3, 2}) * up({84, 2359, 3271, 1484, 212}),
                        (up({3, 1}) * up({1, 2}) * up({41, 49, 14}) *
                         up({132, 119, 34}))
                            .mul_rat(Rat(14))};
  m["kk"] = RationalMap{up({0, 0, 3}), up({2, 3, 1}),
                        up({1, 1}) * up({2, 1}) * up({-28, -118, -23, 22}),
                        (up({-2, 1}) * up({1, 2}) * up({5, 2}) * up({44, 66, 37}))
                            .mul_rat(Rat(7))};
  m["small"] = RationalMap{up({0, 9, 6}), up({2, 1}), up({-1}), up({16})};
  return m;
}

}  // namespace

const BivarPoly& curve(const std::string& name) {
  static const std::map<std::string, BivarPoly> m = build_curves();
  auto it = m.find(name);
  if (it == m.end()) throw curve_error("unknown curve: " + name);
  return it->second;
}

std::vector<std::string> curve_names() { return {"p1", "p2", "p3", "p4", "degenerate"}; }

const RationalMap& param(const std::string& name) {
  static const std::map<std::string, RationalMap> m = build_params();
  auto it = m.find(name);
  if (it == m.end()) throw curve_error("unknown parametrization: " + name);
  return it->second;
}

std::vector<std::string> param_names() { return {"k2", "kh", "kk", "small"}; }

namespace {

[[noreturn]] void pole_diagnostic(const UPoly& den, const Rat& k) {
  for (const auto& [f, mult] : factor_rationals(den))
    if (f.eval(k) == 0)
      throw curve_error("parametrization pole at k = " + rat_str(k) +
                        ": denominator factor " + f.str("k") + " vanishes");
  throw curve_error("parametrization pole at k = " + rat_str(k));
}

}  // namespace

std::pair<Rat, Rat> RationalMap::eval(const Rat& k) const {
  Rat cd = c_den.eval(k), ld = l_den.eval(k);
  if (cd == 0) pole_diagnostic(c_den, k);
  if (ld == 0) pole_diagnostic(l_den, k);
  return {c_num.eval(k) / cd, l_num.eval(k) / ld};
}

UPoly on_curve_residual(const std::string& curve_name, const std::string& map_name) {
  const BivarPoly& p = curve(curve_name);
  const RationalMap& mp = param(map_name);
  auto cs = p.lambda_coefficients();
  unsigned dl = static_cast<unsigned>(cs.size()) - 1;
  unsigned dc = 0;
  for (const auto& u : cs) dc = std::max<unsigned>(dc, static_cast<unsigned>(std::max<long>(u.degree(), 0)));
  // clear denominators: sum_{i,j} a_ij c_num^i c_den^{dc-i} l_num^j l_den^{dl-j}
  UPoly acc;
  for (unsigned j = 0; j < cs.size(); ++j) {
    for (long i = 0; i <= cs[j].degree(); ++i) {
      if (cs[j][i] == 0) continue;
      UPoly term = UPoly::constant(cs[j][i]);
      term = term * mp.c_num.pow(static_cast<unsigned>(i)) *
             mp.c_den.pow(dc - static_cast<unsigned>(i));
      term = term * mp.l_num.pow(j) * mp.l_den.pow(dl - j);
      acc = acc + term;
    }
  }
  return acc;
}

UPoly resultant_lambda(const BivarPoly& a, const BivarPoly& b) {
  auto ca = a.lambda_coefficients(), cb = b.lambda_coefficients();
  long m = static_cast<long>(ca.size()) - 1, n = static_cast<long>(cb.size()) - 1;
  if (m < 0 || n < 0) return {};
  long size = m + n;
  if (size == 0) return UPoly::constant(Rat(1));
  // Sylvester matrix with UPoly entries, cofactor expansion (sizes <= 4 here)
  std::vector<std::vector<UPoly>> M(size, std::vector<UPoly>(size));
  for (long r = 0; r < n; ++r)
    for (long i = 0; i <= m; ++i) M[r][r + (m - i)] = ca[i];
  for (long r = 0; r < m; ++r)
    for (long i = 0; i <= n; ++i) M[n + r][r + (n - i)] = cb[i];
  std::function<UPoly(std::vector<std::vector<UPoly>>&)> det =
      [&](std::vector<std::vector<UPoly>>& A) -> UPoly {
    size_t k = A.size();
    if (k == 1) return A[0][0];
    UPoly acc;
    for (size_t r = 0; r < k; ++r) {
      if (A[r][0].is_zero()) continue;
      std::vector<std::vector<UPoly>> sub;
      for (size_t i = 0; i < k; ++i) {
        if (i == r) continue;
        sub.push_back(std::vector<UPoly>(A[i].begin() + 1, A[i].end()));
      }
      UPoly minor = det(sub);
      UPoly term = A[r][0] * minor;
      acc = (r % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  return det(M);
}

IntersectReport intersect(const std::string& curveA, const std::string& curveB) {
  IntersectReport rep;
  if (curveA == curveB) throw curve_error("intersect needs distinct curves");
  const BivarPoly& A = curve(curveA);
  const BivarPoly& B = curve(curveB);
  UPoly res = resultant_lambda(A, B);
  if (res.is_zero()) {
    rep.shared_component = true;
    rep.notes.push_back("curves share a component: resultant vanishes identically");
    return rep;
  }
  auto factors = factor_rationals(res);
  std::vector<std::pair<Rat, Rat>> rational_points;
  for (const auto& [f, mult] : factors) {
    if (f.degree() == 1) {
      Rat c0 = -f[0] / f[1];
      // common lambda-roots at this c
      UPoly ua = A.at_c(c0), ub = B.at_c(c0);
      if (ua.is_zero() || ub.is_zero()) {
        rep.notes.push_back("vertical line c = " + rat_str(c0) + " lies on a curve");
        continue;
      }
      UPoly g = UPoly::gcd(ua, ub);
      if (g.degree() < 1) continue;  // degenerate resultant root (lc collapse)
      for (const Rat& l0 : rational_roots(g))
        rational_points.push_back({c0, l0});
      UPoly leftover = g;
      for (const Rat& l0 : rational_roots(g)) {
        UPoly lin({-l0.get_num(), l0.get_den()});
        while (true) {
          auto [q, r] = UPoly::divmod(leftover, lin);
          if (!r.is_zero()) break;
          leftover = q;
        }
      }
      if (leftover.degree() >= 1)
        rep.notes.push_back("non-rational lambda fiber over c = " + rat_str(c0));
    } else {
      bool minimal = certify_irreducible(f);
      for (const auto& [lo, hi] : isolate_real_roots(f)) {
        CurvePoint pt;
        pt.algebraic_c = CurvePoint::Algebraic{f, minimal, lo, hi};
        rep.points.push_back(pt);
      }
      rep.notes.push_back("algebraic c-coordinates with defining polynomial " +
                          f.str("c"));
    }
  }
  std::sort(rational_points.begin(), rational_points.end());
  for (const auto& [c0, l0] : rational_points) {
    if (A.eval(c0, l0) != 0 || B.eval(c0, l0) != 0)
      throw curve_error("internal: unverified intersection point");
    CurvePoint pt;
    pt.rational = {c0, l0};
    rep.points.push_back(pt);
  }
  return rep;
}

}  // namespace vc::curves
