#include "va/engine.hpp"

namespace vc::va {

namespace {

// PBW position order on mode letters: generator ascending, then mode ascending.
bool pos_less(const ModeLetter& a, const ModeLetter& b) {
  if (a.gen != b.gen) return a.gen < b.gen;
  return a.mode < b.mode;
}

}  // namespace

Rat Engine::field_weight_bound(const FieldExpr& f) const {
  Rat w(0);
  for (const auto& [word, c] : f.terms()) w = std::max(w, p_.word_weight(word));
  return w;
}

Rat Engine::state_weight_bound(const State& v) const {
  Rat w(0);
  for (const auto& [word, c] : v.coords()) w = std::max(w, basis_word_weight(p_, word));
  return w;
}

State Engine::gen_mode(uint32_t g, long m, const State& v, int depth) const {
  State out;
  for (const auto& [word, c] : v.coords()) out += c * gen_mode_word(g, m, word, depth);
  return out;
}

State Engine::gen_mode_word(uint32_t g, long m, const BasisWord& w, int depth) const {
  State out;
  if (w.empty()) {
    if (m < 0) out.add({{g, static_cast<int32_t>(m)}}, Scalar(1));
    return out;
  }
  const ModeLetter lead = w.front();
  const ModeLetter me{g, static_cast<int32_t>(m)};
  const bool both_odd = p_.odd(g) && p_.odd(lead.gen);

  if (m < 0 && (pos_less(me, lead) || (me == lead && !both_odd))) {
    BasisWord nw;
    nw.reserve(w.size() + 1);
    nw.push_back(me);
    nw.insert(nw.end(), w.begin(), w.end());
    out.add(nw, Scalar(1));
    return out;
  }

  State rest;
  rest.add(BasisWord(w.begin() + 1, w.end()), Scalar(1));

  if (me == lead && both_odd) {
    // odd square: x x = (1/2) [x, x]_+
    return Scalar(Rat(1, 2)) * commutator(g, m, lead.gen, lead.mode, rest, depth);
  }

  // g_(m) h_(n) = (-1)^{|g||h|} h_(n) g_(m) + [g_(m), h_(n)]
  State swapped = gen_mode(g, m, rest, depth);
  swapped = gen_mode(lead.gen, lead.mode, swapped, depth);
  if (both_odd) swapped = Scalar(-1) * swapped;
  out += swapped;
  out += commutator(g, m, lead.gen, lead.mode, rest, depth);
  return out;
}

State Engine::commutator(uint32_t g, long m, uint32_t h, long n, const State& rest,
                         int depth) const {
  if (depth >= cfg_.max_nesting)
    throw resource_error("OPE nesting depth exceeded (max_nesting=" +
                         std::to_string(cfg_.max_nesting) + ")");
  State out;
  const PoleExpansion& T = p_.pair_ope(g, h);
  for (const auto& [pole, F] : T.poles) {
    long j = pole - 1;  // [g_(m), h_(n)] = sum_j C(m,j) (g_(j)h)_(m+n-j)
    Int c = binom(m, j);
    if (c == 0) continue;
    out += Scalar(Rat(c)) * field_mode(F, m + n - j, rest, depth + 1);
  }
  return out;
}

State Engine::deriv_gen_mode(uint32_t g, unsigned d, long j, const State& v,
                             int depth) const {
  // (D^d g)_(j) = (-1)^d d! C(j, d) g_(j-d)
  Int c = binom(j, d) * factorial(d);
  if (d % 2) c = -c;
  if (c == 0) return {};
  return Scalar(Rat(c)) * gen_mode(g, j - static_cast<long>(d), v, depth);
}

State Engine::field_mode(const FieldExpr& f, long n, const State& v, int depth) const {
  State out;
  for (const auto& [word, c] : f.terms()) out += c * word_mode(word, n, v, depth);
  return out;
}

State Engine::word_mode(const Word& w, long n, const State& v, int depth) const {
  if (v.is_zero()) return {};
  if (w.empty()) return n == -1 ? v : State{};

  const Letter A = w.front();
  const Word R(w.begin() + 1, w.end());
  const Rat wA = p_.weight(A.gen) + A.deriv;
  Rat wR(0);
  for (const auto& l : R) wR += p_.weight(l.gen) + l.deriv;
  const Rat W = state_weight_bound(v);
  const int sgn = (p_.odd(A.gen) && p_.word_parity(R)) ? -1 : 1;

  State out;
  // :A R:_(n) = sum_{j<0} A_(j) R_(n-j-1) + (-1)^{|A||R|} sum_{j>=0} R_(n-j-1) A_(j)
  for (long j = -1; Rat(n - j - 1) <= W + wR - 1; --j) {
    State inner = word_mode(R, n - j - 1, v, depth);
    if (inner.is_zero()) continue;
    out += deriv_gen_mode(A.gen, A.deriv, j, inner, depth);
  }
  for (long j = 0; Rat(j) <= W + wA - 1; ++j) {
    State mid = deriv_gen_mode(A.gen, A.deriv, j, v, depth);
    if (mid.is_zero()) continue;
    State t = word_mode(R, n - j - 1, mid, depth);
    out += sgn == 1 ? t : Scalar(-1) * t;
  }
  return out;
}

State Engine::state_of(const FieldExpr& f) const {
  return field_mode(f, -1, State::vacuum());
}

FieldExpr Engine::field_of(const State& v) const {
  std::vector<std::pair<Word, Scalar>> terms;
  for (const auto& [bw, c] : v.coords()) {
    Word w;
    Rat norm(1);
    for (const auto& l : bw) {
      unsigned d = static_cast<unsigned>(-l.mode - 1);
      w.push_back({l.gen, d});
      norm /= Rat(factorial(d));
    }
    terms.push_back({std::move(w), Scalar(norm) * c});
  }
  return FieldExpr::from_terms(std::move(terms));
}

FieldExpr Engine::canonical(const FieldExpr& f) const { return field_of(state_of(f)); }

PoleExpansion Engine::ope(const FieldExpr& a, const FieldExpr& b) const {
  PoleExpansion pe;
  State sb = state_of(b);
  Rat bound = field_weight_bound(a) + field_weight_bound(b);
  for (long n = rat_floor(bound); n >= 1; --n) {
    State c = field_mode(a, n - 1, sb);
    if (!c.is_zero()) pe.poles[static_cast<int>(n)] = field_of(c);
  }
  return pe;
}

FieldExpr Engine::nproduct(const FieldExpr& a, long n, const FieldExpr& b) const {
  return field_of(field_mode(a, n, state_of(b)));
}

FieldExpr Engine::wick(const std::vector<FieldExpr>& factors) const {
  if (factors.empty()) throw algebra_error("wick: empty factor list");
  State s = state_of(factors.back());
  for (size_t i = factors.size() - 1; i-- > 0;) s = field_mode(factors[i], -1, s);
  return field_of(s);
}

// ---- Sugawara -----------------------------------------------------------

FieldExpr sugawara_sl2(const Engine& eng, const Scalar& level) {
  Scalar shifted = level + Scalar(2);  // k + h_vee
  if (shifted.is_zero())
    throw algebra_error("critical level k = -2 rejected: Sugawara vector undefined");
  FieldExpr e = eng.gen_field("e"), f = eng.gen_field("f"), h = eng.gen_field("h");
  // basis {e, h, f}, dual basis {f, h/2, e} for the normalized form
  FieldExpr sum = eng.wick({e, f}) + eng.wick({f, e}) +
                  Scalar(Rat(1, 2)) * eng.wick({h, h});
  return (Scalar(1) / (Scalar(2) * shifted)) * sum;
}

std::variant<Scalar, VirasoroMismatch> check_virasoro(const Engine& eng,
                                                      const FieldExpr& L) {
  PoleExpansion pe = eng.ope(L, L);
  FieldExpr Lc = eng.canonical(L);
  Scalar c;
  for (const auto& [pole, coeff] : pe.poles) {
    FieldExpr expect;
    switch (pole) {
      case 1: expect = Lc.derivative(); break;
      case 2: expect = Scalar(2) * Lc; break;
      case 4: expect = coeff; break;  // c/2 times identity, checked below
      default: expect = FieldExpr(); break;
    }
    if (pole == 4) {
      if (coeff.terms().size() != 1 || !coeff.terms()[0].first.empty())
        return VirasoroMismatch{4, FieldExpr::identity(), coeff};
      c = Scalar(2) * coeff.terms()[0].second;
      continue;
    }
    if (!(eng.canonical(coeff) == eng.canonical(expect)))
      return VirasoroMismatch{pole, expect, coeff};
  }
  if (!pe.pole(2)) return VirasoroMismatch{2, Scalar(2) * Lc, FieldExpr()};
  return c;
}

// ---- Jacobi -------------------------------------------------------------

JacobiReport jacobi_check(const Engine& eng, uint32_t a, uint32_t b, uint32_t c,
                          long mn_bound) {
  const Presentation& P = eng.pres();
  JacobiReport rep;
  State sc = eng.state_of(eng.gen_field(c));
  const Rat wa = P.weight(a), wb = P.weight(b), wc = P.weight(c);
  const bool ab_odd = P.odd(a) && P.odd(b);
  const PoleExpansion& T = P.pair_ope(a, b);

  long nmax = rat_floor(wb + wc - 1);
  // the right side can reach higher n through (a_(j)b) modes
  nmax = std::max(nmax, rat_floor(wa + wb + wc - 2));
  for (long n = 0; n <= nmax; ++n) {
    for (long m = 0; m + n <= std::min(mn_bound, rat_floor(wa + wb + wc - 2)); ++m) {
      State lhs = eng.gen_mode(a, m, eng.gen_mode(b, n, sc));
      State rhs_sw = eng.gen_mode(b, n, eng.gen_mode(a, m, sc));
      State resid = ab_odd ? lhs + rhs_sw : lhs - rhs_sw;
      for (const auto& [pole, F] : T.poles) {
        long j = pole - 1;
        Int bc = binom(m, j);
        if (bc == 0) continue;
        resid = resid - Scalar(Rat(bc)) * eng.field_mode(F, m + n - j, sc);
      }
      ++rep.instances;
      if (!resid.is_zero()) {
        rep.pass = false;
        rep.failures.push_back({m, n, std::move(resid)});
      }
    }
  }
  return rep;
}

// ---- commutant ----------------------------------------------------------

namespace {

using Coord = std::map<size_t, Scalar>;

}  // namespace

CommutantResult commutant_weight_space(const Engine& eng,
                                       const std::vector<FieldExpr>& gens, const Rat& w,
                                       size_t dim_bound) {
  const Presentation& P = eng.pres();
  CommutantResult res;
  // at specialized levels the formal commutant can be a proper subalgebra of
  // the honest coset; flag the output so reports can say so
  res.formal_specialization_caveat =
      P.kind() == Kind::StructureConstant && P.params()->size() == 0;
  auto basis = pbw_basis(P, w);
  if (basis.size() > dim_bound)
    throw resource_error("weight space dimension beyond configured bound");

  Rat max_gw(0);
  for (const auto& g : gens) max_gw = std::max(max_gw, eng.field_weight_bound(g));

  // stack every constraint row (one per target monomial of each a_(n)) into a
  // sparse system over the weight-w monomial coordinates; zero-mode rows come
  // first so the parameter-free part of the elimination happens early
  std::vector<Coord> rows;
  for (long n = 0; Rat(n) <= w + max_gw - 1; ++n) {
    for (const auto& g : gens) {
      Rat tw = w + eng.field_weight_bound(g) - n - 1;
      if (tw < 0) continue;
      std::map<BasisWord, std::map<size_t, Scalar>> by_target;
      for (size_t i = 0; i < basis.size(); ++i) {
        State s;
        s.add(basis[i], Scalar(1));
        State img = eng.field_mode(g, n, s);
        for (const auto& [bw, c] : img.coords()) by_target[bw][i] = c;
      }
      for (auto& [bw, row] : by_target) rows.push_back(std::move(row));
    }
  }

  // sparse row echelon; kernel by back-substitution over the free columns
  std::map<size_t, Coord> pivots;  // leading column -> normalized row
  for (auto& row : rows) {
    Coord v = std::move(row);
    while (!v.empty()) {
      auto it = pivots.find(v.begin()->first);
      if (it == pivots.end()) break;
      Scalar f = v.begin()->second;
      for (const auto& [k, x] : it->second) {
        auto vit = v.find(k);
        Scalar nv = (vit == v.end() ? Scalar() : vit->second) - f * x;
        if (nv.is_zero())
          v.erase(k);
        else
          v[k] = std::move(nv);
      }
    }
    if (v.empty()) continue;
    Scalar lead = v.begin()->second;
    for (auto& [k, x] : v) x = x / lead;
    size_t lead_col = v.begin()->first;
    pivots[lead_col] = std::move(v);
  }

  for (size_t f = 0; f < basis.size(); ++f) {
    if (pivots.count(f)) continue;
    // kernel vector with x[f] = 1, solving pivot rows bottom-up
    std::map<size_t, Scalar> x;
    x[f] = Scalar(1);
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      if (it->first > f) continue;
      Scalar acc;
      for (const auto& [k, c] : it->second) {
        if (k == it->first) continue;
        auto xit = x.find(k);
        if (xit != x.end()) acc += c * xit->second;
      }
      if (!acc.is_zero()) x[it->first] = -acc;
    }
    State s;
    for (const auto& [i, c] : x) s.add(basis[i], c);
    res.basis.push_back(std::move(s));
  }
  return res;
}

}  // namespace vc::va
