#include "orbifold/generators.hpp"

#include <algorithm>

namespace vc::orb {

using namespace vc::va;

FieldExpr build_Q(const Engine& h3, unsigned i, unsigned j) {
  FieldExpr acc;
  for (uint32_t a = 0; a < 3; ++a)
    acc += FieldExpr::monomial({Letter{a, i}, Letter{a, j}});
  return h3.canonical(acc);
}

FieldExpr build_C(const Engine& h3, unsigned k, unsigned l, unsigned m,
                  bool* repeated_warning) {
  if (repeated_warning) *repeated_warning = false;
  if (k == l || l == m || k == m) {
    if (repeated_warning) *repeated_warning = true;
    return {};
  }
  const int perms[6][4] = {{0, 1, 2, 1}, {0, 2, 1, -1}, {1, 0, 2, -1},
                           {1, 2, 0, 1}, {2, 0, 1, 1},  {2, 1, 0, -1}};
  unsigned d[3] = {k, l, m};
  FieldExpr acc;
  for (const auto& p : perms) {
    Word w{{0, d[p[0]]}, {1, d[p[1]]}, {2, d[p[2]]}};
    acc += FieldExpr::monomial(std::move(w), Scalar(Rat(p[3])));
  }
  return h3.canonical(acc);
}

FieldExpr build_fermi_q(const Engine& g4, unsigned j, unsigned k) {
  FieldExpr acc;
  for (uint32_t i = 0; i < 4; ++i)
    acc += FieldExpr::monomial({Letter{i, j}, Letter{i, k}});
  return g4.canonical(acc);
}

FieldExpr build_fermi_w(const Engine& g4, unsigned i, unsigned j, unsigned k,
                        unsigned l) {
  // determinant without signs: colors in fixed order, the derivative orders
  // distributed over them in all ways (nonzero on repeated indices precisely
  // because the letters are odd)
  int perm[4] = {0, 1, 2, 3};
  unsigned d[4] = {i, j, k, l};
  FieldExpr acc;
  do {
    Word w;
    for (uint32_t c = 0; c < 4; ++c) w.push_back({c, d[perm[c]]});
    acc += FieldExpr::monomial(std::move(w));
  } while (std::next_permutation(perm, perm + 4));
  return g4.canonical(acc);
}

State so3_apply(const Engine& h3, int axis, const State& s) {
  uint32_t a = (axis + 1) % 3, b = (axis + 2) % 3;
  // derivation: alpha_a -> alpha_b, alpha_b -> -alpha_a
  State out;
  for (const auto& [word, c] : s.coords()) {
    for (size_t i = 0; i < word.size(); ++i) {
      if (word[i].gen != a && word[i].gen != b) continue;
      BasisWord w = word;
      Scalar coeff = c;
      if (word[i].gen == a)
        w[i].gen = b;
      else {
        w[i].gen = a;
        coeff = -coeff;
      }
      // re-sort through the engine so the PBW order is restored
      State t;
      t.add({}, Scalar(1));
      for (size_t r = w.size(); r-- > 0;) t = h3.gen_mode(w[r].gen, w[r].mode, t);
      out += coeff * t;
    }
  }
  return out;
}

SymbolRing::SymbolRing(const Presentation& P, unsigned max_deriv)
    : p_(P), max_deriv_(max_deriv) {
  std::vector<std::string> names;
  for (uint32_t g = 0; g < P.ngens(); ++g)
    for (unsigned d = 0; d <= max_deriv; ++d)
      names.push_back(P.gen(g).name + "_" + std::to_string(d));
  pool_ = std::make_shared<VarPool>(std::move(names));
}

size_t SymbolRing::var_of(const Letter& l) const {
  if (l.deriv > max_deriv_) throw algebra_error("symbol ring: derivative order too high");
  return l.gen * (max_deriv_ + 1) + l.deriv;
}

Poly SymbolRing::symbol(const FieldExpr& f) const {
  Poly acc(pool_, Rat(0));
  size_t top = 0;
  for (const auto& [word, c] : f.terms()) top = std::max(top, word.size());
  for (const auto& [word, c] : f.terms()) {
    if (word.size() < top) continue;  // below the top filtration degree
    if (!c.is_rational()) throw algebra_error("symbol ring: parametric coefficient");
    // Koszul sort: odd letters anticommute, repeated odd letters square to zero
    std::vector<size_t> vars;
    std::vector<bool> odd;
    for (const auto& l : word) {
      vars.push_back(var_of(l));
      odd.push_back(p_.odd(l.gen));
    }
    int sign = 1;
    bool zero = false;
    for (size_t i = 0; i + 1 < vars.size() && !zero; ++i)
      for (size_t j = 0; j + 1 < vars.size() - i; ++j) {
        if (vars[j] <= vars[j + 1]) continue;
        std::swap(vars[j], vars[j + 1]);
        std::swap(odd[j], odd[j + 1]);
        if (odd[j] && odd[j + 1]) sign = -sign;
      }
    for (size_t i = 0; i + 1 < vars.size(); ++i)
      if (vars[i] == vars[i + 1] && odd[i]) zero = true;
    if (zero) continue;
    Poly::Exp e(pool_->size(), 0);
    for (size_t v : vars) e[v] += 1;
    acc = acc + Poly::from_terms(pool_, {{e, c.rational() * sign}});
  }
  return acc;
}

}  // namespace vc::orb
