#include "orbifold/decoupling.hpp"

#include <sstream>

namespace vc::orb {

using namespace vc::va;

namespace {

// One entry per term of the weight-12 relation; Q pairs are encoded as
// (i1 j1 d1  i2 j2 d2) meaning :(D^d1 Q_{i1 j1}) (D^d2 Q_{i2 j2}):.
const std::vector<std::pair<const char*, std::array<int, 6>>> kPairTerms = {
    {"1/30", {0, 0, 0, 0, 8, 0}},     {"127/15", {0, 2, 0, 0, 6, 0}},
    {"-49/6", {0, 4, 0, 0, 4, 0}},    {"-1/6", {0, 0, 2, 0, 6, 0}},
    {"241/60", {0, 0, 1, 0, 6, 1}},   {"19/30", {0, 0, 0, 0, 6, 2}},
    {"233/12", {0, 2, 2, 0, 4, 0}},   {"13/3", {0, 2, 1, 0, 4, 1}},
    {"-409/12", {0, 2, 0, 0, 4, 2}},  {"-101/24", {0, 0, 4, 0, 4, 0}},
    {"-5/12", {0, 0, 3, 0, 4, 1}},    {"4", {0, 0, 2, 0, 4, 2}},
    {"-117/8", {0, 0, 1, 0, 4, 3}},   {"-7/3", {0, 0, 0, 0, 4, 4}},
    {"159/4", {0, 2, 4, 0, 2, 0}},    {"-229/24", {0, 2, 3, 0, 2, 1}},
    {"-17/2", {0, 2, 2, 0, 2, 2}},    {"-159/20", {0, 0, 6, 0, 2, 0}},
    {"95/48", {0, 0, 5, 0, 2, 1}},    {"85/24", {0, 0, 4, 0, 2, 2}},
    {"89/48", {0, 0, 3, 0, 2, 3}},    {"-5", {0, 0, 2, 0, 2, 4}},
    {"4357/240", {0, 0, 1, 0, 2, 5}}, {"14/5", {0, 0, 0, 0, 2, 6}},
    {"-17/30", {0, 0, 8, 0, 0, 0}},   {"-589/160", {0, 0, 7, 0, 0, 1}},
    {"1", {0, 0, 6, 0, 0, 2}},        {"-13/32", {0, 0, 5, 0, 0, 3}},
    {"-17/48", {0, 0, 4, 0, 0, 4}}};

// single-generator tail: coefficient, (i, j, derivative order)
const std::vector<std::pair<const char*, std::array<int, 3>>> kSingleTerms = {
    {"313/450", {0, 10, 0}},        {"403/72", {0, 8, 2}},
    {"-2141/120", {0, 6, 4}},       {"3653/45", {0, 4, 6}},
    {"-1058927/10080", {0, 2, 8}},  {"2156377/100800", {0, 0, 10}}};

// the six classical cubic monomials with their signs (subtracted as a block)
const int kCubicSigns[6] = {1, -1, -1, -1, 1, 1};
const int kCubicIdx[6][6] = {{0, 0, 1, 1, 2, 2}, {0, 0, 1, 2, 1, 2},
                             {0, 1, 0, 1, 2, 2}, {0, 2, 1, 1, 0, 2},
                             {0, 1, 0, 2, 1, 2}, {0, 2, 1, 2, 0, 1}};

std::string pair_label(const std::array<int, 6>& s) {
  std::ostringstream os;
  os << ":D" << s[2] << "Q" << s[0] << s[1] << " D" << s[5] << "Q" << s[3] << s[4] << ":";
  return os.str();
}

std::string single_label(const std::array<int, 3>& s) {
  std::ostringstream os;
  os << "D" << s[2] << "Q" << s[0] << "," << s[1];
  return os.str();
}

std::vector<DecouplingTerm> relation_terms(const Engine& h3) {
  std::vector<DecouplingTerm> terms;
  terms.push_back({":C012 C012:", Rat(1),
                   h3.wick({build_C(h3, 0, 1, 2), build_C(h3, 0, 1, 2)}), false});
  for (int t = 0; t < 6; ++t) {
    const int* ix = kCubicIdx[t];
    std::ostringstream os;
    os << ":Q" << ix[0] << ix[1] << " Q" << ix[2] << ix[3] << " Q" << ix[4] << ix[5] << ":";
    terms.push_back({os.str(), Rat(-kCubicSigns[t]),
                     h3.wick({build_Q(h3, ix[0], ix[1]), build_Q(h3, ix[2], ix[3]),
                              build_Q(h3, ix[4], ix[5])}),
                     false});
  }
  for (const auto& [c, s] : kPairTerms)
    terms.push_back({pair_label(s), rat_parse(c),
                     h3.wick({build_Q(h3, s[0], s[1]).derivative(s[2]),
                              build_Q(h3, s[3], s[4]).derivative(s[5])}),
                     true});
  for (const auto& [c, s] : kSingleTerms)
    terms.push_back(
        {single_label(s), rat_parse(c), build_Q(h3, s[0], s[1]).derivative(s[2]), true});
  return terms;
}

}  // namespace

DecouplingReport verify_decoupling_wt12(const Engine& h3, bool solve_if_nonzero,
                                        const std::map<std::string, Rat>* overrides) {
  DecouplingReport rep;
  rep.dim12_formula = pbw_dimension(h3.pres(), Rat(12));
  rep.dim12_enumerated = Int(pbw_basis(h3.pres(), Rat(12)).size());
  if (rep.dim12_formula != rep.dim12_enumerated)
    throw algebra_error("weight-12 dimension self-check failed");

  rep.terms = relation_terms(h3);
  if (overrides)
    for (auto& t : rep.terms) {
      auto it = overrides->find(t.label);
      if (it != overrides->end()) t.coefficient = it->second;
    }
  for (const auto& t : rep.terms)
    if (t.label == "D0Q0,10") rep.q010_coefficient = t.coefficient;

  State total;
  std::vector<State> correction_states;
  State head;
  for (const auto& t : rep.terms) {
    State s = h3.state_of(t.field);
    total += Scalar(t.coefficient) * s;
    if (t.correction)
      correction_states.push_back(std::move(s));
    else
      head += Scalar(t.coefficient) * s;
  }
  rep.residual = total;
  rep.zero = total.is_zero();
  if (rep.zero || !solve_if_nonzero) return rep;

  // re-solve the correction coefficients exactly: head + sum x_i v_i = 0
  auto basis = pbw_basis(h3.pres(), Rat(12));
  std::map<BasisWord, size_t> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  size_t n = correction_states.size();
  // column echelon with shadows over the correction vectors + rhs
  std::map<size_t, std::pair<std::map<size_t, Scalar>, std::vector<Scalar>>> rows;
  auto reduce = [&](std::map<size_t, Scalar> v, std::vector<Scalar> sh)
      -> std::pair<std::map<size_t, Scalar>, std::vector<Scalar>> {
    while (!v.empty()) {
      auto it = rows.find(v.begin()->first);
      if (it == rows.end()) break;
      Scalar f = v.begin()->second / it->second.first.begin()->second;
      for (const auto& [k, x] : it->second.first) {
        auto vit = v.find(k);
        Scalar nv = (vit == v.end() ? Scalar() : vit->second) - f * x;
        if (nv.is_zero())
          v.erase(k);
        else
          v[k] = std::move(nv);
      }
      for (size_t k = 0; k <= n; ++k) sh[k] = sh[k] - f * it->second.second[k];
    }
    return {std::move(v), std::move(sh)};
  };
  auto coords = [&](const State& s) {
    std::map<size_t, Scalar> v;
    for (const auto& [w, c] : s.coords()) v[index.at(w)] = c;
    return v;
  };
  for (size_t i = 0; i < n; ++i) {
    std::vector<Scalar> sh(n + 1);
    sh[i] = Scalar(1);
    auto [v, s] = reduce(coords(correction_states[i]), std::move(sh));
    if (v.empty()) continue;
    size_t lead = v.begin()->first;
    rows[lead] = {std::move(v), std::move(s)};
  }
  std::vector<Scalar> sh(n + 1);
  sh[n] = Scalar(1);
  auto [v, s] = reduce(coords(head), std::move(sh));
  if (v.empty()) {
    // 0 = sum_i s_i corr_i + s_n head, so head + sum (s_i / s_n) corr_i = 0
    std::vector<std::pair<std::string, Rat>> solved;
    size_t ci = 0;
    for (const auto& t : rep.terms) {
      if (!t.correction) continue;
      Scalar x = s[ci] / s[n];
      solved.push_back({t.label, x.rational()});
      ++ci;
    }
    rep.solved_corrections = std::move(solved);
  }
  return rep;
}

State decoupling_with_coefficient(const Engine& h3, const std::string& label,
                                  const Rat& coeff) {
  State total;
  bool found = false;
  for (const auto& t : relation_terms(h3)) {
    Rat c = t.coefficient;
    if (t.label == label) {
      c = coeff;
      found = true;
    }
    total += Scalar(c) * h3.state_of(t.field);
  }
  if (!found) throw algebra_error("no decoupling term labelled " + label);
  return total;
}

bool decoupling_symbol_matches_classical(const Engine& h3) {
  SymbolRing ring(h3.pres(), 12);
  auto q = [&](unsigned i, unsigned j) { return ring.symbol(build_Q(h3, i, j)); };
  auto c012 = ring.symbol(build_C(h3, 0, 1, 2));
  Poly det = q(0, 0) * q(1, 1) * q(2, 2) - q(0, 0) * q(1, 2) * q(1, 2) -
             q(0, 1) * q(0, 1) * q(2, 2) - q(0, 2) * q(1, 1) * q(0, 2) +
             q(0, 1) * q(0, 2) * q(1, 2) + q(0, 2) * q(1, 2) * q(0, 1);

  // the Gram identity itself: c_{012}^2 = det(q) in the commutative letters
  if (!(c012 * c012 == det)) return false;

  // symbols of the quantum head terms factor through the classical generators
  Poly head(ring.pool(), Rat(0));
  Poly classical(ring.pool(), Rat(0));
  for (const auto& t : relation_terms(h3)) {
    if (t.correction) continue;
    head = head + ring.symbol(t.field).mul_rat(t.coefficient);
  }
  classical = c012 * c012 - det;  // identically zero
  if (!(head == classical)) return false;
  // nontrivially: the symbol of :C012 C012: alone is the square of the symbol
  Poly cc = ring.symbol(h3.wick({build_C(h3, 0, 1, 2), build_C(h3, 0, 1, 2)}));
  return cc == c012 * c012;
}

}  // namespace vc::orb
