#include "va/algebra.hpp"

#include "embedded_presets.hpp"

#include <algorithm>
#include <functional>
#include <cctype>
#include <sstream>

namespace vc::va {

uint32_t Presentation::gen_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw algebra_error("unknown generator: " + name);
  return it->second;
}

Rat Presentation::word_weight(const Word& w) const {
  Rat s(0);
  for (const auto& l : w) s += weight(l.gen) + l.deriv;
  return s;
}

int Presentation::word_parity(const Word& w) const {
  int p = 0;
  for (const auto& l : w) p ^= odd(l.gen) ? 1 : 0;
  return p;
}

Presentation::Presentation(std::string name, Kind kind, std::vector<std::string> params,
                           std::vector<GenSpec> gens,
                           std::map<std::pair<uint32_t, uint32_t>, PoleExpansion> opes)
    : name_(std::move(name)),
      kind_(kind),
      params_(std::make_shared<VarPool>(std::move(params))),
      gens_(std::move(gens)) {
  for (uint32_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name == "D") throw algebra_error("generator name D is reserved");
    if (params_->find(gens_[i].name))
      throw algebra_error("generator name collides with parameter: " + gens_[i].name);
    if (!index_.emplace(gens_[i].name, i).second)
      throw algebra_error("duplicate generator: " + gens_[i].name);
    if (gens_[i].weight <= 0 || gens_[i].weight.get_den() > 2)
      throw algebra_error("generator weight must be positive with denominator 1 or 2");
  }
  validate(opes);
  complete_table(std::move(opes));
}

void Presentation::validate(
    const std::map<std::pair<uint32_t, uint32_t>, PoleExpansion>& opes) {
  for (const auto& [pair, pe] : opes) {
    auto [a, b] = pair;
    if (a >= gens_.size() || b >= gens_.size()) throw algebra_error("bad ope pair");
    int pp = (odd(a) ? 1 : 0) ^ (odd(b) ? 1 : 0);
    for (const auto& [pole, f] : pe.poles) {
      if (pole < 1) throw algebra_error("pole orders start at 1");
      Rat expect = weight(a) + weight(b) - pole;
      for (const auto& [word, c] : f.terms()) {
        for (const auto& l : word)
          if (l.gen >= gens_.size()) throw algebra_error("ope references unknown generator");
        if (word_weight(word) != expect)
          throw algebra_error("inhomogeneous pole coefficient in " + gens_[a].name + " " +
                              gens_[b].name + " pole " + std::to_string(pole));
        if (word_parity(word) != pp)
          throw algebra_error("parity mismatch in ope of " + gens_[a].name + " " +
                              gens_[b].name);
        if (kind_ == Kind::FreeField && word.size() > 1)
          throw algebra_error("free-field presentation with nonlinear pole coefficient");
      }
    }
  }
}

namespace {

PoleExpansion skew_reverse(const PoleExpansion& ab, bool both_odd) {
  // b_(n) a = (-1)^{|a||b|} sum_{j>=0} (-1)^{n+j+1} (1/j!) D^j (a_(n+j) b)
  PoleExpansion ba;
  int maxp = ab.max_pole();
  for (int p = 1; p <= maxp; ++p) {
    long n = p - 1;
    FieldExpr acc;
    for (int j = 0; p + j <= maxp; ++j) {
      const FieldExpr* coeff = ab.pole(p + j);
      if (!coeff) continue;
      Rat c(1);
      c /= Rat(factorial(j));
      if ((n + j + 1) % 2) c = -c;
      acc += Scalar(c) * coeff->derivative(j);
    }
    if (both_odd) acc = -acc;
    if (!acc.is_zero()) ba.poles[p] = std::move(acc);
  }
  return ba;
}

}  // namespace

void Presentation::complete_table(
    std::map<std::pair<uint32_t, uint32_t>, PoleExpansion> opes) {
  size_t n = gens_.size();
  table_.assign(n * n, PoleExpansion{});
  for (auto& [pair, pe] : opes) table_[pair.first * n + pair.second] = pe;
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) {
      if (opes.count({a, b}) && !opes.count({b, a}))
        table_[b * n + a] = skew_reverse(table_[a * n + b], odd(a) && odd(b));
    }
}

Presentation Presentation::specialize(const std::vector<Rat>& values) const {
  if (values.size() != params_->size())
    throw algebra_error("specialize: expected " + std::to_string(params_->size()) +
                        " parameter values");
  std::map<std::pair<uint32_t, uint32_t>, PoleExpansion> opes;
  size_t n = gens_.size();
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) {
      const PoleExpansion& pe = table_[a * n + b];
      if (pe.poles.empty()) continue;
      PoleExpansion spec;
      for (const auto& [pole, f] : pe.poles) {
        std::vector<std::pair<Word, Scalar>> terms;
        for (const auto& [w, c] : f.terms()) terms.push_back({w, c.eval(values)});
        FieldExpr g = FieldExpr::from_terms(std::move(terms));
        if (!g.is_zero()) spec.poles[pole] = std::move(g);
      }
      opes[{a, b}] = std::move(spec);
    }
  std::ostringstream nm;
  nm << name_ << "(";
  for (size_t i = 0; i < values.size(); ++i)
    nm << (i ? "," : "") << params_->name(i) << "=" << rat_str(values[i]);
  nm << ")";
  return Presentation(nm.str(), kind_, {}, gens_, std::move(opes));
}

Presentation Presentation::perturbed(const std::string& a, const std::string& b,
                                     int pole, const FieldExpr& replacement) const {
  uint32_t ia = gen_index(a), ib = gen_index(b);
  std::map<std::pair<uint32_t, uint32_t>, PoleExpansion> opes;
  size_t n = gens_.size();
  // keep only one orientation per unordered pair so the skew completion
  // propagates the perturbation consistently
  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t y = x; y < n; ++y) {
      const PoleExpansion& pe = table_[x * n + y];
      if (!pe.poles.empty())
        opes[{x, y}] = pe;
      else if (x != y && !table_[y * n + x].poles.empty())
        opes[{y, x}] = table_[y * n + x];
    }
  auto key = opes.count({ia, ib}) ? std::pair<uint32_t, uint32_t>{ia, ib}
                                  : std::pair<uint32_t, uint32_t>{ib, ia};
  PoleExpansion& target = opes[key];
  if (key != std::pair<uint32_t, uint32_t>{ia, ib})
    throw algebra_error("perturbed: stored orientation is " + b + " " + a);
  if (replacement.is_zero())
    target.poles.erase(pole);
  else
    target.poles[pole] = replacement;
  std::vector<std::string> pnames;
  for (size_t i = 0; i < params_->size(); ++i) pnames.push_back(params_->name(i));
  return Presentation(name_ + "*", kind_, std::move(pnames), gens_, std::move(opes));
}

// ---- parser ---------------------------------------------------------------

namespace {

struct Tok {
  enum Type { Ident, Number, Punct, End } type;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}
  const Tok& peek() {
    if (!cur_) cur_ = lex();
    return *cur_;
  }
  Tok next() {
    Tok t = peek();
    cur_.reset();
    return t;
  }
  bool accept(const std::string& punct) {
    if (peek().type == Tok::Punct && peek().text == punct) {
      next();
      return true;
    }
    return false;
  }
  void expect(const std::string& punct) {
    if (!accept(punct)) throw parse_error("expected '" + punct + "' near '" + peek().text + "'");
  }

 private:
  std::string s_;
  size_t i_ = 0;
  std::optional<Tok> cur_;

  Tok lex() {
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
        continue;
      }
      if (isspace(static_cast<unsigned char>(c))) {
        ++i_;
        continue;
      }
      if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t j = i_;
        while (j < s_.size() && (isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
          ++j;
        Tok t{Tok::Ident, s_.substr(i_, j - i_)};
        i_ = j;
        return t;
      }
      if (isdigit(static_cast<unsigned char>(c))) {
        size_t j = i_;
        while (j < s_.size() && isdigit(static_cast<unsigned char>(s_[j]))) ++j;
        Tok t{Tok::Number, s_.substr(i_, j - i_)};
        i_ = j;
        return t;
      }
      ++i_;
      return Tok{Tok::Punct, std::string(1, c)};
    }
    return Tok{Tok::End, ""};
  }
};

// Field-expression values: every value is a FieldExpr; pure scalars are
// multiples of the identity word.
class FieldParser {
 public:
  FieldParser(Lexer& lx, VarPoolPtr pool,
              std::function<std::optional<uint32_t>(const std::string&)> genidx)
      : lx_(lx), pool_(std::move(pool)), genidx_(std::move(genidx)) {}

  FieldExpr expr() {
    FieldExpr v = term();
    while (true) {
      if (lx_.accept("+"))
        v += term();
      else if (lx_.accept("-"))
        v += -term();
      else
        return v;
    }
  }

 private:
  Lexer& lx_;
  VarPoolPtr pool_;
  std::function<std::optional<uint32_t>(const std::string&)> genidx_;

  static std::optional<Scalar> as_scalar(const FieldExpr& f) {
    if (f.is_zero()) return Scalar(0);
    if (f.terms().size() == 1 && f.terms()[0].first.empty()) return f.terms()[0].second;
    return std::nullopt;
  }

  FieldExpr term() {
    bool neg = false;
    while (lx_.accept("-")) neg = !neg;
    FieldExpr v = power();
    while (true) {
      if (lx_.accept("*")) {
        FieldExpr r = power();
        auto sl = as_scalar(v), sr = as_scalar(r);
        if (sr)
          v = *sr * v;
        else if (sl)
          v = *sl * r;
        else
          throw parse_error("product of two non-scalar fields needs :...:");
      } else if (lx_.accept("/")) {
        FieldExpr r = power();
        auto sr = as_scalar(r);
        if (!sr || sr->is_zero()) throw parse_error("division by a non-scalar or zero");
        v = (Scalar(1) / *sr) * v;
      } else
        break;
    }
    return neg ? -v : v;
  }

  FieldExpr power() {
    FieldExpr base = atom();
    if (lx_.accept("^")) {
      if (lx_.peek().type != Tok::Number) throw parse_error("expected exponent");
      unsigned e = std::stoul(lx_.next().text);
      auto s = as_scalar(base);
      if (!s) throw parse_error("^ applies to scalars only");
      return FieldExpr::identity(s->pow(e));
    }
    return base;
  }

  FieldExpr atom() {
    const Tok& t = lx_.peek();
    if (t.type == Tok::Number) return FieldExpr::identity(Scalar(rat_parse(lx_.next().text)));
    if (lx_.accept("(")) {
      FieldExpr v = expr();
      lx_.expect(")");
      return v;
    }
    if (lx_.accept(":")) {
      // flat Wick group, right-nested by convention: :a b c:
      Word w;
      Scalar c(1);
      while (!lx_.accept(":")) {
        FieldExpr f = atom();
        if (f.terms().size() != 1)
          throw parse_error("wick factors must be single monomials");
        c = c * f.terms()[0].second;
        const Word& fw = f.terms()[0].first;
        w.insert(w.end(), fw.begin(), fw.end());
      }
      return FieldExpr::monomial(std::move(w), std::move(c));
    }
    if (t.type == Tok::Ident) {
      std::string name = lx_.next().text;
      if (name == "D") {
        unsigned order = 1;
        if (lx_.accept("^")) {
          if (lx_.peek().type != Tok::Number) throw parse_error("expected derivative order");
          order = std::stoul(lx_.next().text);
        }
        return atom().derivative(order);
      }
      if (auto gi = genidx_(name)) return FieldExpr::monomial({Letter{*gi, 0}});
      if (pool_) {
        if (auto pi = pool_->find(name))
          return FieldExpr::identity(Scalar::param(pool_, *pi));
      }
      throw parse_error("unknown name: " + name);
    }
    throw parse_error("unexpected token '" + t.text + "'");
  }
};

Rat parse_weight(Lexer& lx) {
  if (lx.peek().type != Tok::Number) throw parse_error("expected weight");
  Rat num(rat_parse(lx.next().text));
  if (lx.accept("/")) {
    if (lx.peek().type != Tok::Number) throw parse_error("expected weight denominator");
    num /= rat_parse(lx.next().text);
  }
  return num;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Lexer lx(text);
  std::string name = "anonymous";
  Kind kind = Kind::StructureConstant;
  std::vector<std::string> params;
  std::vector<GenSpec> gens;
  std::map<std::string, uint32_t> gidx;
  struct RawOpe {
    std::string a, b;
    std::vector<std::pair<int, std::string>> dummy;
  };
  // first pass collects declarations; opes are parsed on the fly once all
  // generators are known, so require ope blocks after gen lines.
  std::map<std::pair<uint32_t, uint32_t>, PoleExpansion> opes;
  auto pool = std::make_shared<VarPool>(params);
  auto genidx = [&](const std::string& n) -> std::optional<uint32_t> {
    auto it = gidx.find(n);
    if (it == gidx.end()) return std::nullopt;
    return it->second;
  };

  while (lx.peek().type != Tok::End) {
    if (lx.peek().type != Tok::Ident)
      throw parse_error("expected statement, got '" + lx.peek().text + "'");
    std::string kw = lx.next().text;
    if (kw == "algebra") {
      name = lx.next().text;
    } else if (kw == "kind") {
      std::string k = lx.next().text;
      if (k == "free")
        kind = Kind::FreeField;
      else if (k == "structure")
        kind = Kind::StructureConstant;
      else
        throw parse_error("kind must be free|structure");
    } else if (kw == "params") {
      lx.expect("{");
      while (lx.peek().type == Tok::Ident) params.push_back(lx.next().text);
      lx.expect("}");
      pool = std::make_shared<VarPool>(params);
    } else if (kw == "gen") {
      GenSpec g;
      g.name = lx.next().text;
      std::string par = lx.next().text;
      if (par == "even")
        g.parity = Parity::Even;
      else if (par == "odd")
        g.parity = Parity::Odd;
      else
        throw parse_error("parity must be even|odd");
      g.weight = parse_weight(lx);
      gidx[g.name] = static_cast<uint32_t>(gens.size());
      gens.push_back(std::move(g));
    } else if (kw == "ope") {
      std::string an = lx.next().text, bn = lx.next().text;
      if (!gidx.count(an) || !gidx.count(bn))
        throw parse_error("ope references unknown generator " + an + " or " + bn);
      PoleExpansion pe;
      lx.expect("{");
      if (!lx.accept("}")) {
        while (true) {
          if (lx.peek().type != Tok::Number) throw parse_error("expected pole order");
          int pole = std::stoi(lx.next().text);
          lx.expect(":");
          FieldParser fp(lx, pool, genidx);
          FieldExpr f = fp.expr();
          if (!f.is_zero()) pe.poles[pole] = std::move(f);
          if (lx.accept(",")) continue;
          lx.expect("}");
          break;
        }
      }
      opes[{gidx[an], gidx[bn]}] = std::move(pe);
    } else {
      throw parse_error("unknown statement: " + kw);
    }
  }
  return Presentation(name, kind, params, gens, std::move(opes));
}

FieldExpr parse_field(const Presentation& P, const std::string& text) {
  Lexer lx(text);
  auto genidx = [&](const std::string& n) -> std::optional<uint32_t> {
    auto it = std::optional<uint32_t>{};
    try {
      it = P.gen_index(n);
    } catch (const algebra_error&) {
      return std::nullopt;
    }
    return it;
  };
  FieldParser fp(lx, P.params(), genidx);
  FieldExpr f = fp.expr();
  if (lx.peek().type != Tok::End)
    throw parse_error("trailing input in field expression: '" + lx.peek().text + "'");
  return f;
}

// ---- bundled families -------------------------------------------------

namespace {

Presentation diagonal_free(const std::string& name, const std::string& stem, unsigned n,
                           Parity parity, const Rat& weight, int pole, const Rat& value) {
  std::vector<GenSpec> gens;
  std::map<std::pair<uint32_t, uint32_t>, PoleExpansion> opes;
  for (unsigned i = 1; i <= n; ++i)
    gens.push_back({stem + std::to_string(i), parity, weight});
  for (uint32_t i = 0; i < n; ++i) {
    PoleExpansion pe;
    pe.poles[pole] = FieldExpr::identity(Scalar(value));
    opes[{i, i}] = std::move(pe);
  }
  return Presentation(name, Kind::FreeField, {}, std::move(gens), std::move(opes));
}

}  // namespace

Presentation heisenberg(unsigned n) {
  return diagonal_free("heisenberg" + std::to_string(n), "alpha", n, Parity::Even,
                       Rat(1), 2, Rat(1));
}

Presentation free_fermion(unsigned n) {
  return diagonal_free("fermion" + std::to_string(n), "phi", n, Parity::Odd, Rat(1, 2),
                       1, Rat(1));
}

Presentation godd(unsigned s) {
  return diagonal_free("godd" + std::to_string(s), "phi", s, Parity::Odd, Rat(3, 2), 3,
                       Rat(1));
}

Presentation tfield() {
  return diagonal_free("tfield", "t", 1, Parity::Even, Rat(2), 4, Rat(1));
}

Presentation betagamma() {
  std::vector<GenSpec> gens{{"beta", Parity::Even, Rat(1, 2)},
                            {"gamma", Parity::Even, Rat(1, 2)}};
  std::map<std::pair<uint32_t, uint32_t>, PoleExpansion> opes;
  PoleExpansion pe;
  pe.poles[1] = FieldExpr::identity(Scalar(1));
  opes[{0, 1}] = std::move(pe);
  return Presentation("betagamma", Kind::FreeField, {}, std::move(gens), std::move(opes));
}

Presentation affine_sl2_pair() {
  std::ostringstream os;
  os << "algebra affine_sl2_pair\nkind structure\nparams { k1 k2 }\n";
  for (int i = 1; i <= 2; ++i)
    os << "gen e" << i << " even 1\ngen f" << i << " even 1\ngen h" << i << " even 1\n";
  for (int i = 1; i <= 2; ++i) {
    os << "ope e" << i << " f" << i << " { 2: k" << i << ", 1: h" << i << " }\n";
    os << "ope h" << i << " h" << i << " { 2: 2*k" << i << " }\n";
    os << "ope h" << i << " e" << i << " { 1: 2*e" << i << " }\n";
    os << "ope h" << i << " f" << i << " { 1: -2*f" << i << " }\n";
  }
  return parse_presentation(os.str());
}

Presentation preset(const std::string& name) {
  for (const auto& [n, text] : detail::kEmbeddedPresets)
    if (name == n) return parse_presentation(text);
  auto family = [&](const std::string& stem) -> std::optional<unsigned> {
    if (name.rfind(stem, 0) != 0) return std::nullopt;
    std::string rest = name.substr(stem.size());
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit))
      return std::nullopt;
    return std::stoul(rest);
  };
  if (auto n = family("heisenberg")) return heisenberg(*n);
  if (auto n = family("fermion")) return free_fermion(*n);
  if (auto n = family("godd")) return godd(*n);
  if (name == "tfield") return tfield();
  if (name == "betagamma") return betagamma();
  if (name == "affine-sl2-pair") return affine_sl2_pair();
  throw algebra_error("unknown preset: " + name);
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [n, text] : detail::kEmbeddedPresets) out.push_back(n);
  out.insert(out.end(), {"heisenberg<n>", "fermion<n>", "godd<s>", "tfield",
                         "betagamma", "affine-sl2-pair"});
  return out;
}

}  // namespace vc::va
