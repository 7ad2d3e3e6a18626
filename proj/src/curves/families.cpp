#include "curves/families.hpp"

namespace vc::curves {

namespace {

struct FamilySpec {
  const char* id;
  const char* map_name;
  const char* curve_name;
  long n_min;
  Rat (*k1)(long n);
  Rat (*k2)(long n);
  // optional listed intersection point as a function of n
  bool has_point;
  Rat (*pc)(long n);
  Rat (*pl)(long n);
};

Rat R(long a, long b = 1) {
  Rat r(a, b);
  r.canonicalize();
  return r;
}

Rat safe_div(const Rat& num, const Rat& den) {
  if (den == 0) throw curve_error("listed point degenerates (zero denominator)");
  return num / den;
}

// sp-type coincidences of the k2 = 2 family
Rat f1_k1(long n) { return R(-4 * n, 1 + 2 * n); }
Rat f1_k2(long n) { return R(-2 * (3 + 4 * n), 1 + 2 * n); }
Rat f1_c(long n) { return R(-3 * n * (3 + 4 * n), 2 * (1 + n)); }
Rat f1_l(long n) {
  Rat num = R(-2 * (1 + n)) *
            R(-164 - 751 * n - 746 * n * n + 516 * n * n * n + 720 * n * n * n * n);
  Rat den = R(7 * (2 + 3 * n)) * R(1 + 4 * n) * R(17 + 26 * n + 12 * n * n) *
            R(-44 + n + 60 * n * n);
  return safe_div(num, den);
}
Rat f2_k1(long n) { return R(3 - 2 * n, n); }
Rat f2_k2(long n) { return R(-(3 + 4 * n), n); }
Rat f2_c(long n) { return R(-(2 * n - 3) * (3 + 4 * n), 2 * (3 + 2 * n)); }
Rat f2_l(long n) {
  Rat num = R(-2 * (3 + 2 * n)) *
            R(99 + 132 * n - 880 * n * n - 616 * n * n * n + 160 * n * n * n * n);
  Rat den = R(7 * (1 + 2 * n)) * R(-3 + 4 * n) * R(21 + 14 * n + 4 * n * n) *
            R(-177 - 118 * n + 40 * n * n);
  return safe_div(num, den);
}
Rat f3_k1(long n) { return R(-4 * n); }
Rat f3_k2(long n) { return R(4 * n - 6); }
Rat f3_c(long n) { return R(3 * n * (2 * n - 3), 2 * (n - 1) * (2 * n - 1)); }
Rat f3_l(long n) {
  Rat num = R(-2 * (n - 1)) * R(2 * n - 1) *
            R(-164 + 561 * n - 176 * n * n - 264 * n * n * n + 88 * n * n * n * n);
  Rat den = R(7 * (n - 2)) * R(1 + 2 * n) * R(17 - 42 * n + 28 * n * n) *
            R(44 - 177 * n + 118 * n * n);
  return safe_div(num, den);
}

// so-type coincidences of the k2 = 2 family (no listed points)
Rat so2_k1(long n) { return R(-8 * n, 2 * n - 1); }
Rat so2_k2(long n) { return R(-2 * (2 * n - 3), 2 * n - 1); }

// sp-type coincidences of the k2 = -1/2 family
Rat h1_k1(long n) { return R(1 - 4 * n, 2 * n); }
Rat h1_k2(long n) { return R(-(1 + 3 * n), 2 * n); }
Rat h2_k1(long n) { return R(n); }
Rat h2_k2(long n) { return R(-(7 + 2 * n), 2); }
Rat h3_k1(long n) { return R(-4 * n, 1 + 2 * n); }
Rat h3_k2(long n) { return R(-(7 + 6 * n), 2 * (1 + 2 * n)); }

// so-type coincidences of the k2 = -1/2 family
Rat hso_k1(long n) { return R(-3 * n, 2 * n - 1); }
Rat hso_k2(long n) { return R(7 - 8 * n, 2 * (2 * n - 1)); }

const FamilySpec kFamilies[] = {
    {"k2-sp-1", "k2", "p2", 2, f1_k1, f1_k2, true, f1_c, f1_l},
    {"k2-sp-2", "k2", "p2", 2, f2_k1, f2_k2, true, f2_c, f2_l},
    {"k2-sp-3", "k2", "p2", 2, f3_k1, f3_k2, true, f3_c, f3_l},
    {"k2-so", "k2", "p2", 3, so2_k1, so2_k2, false, nullptr, nullptr},
    {"kh-sp-1", "kh", "p3", 2, h1_k1, h1_k2, false, nullptr, nullptr},
    {"kh-sp-2", "kh", "p3", 2, h2_k1, h2_k2, false, nullptr, nullptr},
    {"kh-sp-3", "kh", "p3", 2, h3_k1, h3_k2, false, nullptr, nullptr},
    {"kh-so", "kh", "p3", 3, hso_k1, hso_k2, false, nullptr, nullptr},
};

}  // namespace

std::vector<std::string> family_ids() {
  std::vector<std::string> out;
  for (const auto& f : kFamilies) out.push_back(f.id);
  return out;
}

FamilyReport coincidence_family_check(const std::string& family_id, long n_lo,
                                      long n_hi) {
  const FamilySpec* spec = nullptr;
  for (const auto& f : kFamilies)
    if (family_id == f.id) spec = &f;
  if (!spec) throw curve_error("unknown coincidence family: " + family_id);

  FamilyReport rep;
  rep.id = family_id;
  rep.notes.push_back("internal-consistency check only; companion truncation curves "
                      "from other constructions are not bundled");
  const RationalMap& mp = param(spec->map_name);
  const BivarPoly& cv = curve(spec->curve_name);
  for (long n = std::max(n_lo, spec->n_min); n <= n_hi; ++n) {
    FamilyItem item;
    item.n = n;
    Rat k1 = spec->k1(n), k2 = spec->k2(n);
    if (mp.has_pole(k1) || mp.has_pole(k2)) {
      item.pole_excluded = true;
      item.note = "excluded: k-value on a pole of the parametrization (degenerate "
                  "member, as in the classification)";
      rep.items.push_back(item);
      continue;
    }
    auto p1 = mp.eval(k1), p2 = mp.eval(k2);
    item.pair_equal = p1 == p2;
    item.on_curve = cv.eval(p1.first, p1.second) == 0;
    if (spec->has_point) {
      // the listed point can itself degenerate at small n
      bool ok = true;
      try {
        Rat pc = spec->pc(n), pl = spec->pl(n);
        item.explicit_match = p1.first == pc && p1.second == pl;
      } catch (const std::exception&) {
        ok = false;
        item.note = "listed point degenerates at this n";
      }
      if (!ok) item.explicit_match = true;
    }
    if (!item.pair_equal || !item.on_curve || !item.explicit_match) rep.pass = false;
    rep.items.push_back(item);
  }
  return rep;
}

}  // namespace vc::curves
