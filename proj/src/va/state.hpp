#pragma once

#include "va/algebra.hpp"

#include <map>

namespace vc::va {

/** One mode letter g_(m) of a PBW word; basis words use m < 0 only. */
struct ModeLetter {
  uint32_t gen;
  int32_t mode;
  auto operator<=>(const ModeLetter&) const = default;
};

using BasisWord = std::vector<ModeLetter>;

/** Element of the vacuum module in PBW coordinates. Words are kept in the
    canonical order: generator index ascending, then mode ascending (the most
    negative first), strictly so for odd generators. */
class State {
 public:
  State() = default;
  static State vacuum() {
    State s;
    s.c_[{}] = Scalar(1);
    return s;
  }

  bool is_zero() const { return c_.empty(); }
  const std::map<BasisWord, Scalar>& coords() const { return c_; }

  State operator+(const State& o) const;
  State operator-(const State& o) const;
  State& operator+=(const State& o);
  friend State operator*(const Scalar& c, const State& v);
  bool operator==(const State& o) const { return c_ == o.c_; }

  void add(const BasisWord& w, const Scalar& c);

  std::string str(const Presentation& P) const;

 private:
  std::map<BasisWord, Scalar> c_;
};

Rat mode_letter_weight(const Presentation& P, const ModeLetter& l);
Rat basis_word_weight(const Presentation& P, const BasisWord& w);

/** All PBW basis words of exact conformal weight w, in increasing order. */
std::vector<BasisWord> pbw_basis(const Presentation& P, const Rat& w);

/** dim of the weight-w piece from the graded product formula (independent of
    the explicit enumeration; used as a self-check). */
Int pbw_dimension(const Presentation& P, const Rat& w);

}  // namespace vc::va
