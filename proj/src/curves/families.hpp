#pragma once

#include "curves/curves.hpp"

namespace vc::curves {

struct FamilyItem {
  long n;
  bool pole_excluded = false;   // one of the k-values sits on a map pole
  bool pair_equal = false;      // both k-values map to the same (c, lambda)
  bool on_curve = false;        // the mapped point lies on the family's curve
  bool explicit_match = true;   // matches the listed (c(n), lambda(n)) when given
  std::string note;
};

struct FamilyReport {
  std::string id;
  bool pass = true;  // every non-excluded item checks out
  std::vector<FamilyItem> items;
  std::vector<std::string> notes;
};

/** Internal-consistency checks of the listed coincidence families: both
    k-values of a family map to one point, the point sits on the named curve,
    and the n-parametrized points from the classification proof are matched
    where the text lists them.  External truncation-curve data from other
    papers is not evaluated. */
FamilyReport coincidence_family_check(const std::string& family_id, long n_lo,
                                      long n_hi);

std::vector<std::string> family_ids();

}  // namespace vc::curves
