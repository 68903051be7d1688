#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qrep {

/// One side of a separating curve: a subsurface of genus `genus` holding
/// `punctures` of the punctures. `labels` lists them (1-based) when punctures
/// are distinguishable and is empty otherwise.
struct CurveSide {
  int genus;
  int punctures;
  std::vector<int> labels;

  friend auto operator<=>(const CurveSide&, const CurveSide&) = default;
};

/// Mapping class group orbit of an essential simple closed curve, named by the
/// topology of its complement. Separating types store the smaller side first.
struct CurveType {
  enum class Kind { NonSeparating, Separating };
  Kind kind;
  CurveSide side1;
  CurveSide side2;

  std::string to_string() const;
  friend bool operator==(const CurveType&, const CurveType&) = default;
};

/// Number of orbits on the genus-g surface with n punctures. With `labeled`
/// the punctures may not be permuted. Counted in closed form, independently
/// of enumerate_orbits. Throws NonHyperbolic when 2 - 2g - n >= 0.
std::uint64_t count_orbits(int g, int n, bool labeled = false);

/// The orbits themselves: nonseparating first, then separating types sorted by
/// (side1, side2). Labeled enumeration is limited to n <= 20.
std::vector<CurveType> enumerate_orbits(int g, int n, bool labeled = false);

struct H2Bounds {
  int g;
  int n;
  std::uint64_t lower_rank;   // unlabeled orbit count
  std::uint64_t upper_bound;  // n + 1 + lower_rank
  bool upper_bound_valid;     // the upper bound is only established for g >= 4
  bool nonvanishing() const { return lower_rank >= 1; }
};

H2Bounds h2_bounds(int g, int n);

}  // namespace qrep
