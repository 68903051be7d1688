#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "qrep/roots.hpp"

namespace qrep {

/// Signs of the invariant Hermitian form on the five-dimensional block of the
/// once-punctured torus at level p = 4k with boundary color 2k-6. Basis
/// vector u_s has loop color k-3+s; <u_0, u_0> is normalized to be positive.
struct GramProfile {
  int p;
  std::int64_t ell;
  std::array<Sign, 4> ratios;    // sign of <u_{s+1},u_{s+1}> / <u_s,u_s>
  std::array<Sign, 5> diagonal;  // sign of <u_s,u_s>
  int n_plus;
  int n_minus;

  bool indefinite() const { return n_plus > 0 && n_minus > 0; }
  std::string pattern() const;  // e.g. "(+,+,-,+,+)"
};

/// Sign of [2k-4+s][s+1] / ([k-1+s][k-2+s]) for s in 0..3.
Sign gram_ratio_sign(int s, int p, std::int64_t ell);

/// Float value of the same ratio, for cross-checks only.
double gram_ratio_value(int s, int p, std::int64_t ell);

GramProfile gram_profile(int p, std::int64_t ell);

/// The trig products quoted alongside the ratio formula for s = 1 and s = 2:
/// 4 sin(3x) cos(x) sin(x/2) and 2 sin(3x) cos(x) with x = pi*ell/(2k).
/// They do not agree with gram_ratio_value; kept so the disagreement can be
/// measured.
double quoted_closed_form_ratio(int s, int p, std::int64_t ell);

/// True iff 4k/3 < ell < 2k.
bool in_quoted_window(int p, std::int64_t ell);

/// Smallest admissible ell giving an indefinite profile. Candidates in the
/// quoted window are tried first, then every odd ell coprime to 2p in (0, 2p).
/// Empty when k < 4 or when no candidate is indefinite.
std::optional<std::int64_t> find_indefinite_ell(int p);

}  // namespace qrep
