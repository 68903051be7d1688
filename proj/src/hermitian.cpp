#include "qrep/hermitian.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "qrep/errors.hpp"

namespace qrep {

namespace {

int k_of(int p) {
  if (p % 4 != 0) throw PreconditionError("level must be divisible by 4, got " + std::to_string(p));
  const int k = p / 4;
  if (k < 4) throw PreconditionError("k = p/4 must be at least 4, got " + std::to_string(k));
  return k;
}

void check_ell(int p, std::int64_t ell) {
  if (std::gcd(ell, static_cast<std::int64_t>(2 * p)) != 1) {
    throw NonPrimitiveRoot("ell = " + std::to_string(ell) + " is not coprime to 2p = " + std::to_string(2 * p));
  }
}

void check_s(int s) {
  if (s < 0 || s > 3) throw PreconditionError("ratio index s must be in 0..3");
}

// The four quantum integers of the ratio: numerator pair, then denominator pair.
std::array<std::int64_t, 4> ratio_arguments(int s, int k) {
  return {2 * k - 4 + s, s + 1, k - 1 + s, k - 2 + s};
}

}  // namespace

std::string GramProfile::pattern() const {
  std::string out = "(";
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    if (i) out += ',';
    out += sign_char(diagonal[i]);
  }
  return out + ")";
}

Sign gram_ratio_sign(int s, int p, std::int64_t ell) {
  check_s(s);
  const int k = k_of(p);
  check_ell(p, ell);
  Sign out = Sign::Positive;
  for (std::int64_t n : ratio_arguments(s, k)) {
    const Sign q = quantum_integer_sign(n, p, ell);
    if (q == Sign::Zero) {
      throw DegenerateDenominator("[" + std::to_string(n) + "] vanishes at p = " + std::to_string(p) +
                                  ", ell = " + std::to_string(ell));
    }
    out = out * q;
  }
  return out;
}

double gram_ratio_value(int s, int p, std::int64_t ell) {
  check_s(s);
  const int k = k_of(p);
  const auto args = ratio_arguments(s, k);
  const auto q = [&](std::int64_t n) { return quantum_integer(n, p, ell).magnitude_hint; };
  return q(args[0]) * q(args[1]) / (q(args[2]) * q(args[3]));
}

GramProfile gram_profile(int p, std::int64_t ell) {
  GramProfile g{p, ell, {}, {}, 0, 0};
  g.diagonal[0] = Sign::Positive;
  for (int s = 0; s < 4; ++s) {
    g.ratios[static_cast<std::size_t>(s)] = gram_ratio_sign(s, p, ell);
    g.diagonal[static_cast<std::size_t>(s + 1)] = g.diagonal[static_cast<std::size_t>(s)] * g.ratios[static_cast<std::size_t>(s)];
  }
  for (Sign d : g.diagonal) (d == Sign::Positive ? g.n_plus : g.n_minus) += 1;
  return g;
}

double quoted_closed_form_ratio(int s, int p, std::int64_t ell) {
  const int k = k_of(p);
  const double x = std::numbers::pi * static_cast<double>(ell) / (2.0 * k);
  switch (s) {
    case 1:
      return 4.0 * std::sin(3.0 * x) * std::cos(x) * std::sin(x / 2.0);
    case 2:
      return 2.0 * std::sin(3.0 * x) * std::cos(x);
    default:
      throw PreconditionError("closed forms are quoted for s = 1 and s = 2 only");
  }
}

bool in_quoted_window(int p, std::int64_t ell) {
  const std::int64_t k = p / 4;
  return 3 * ell > 4 * k && ell < 2 * k;
}

std::optional<std::int64_t> find_indefinite_ell(int p) {
  if (p % 4 != 0) throw PreconditionError("level must be divisible by 4, got " + std::to_string(p));
  if (p / 4 < 4) return std::nullopt;
  const std::int64_t two_p = 2 * static_cast<std::int64_t>(p);
  auto indefinite = [p](std::int64_t ell) {
    if (std::gcd(ell, 2 * static_cast<std::int64_t>(p)) != 1) return false;
    try {
      return gram_profile(p, ell).indefinite();
    } catch (const DegenerateDenominator&) {
      return false;
    }
  };
  for (std::int64_t ell = 1; ell < two_p; ell += 2) {
    if (in_quoted_window(p, ell) && indefinite(ell)) return ell;
  }
  for (std::int64_t ell = 1; ell < two_p; ell += 2) {
    if (indefinite(ell)) return ell;
  }
  return std::nullopt;
}

}  // namespace qrep
