#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace qrep {

/// Exact sign of a real quantity.
enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
char sign_char(Sign s) noexcept;

/// The root of unity exp(2*pi*i*exponent/order).
///
/// The pair (order, exponent) is kept as given: exponents are reduced modulo
/// the order but never divided through by gcd(exponent, order). Comparison
/// lifts both operands to the lcm of their orders.
class RootOfUnity {
 public:
  RootOfUnity(std::int64_t order, std::int64_t exponent);

  static RootOfUnity one(std::int64_t order) { return {order, 0}; }
  static RootOfUnity minus_one(std::int64_t order);

  std::int64_t order() const noexcept { return order_; }
  std::int64_t exponent() const noexcept { return exponent_; }

  /// Smallest m > 0 with value^m = 1.
  std::int64_t multiplicative_order() const noexcept;

  /// Same value expressed at a multiple of the current order.
  RootOfUnity lift(std::int64_t new_order) const;

  RootOfUnity inverse() const { return {order_, -exponent_}; }
  RootOfUnity operator-() const;

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b);

  std::string to_string() const;

 private:
  std::int64_t order_;
  std::int64_t exponent_;
};

std::ostream& operator<<(std::ostream& os, const RootOfUnity& z);

RootOfUnity root_pow(const RootOfUnity& z, std::int64_t m);
bool is_one(const RootOfUnity& z) noexcept;

/// Quantum integer [n] = (A^{2n} - A^{-2n}) / (A^2 - A^{-2}) at
/// A = exp(pi*i*ell/p). The sign is exact; magnitude_hint is a float
/// evaluation kept for display and cross-checks only.
struct QuantumIntegerValue {
  std::int64_t n;
  std::int64_t level;
  std::int64_t ell;
  Sign sign;
  double magnitude_hint;
};

/// Sign of sin(2*pi*m/p) decided from the residue of m modulo p.
Sign sin_turn_sign(std::int64_t m, std::int64_t p);

Sign quantum_integer_sign(std::int64_t n, std::int64_t p, std::int64_t ell);
QuantumIntegerValue quantum_integer(std::int64_t n, std::int64_t p, std::int64_t ell);

/// Eigenvalue (-1)^a A^{a(a+2)} of a Dehn twist on the basis vector whose
/// twisted curve carries color a, with A = zeta_{2p}^{ell}. The sign of odd
/// colors is folded in as zeta_{2p}^{p}.
RootOfUnity twist_eigenvalue(int a, int p, std::int64_t ell = 1);

/// Multiplicative order of twist_eigenvalue(a, p, 1); always divides 2p.
std::int64_t twist_order(int a, int p);

}  // namespace qrep
