#include "qrep/roots.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qrep/errors.hpp"
#include "qrep/level.hpp"

namespace qrep {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t n) {
  const std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

// (a * b) mod n without intermediate overflow for |a|, |b| < 2^63.
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n) {
  __extension__ using i128 = __int128;
  const i128 prod = static_cast<i128>(mod(a, n)) * static_cast<i128>(mod(b, n));
  return static_cast<std::int64_t>(prod % n);
}

}  // namespace

char sign_char(Sign s) noexcept {
  switch (s) {
    case Sign::Positive:
      return '+';
    case Sign::Negative:
      return '-';
    case Sign::Zero:
      break;
  }
  return '0';
}

RootOfUnity::RootOfUnity(std::int64_t order, std::int64_t exponent) : order_(order), exponent_(0) {
  if (order <= 0) {
    throw PreconditionError("root of unity order must be positive, got " + std::to_string(order));
  }
  exponent_ = mod(exponent, order);
}

RootOfUnity RootOfUnity::minus_one(std::int64_t order) {
  if (order % 2 != 0) {
    throw PreconditionError("-1 is not a root of unity of odd order " + std::to_string(order));
  }
  return {order, order / 2};
}

std::int64_t RootOfUnity::multiplicative_order() const noexcept {
  return order_ / std::gcd(order_, exponent_);
}

RootOfUnity RootOfUnity::lift(std::int64_t new_order) const {
  if (new_order <= 0 || new_order % order_ != 0) {
    throw PreconditionError("cannot lift order " + std::to_string(order_) + " to " +
                            std::to_string(new_order));
  }
  return {new_order, exponent_ * (new_order / order_)};
}

RootOfUnity RootOfUnity::operator-() const {
  // -z needs an even order; double it when necessary.
  const std::int64_t n = order_ % 2 == 0 ? order_ : 2 * order_;
  const RootOfUnity z = lift(n);
  return {n, z.exponent_ + n / 2};
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  const std::int64_t n = std::lcm(a.order_, b.order_);
  return {n, a.lift(n).exponent_ + b.lift(n).exponent_};
}

bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
  const std::int64_t n = std::lcm(a.order_, b.order_);
  return a.lift(n).exponent_ == b.lift(n).exponent_;
}

std::string RootOfUnity::to_string() const {
  std::ostringstream os;
  os << "zeta_" << order_ << "^" << exponent_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RootOfUnity& z) { return os << z.to_string(); }

RootOfUnity root_pow(const RootOfUnity& z, std::int64_t m) {
  return {z.order(), mulmod(z.exponent(), m, z.order())};
}

bool is_one(const RootOfUnity& z) noexcept { return z.exponent() == 0; }

Sign sin_turn_sign(std::int64_t m, std::int64_t p) {
  const std::int64_t r = mod(m, p);
  if (r == 0 || 2 * r == p) return Sign::Zero;
  return 2 * r < p ? Sign::Positive : Sign::Negative;
}

Sign quantum_integer_sign(std::int64_t n, std::int64_t p, std::int64_t ell) {
  if (p <= 0) throw PreconditionError("level must be positive");
  if (std::gcd(ell, 2 * p) != 1) {
    throw NonPrimitiveRoot("ell = " + std::to_string(ell) + " is not coprime to 2p = " +
                           std::to_string(2 * p));
  }
  const Sign denominator = sin_turn_sign(ell, p);
  if (denominator == Sign::Zero) {
    throw DegenerateDenominator("A^2 - A^-2 vanishes at p = " + std::to_string(p));
  }
  return sin_turn_sign(mulmod(n, ell, p), p) * denominator;
}

QuantumIntegerValue quantum_integer(std::int64_t n, std::int64_t p, std::int64_t ell) {
  const Sign s = quantum_integer_sign(n, p, ell);
  const double turn = 2.0 * std::numbers::pi / static_cast<double>(p);
  const double num = std::sin(turn * static_cast<double>(mulmod(n, ell, p)));
  const double den = std::sin(turn * static_cast<double>(mod(ell, p)));
  return {n, p, ell, s, num / den};
}

RootOfUnity twist_eigenvalue(int a, int p, std::int64_t ell) {
  const LevelData level = level_data(p);
  if (!level.contains(a)) {
    throw InvalidColor("color " + std::to_string(a) + " is not a level-" + std::to_string(p) +
                       " color");
  }
  const std::int64_t order = 2 * static_cast<std::int64_t>(p);
  std::int64_t exponent = mulmod(ell, static_cast<std::int64_t>(a) * (a + 2), order);
  if (a % 2 != 0) exponent += p;
  return {order, exponent};
}

std::int64_t twist_order(int a, int p) { return twist_eigenvalue(a, p, 1).multiplicative_order(); }

}  // namespace qrep
