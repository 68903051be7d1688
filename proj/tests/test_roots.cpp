#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "qrep/errors.hpp"
#include "qrep/level.hpp"
#include "qrep/roots.hpp"

using namespace qrep;

namespace {

std::complex<double> as_complex(const RootOfUnity& z) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(z.exponent()) / static_cast<double>(z.order()));
}

}  // namespace

TEST(RootOfUnity, EqualityAcrossOrders) {
  EXPECT_EQ(RootOfUnity(4, 2), RootOfUnity(2, 1));
  EXPECT_EQ(RootOfUnity(6, 0), RootOfUnity::one(5));
  EXPECT_FALSE(RootOfUnity(6, 1) == RootOfUnity(3, 1));
  EXPECT_EQ(RootOfUnity(5, -1), RootOfUnity(5, 4));
}

TEST(RootOfUnity, NegationDoublesOddOrder) {
  const RootOfUnity z(5, 1);
  const RootOfUnity m = -z;
  EXPECT_EQ(m.order(), 10);
  EXPECT_EQ(m.multiplicative_order(), 10);
  EXPECT_EQ(-m, z);
  EXPECT_EQ(RootOfUnity::minus_one(14), RootOfUnity(2, 1));
  EXPECT_THROW(RootOfUnity::minus_one(7), PreconditionError);
}

TEST(RootOfUnity, ArithmeticMatchesComplexNumbers) {
  for (std::int64_t n = 1; n <= 24; ++n) {
    for (std::int64_t e = -n; e <= n; ++e) {
      const RootOfUnity a(n, e);
      const RootOfUnity b(2 * n + 1, e + 3);
      const auto prod = as_complex(a * b);
      EXPECT_NEAR(std::abs(prod - as_complex(a) * as_complex(b)), 0.0, 1e-12);
      EXPECT_NEAR(std::abs(as_complex(root_pow(a, 7)) - std::pow(as_complex(a), 7)), 0.0, 1e-9);
      EXPECT_NEAR(std::abs(as_complex(-a) + as_complex(a)), 0.0, 1e-12);
      EXPECT_EQ(a * a.inverse(), RootOfUnity::one(1));
    }
  }
}

TEST(RootOfUnity, MultiplicativeOrder) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    for (std::int64_t e = 0; e < n; ++e) {
      const RootOfUnity z(n, e);
      const std::int64_t m = z.multiplicative_order();
      EXPECT_EQ(m, n / std::gcd(n, e));
      EXPECT_TRUE(is_one(root_pow(z, m)));
    }
  }
}

TEST(RootOfUnity, RejectsBadOrder) {
  EXPECT_THROW(RootOfUnity(0, 1), PreconditionError);
  EXPECT_THROW(RootOfUnity(-3, 1), PreconditionError);
}

TEST(QuantumInteger, SignMatchesFloatFormula) {
  // Oracle: [n] = sin(2 pi n ell / p) / sin(2 pi ell / p), A = exp(pi i ell / p).
  for (std::int64_t p = 5; p <= 60; ++p) {
    for (std::int64_t ell = 1; ell < 2 * p; ell += 2) {
      if (std::gcd(ell, 2 * p) != 1) continue;
      if (sin_turn_sign(ell, p) == Sign::Zero) continue;
      for (std::int64_t n = -3; n <= 2 * p + 3; ++n) {
        const double v = std::sin(2 * std::numbers::pi * n * ell / p) / std::sin(2 * std::numbers::pi * ell / p);
        const Sign s = quantum_integer_sign(n, p, ell);
        if (std::abs(v) < 1e-9) {
          EXPECT_EQ(s, Sign::Zero) << n << " " << p << " " << ell;
        } else {
          EXPECT_EQ(to_int(s), v > 0 ? 1 : -1) << n << " " << p << " " << ell;
          EXPECT_NEAR(quantum_integer(n, p, ell).magnitude_hint, v, 1e-9);
        }
      }
    }
  }
}

TEST(QuantumInteger, SmallValues) {
  EXPECT_EQ(quantum_integer_sign(1, 7, 1), Sign::Positive);
  EXPECT_EQ(quantum_integer_sign(0, 7, 1), Sign::Zero);
  EXPECT_EQ(quantum_integer_sign(7, 7, 1), Sign::Zero);
  EXPECT_EQ(quantum_integer_sign(-1, 7, 1), Sign::Negative);
}

TEST(QuantumInteger, Errors) {
  EXPECT_THROW(quantum_integer_sign(3, 8, 2), NonPrimitiveRoot);
  // p = 4, ell = 1: sin(pi/2) is fine, but p = 2 makes the denominator vanish.
  EXPECT_THROW(quantum_integer_sign(3, 2, 1), DegenerateDenominator);
}

TEST(Twist, EigenvalueMatchesDefinition) {
  for (int p = 5; p <= 40; ++p) {
    for (int a : level_data(p).colors) {
      for (std::int64_t ell : {1, 3}) {
        if (std::gcd(ell, static_cast<std::int64_t>(2 * p)) != 1) continue;
        const std::complex<double> A = std::polar(1.0, std::numbers::pi * static_cast<double>(ell) / p);
        const std::complex<double> expected = (a % 2 ? -1.0 : 1.0) * std::pow(A, a * (a + 2));
        EXPECT_NEAR(std::abs(as_complex(twist_eigenvalue(a, p, ell)) - expected), 0.0, 1e-9);
      }
    }
  }
}

TEST(Twist, OrderDividesTwoP) {
  for (int p = 5; p <= 100; ++p) {
    for (int a : level_data(p).colors) EXPECT_EQ((2 * p) % twist_order(a, p), 0) << a << " " << p;
  }
}

TEST(Twist, RejectsColorsOutsideTheLevel) {
  EXPECT_THROW(twist_eigenvalue(1, 7), InvalidColor);
  EXPECT_THROW(twist_eigenvalue(6, 7), InvalidColor);
  EXPECT_THROW(twist_eigenvalue(7, 16), InvalidColor);
}

TEST(Level, ColorSets) {
  EXPECT_EQ(level_data(7).colors, (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(level_data(16).colors, (std::vector<int>{0, 1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(level_data(7).sum_bound(), 10);
  EXPECT_EQ(level_data(16).sum_bound(), 12);
  EXPECT_THROW(level_data(4), PreconditionError);
}
