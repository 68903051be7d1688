#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace qrep {

/// Z[x] / Phi_n(x), i.e. the integers of the n-th cyclotomic field with x a
/// primitive n-th root of unity. Elements are stored as coefficient vectors
/// of length phi(n), which is a canonical form.
class CyclotomicRing {
 public:
  explicit CyclotomicRing(int n);

  int order() const { return n_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  /// Coefficients of Phi_n, lowest degree first; monic.
  const std::vector<std::int64_t>& modulus() const { return phi_; }

  /// Reduces an arbitrary polynomial modulo Phi_n.
  std::vector<std::int64_t> reduce(std::vector<std::int64_t> poly) const;

 private:
  int n_;
  std::vector<std::int64_t> phi_;
};

/// Integer coefficients of the n-th cyclotomic polynomial.
std::vector<std::int64_t> cyclotomic_polynomial(int n);

class CyclotomicInteger {
 public:
  CyclotomicInteger(std::shared_ptr<const CyclotomicRing> ring, std::vector<std::int64_t> coeffs);

  static CyclotomicInteger zero(std::shared_ptr<const CyclotomicRing> ring);
  static CyclotomicInteger one(std::shared_ptr<const CyclotomicRing> ring);
  /// x^e for any integer e.
  static CyclotomicInteger root_power(std::shared_ptr<const CyclotomicRing> ring, std::int64_t e);

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  const std::shared_ptr<const CyclotomicRing>& ring() const { return ring_; }
  bool is_zero() const;

  friend CyclotomicInteger operator+(const CyclotomicInteger& a, const CyclotomicInteger& b);
  friend CyclotomicInteger operator-(const CyclotomicInteger& a, const CyclotomicInteger& b);
  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b);
  CyclotomicInteger operator-() const;
  friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  std::shared_ptr<const CyclotomicRing> ring_;
  std::vector<std::int64_t> c_;
};

/// 2x2 matrix over a cyclotomic ring, row major.
struct CycloMat2 {
  std::array<CyclotomicInteger, 4> e;

  const CyclotomicInteger& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }
  CyclotomicInteger trace() const { return e[0] + e[3]; }
  CyclotomicInteger det() const { return e[0] * e[3] - e[1] * e[2]; }

  static CycloMat2 identity(const std::shared_ptr<const CyclotomicRing>& ring);
  friend CycloMat2 operator*(const CycloMat2& a, const CycloMat2& b);
  friend bool operator==(const CycloMat2& a, const CycloMat2& b) { return a.e == b.e; }

  /// Flattened coefficients, usable as a hash key.
  std::vector<std::int64_t> key() const;
};

}  // namespace qrep
