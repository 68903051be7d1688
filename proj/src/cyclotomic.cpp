#include "qrep/cyclotomic.hpp"

#include <sstream>

#include "qrep/errors.hpp"

namespace qrep {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("cyclotomic coefficient overflow");
  return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("cyclotomic coefficient overflow");
  return r;
}

// Exact quotient of `num` by a monic `den`; the remainder must vanish.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw Error("cyclotomic division: degree too small");
  std::vector<std::int64_t> quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const std::int64_t lead = num[i];
    quot[i - dd] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] = add_checked(num[i - dd + j], -mul_checked(lead, den[j]));
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (num[i] != 0) throw Error("cyclotomic division left a remainder");
  }
  return quot;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
  if (n <= 0) throw PreconditionError("cyclotomic order must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_exact(poly, cyclotomic_polynomial(d));
  }
  return poly;
}

CyclotomicRing::CyclotomicRing(int n) : n_(n), phi_(cyclotomic_polynomial(n)) {}

std::vector<std::int64_t> CyclotomicRing::reduce(std::vector<std::int64_t> poly) const {
  const std::size_t deg = phi_.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    const std::int64_t lead = poly[i];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) {
      poly[i - deg + j] = add_checked(poly[i - deg + j], -mul_checked(lead, phi_[j]));
    }
  }
  poly.resize(deg, 0);
  return poly;
}

CyclotomicInteger::CyclotomicInteger(std::shared_ptr<const CyclotomicRing> ring, std::vector<std::int64_t> coeffs)
    : ring_(std::move(ring)), c_(ring_->reduce(std::move(coeffs))) {}

CyclotomicInteger CyclotomicInteger::zero(std::shared_ptr<const CyclotomicRing> ring) { return {std::move(ring), {}}; }

CyclotomicInteger CyclotomicInteger::one(std::shared_ptr<const CyclotomicRing> ring) { return {std::move(ring), {1}}; }

CyclotomicInteger CyclotomicInteger::root_power(std::shared_ptr<const CyclotomicRing> ring, std::int64_t e) {
  const std::int64_t n = ring->order();
  const std::int64_t r = ((e % n) + n) % n;
  std::vector<std::int64_t> poly(static_cast<std::size_t>(r) + 1, 0);
  poly[static_cast<std::size_t>(r)] = 1;
  return {std::move(ring), std::move(poly)};
}

bool CyclotomicInteger::is_zero() const {
  for (std::int64_t x : c_) {
    if (x != 0) return false;
  }
  return true;
}

CyclotomicInteger operator+(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  std::vector<std::int64_t> out(a.c_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = add_checked(a.c_[i], b.c_[i]);
  return {a.ring_, std::move(out)};
}

CyclotomicInteger CyclotomicInteger::operator-() const {
  std::vector<std::int64_t> out(c_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mul_checked(c_[i], -1);
  return {ring_, std::move(out)};
}

CyclotomicInteger operator-(const CyclotomicInteger& a, const CyclotomicInteger& b) { return a + (-b); }

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  if (a.c_.empty()) return a;
  std::vector<std::int64_t> prod(2 * a.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      prod[i + j] = add_checked(prod[i + j], mul_checked(a.c_[i], b.c_[j]));
    }
  }
  return {a.ring_, std::move(prod)};
}

std::string CyclotomicInteger::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    const std::int64_t mag = c_[i] < 0 ? -c_[i] : c_[i];
    if (i == 0 || mag != 1) os << mag;
    if (i > 0) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return first ? "0" : os.str();
}

CycloMat2 CycloMat2::identity(const std::shared_ptr<const CyclotomicRing>& ring) {
  const auto z = CyclotomicInteger::zero(ring);
  const auto o = CyclotomicInteger::one(ring);
  return {{o, z, z, o}};
}

CycloMat2 operator*(const CycloMat2& a, const CycloMat2& b) {
  return {{a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
           a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
}

std::vector<std::int64_t> CycloMat2::key() const {
  std::vector<std::int64_t> out;
  for (const auto& x : e) out.insert(out.end(), x.coeffs().begin(), x.coeffs().end());
  return out;
}

}  // namespace qrep
