#include "qrep/orbits.hpp"

#include <algorithm>
#include <tuple>

#include "qrep/errors.hpp"

namespace qrep {

namespace {

void check_hyperbolic(int g, int n) {
  if (g < 0 || n < 0) throw PreconditionError("genus and puncture count must be nonnegative");
  if (2 - 2 * static_cast<std::int64_t>(g) - n >= 0) {
    throw NonHyperbolic("surface of genus " + std::to_string(g) + " with " + std::to_string(n) +
                        " punctures is not hyperbolic");
  }
}

// A side must not be a disk or a once-punctured disk.
bool essential_side(int genus, int punctures) { return genus > 0 || punctures >= 2; }

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __extension__ using u128 = unsigned __int128;
  u128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > UINT64_MAX) throw ArithmeticOverflow("binomial coefficient overflow");
  }
  return static_cast<std::uint64_t>(r);
}

std::string side_string(const CurveSide& s) {
  std::string out = "g" + std::to_string(s.genus);
  if (s.labels.empty()) return out + ",n" + std::to_string(s.punctures);
  out += ",{";
  for (std::size_t i = 0; i < s.labels.size(); ++i) out += (i ? "," : "") + std::to_string(s.labels[i]);
  return out + "}";
}

}  // namespace

std::string CurveType::to_string() const {
  if (kind == Kind::NonSeparating) return "nonseparating";
  return "separating(" + side_string(side1) + " | " + side_string(side2) + ")";
}

std::uint64_t count_orbits(int g, int n, bool labeled) {
  check_hyperbolic(g, n);
  // Ordered pairs of sides, then halve; a pair is fixed by the swap only when
  // both sides coincide.
  std::uint64_t ordered = 0;
  std::uint64_t fixed = 0;
  for (int g1 = 0; g1 <= g; ++g1) {
    for (int a = 0; a <= n; ++a) {
      if (!essential_side(g1, a) || !essential_side(g - g1, n - a)) continue;
      const std::uint64_t ways = labeled ? binomial(n, a) : 1;
      ordered += ways;
      if (2 * g1 == g && (labeled ? n == 0 : 2 * a == n)) fixed += ways;
    }
  }
  return (g >= 1 ? 1 : 0) + (ordered + fixed) / 2;
}

std::vector<CurveType> enumerate_orbits(int g, int n, bool labeled) {
  check_hyperbolic(g, n);
  if (labeled && n > 20) throw PreconditionError("labeled enumeration is limited to 20 punctures");
  std::vector<CurveType> separating;
  for (int g1 = 0; g1 <= g; ++g1) {
    if (labeled) {
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        CurveSide a{g1, 0, {}};
        CurveSide b{g - g1, 0, {}};
        for (int i = 0; i < n; ++i) ((mask >> i) & 1u ? a : b).labels.push_back(i + 1);
        a.punctures = static_cast<int>(a.labels.size());
        b.punctures = static_cast<int>(b.labels.size());
        if (!essential_side(a.genus, a.punctures) || !essential_side(b.genus, b.punctures)) continue;
        if (b < a) continue;
        separating.push_back({CurveType::Kind::Separating, std::move(a), std::move(b)});
      }
    } else {
      for (int k = 0; k <= n; ++k) {
        CurveSide a{g1, k, {}};
        CurveSide b{g - g1, n - k, {}};
        if (!essential_side(a.genus, a.punctures) || !essential_side(b.genus, b.punctures)) continue;
        if (b < a) continue;
        separating.push_back({CurveType::Kind::Separating, a, b});
      }
    }
  }
  std::sort(separating.begin(), separating.end(), [](const CurveType& x, const CurveType& y) {
    return std::tie(x.side1, x.side2) < std::tie(y.side1, y.side2);
  });
  std::vector<CurveType> out;
  if (g >= 1) out.push_back({CurveType::Kind::NonSeparating, {g - 1, n, {}}, {}});
  out.insert(out.end(), separating.begin(), separating.end());
  return out;
}

H2Bounds h2_bounds(int g, int n) {
  const std::uint64_t lower = count_orbits(g, n, false);
  return {g, n, lower, static_cast<std::uint64_t>(n) + 1 + lower, g >= 4};
}

}  // namespace qrep
