#include "qrep/certify.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "qrep/blocks.hpp"
#include "qrep/errors.hpp"

namespace qrep {

namespace {

int level_k(int p) {
  if (p % 4 != 0) throw PreconditionError("level must be divisible by 4, got " + std::to_string(p));
  return p / 4;
}

RootOfUnity product(const std::vector<RootOfUnity>& values, std::int64_t order) {
  RootOfUnity out = RootOfUnity::one(order);
  for (const RootOfUnity& v : values) out = out * v;
  return out;
}

// Distinct eigenvalues of the tuple with the basis indices carrying each.
struct Eigenspace {
  RootOfUnity value;
  std::vector<int> indices;
};

std::vector<Eigenspace> eigenspaces(const std::array<RootOfUnity, 5>& lam) {
  std::vector<Eigenspace> out;
  for (int i = 0; i < 5; ++i) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Eigenspace& e) { return e.value == lam[static_cast<std::size_t>(i)]; });
    if (it == out.end()) {
      out.push_back({lam[static_cast<std::size_t>(i)], {i}});
    } else {
      it->indices.push_back(i);
    }
  }
  return out;
}

// Signs of the form on a t-invariant subspace that takes `take[e]` dimensions
// from eigenspace e. A partial eigenspace contributes only when the form is
// definite on it; otherwise the signs are undetermined.
std::optional<std::vector<Sign>> subspace_signs(const std::vector<Eigenspace>& spaces, const std::vector<int>& take,
                                                const GramProfile& profile) {
  std::vector<Sign> out;
  for (std::size_t e = 0; e < spaces.size(); ++e) {
    const int want = take[e];
    if (want == 0) continue;
    const auto& idx = spaces[e].indices;
    if (want == static_cast<int>(idx.size())) {
      for (int i : idx) out.push_back(profile.diagonal[static_cast<std::size_t>(i)]);
      continue;
    }
    const Sign first = profile.diagonal[static_cast<std::size_t>(idx.front())];
    for (int i : idx) {
      if (profile.diagonal[static_cast<std::size_t>(i)] != first) return std::nullopt;
    }
    out.insert(out.end(), static_cast<std::size_t>(want), first);
  }
  return out;
}

bool mixed(const std::optional<std::vector<Sign>>& signs) {
  if (!signs) return false;
  const bool plus = std::find(signs->begin(), signs->end(), Sign::Positive) != signs->end();
  const bool minus = std::find(signs->begin(), signs->end(), Sign::Negative) != signs->end();
  return plus && minus;
}

}  // namespace

// ---------------------------------------------------------------------------

RootOfUnity even_zeta(int p, std::int64_t ell) {
  const int k = level_k(p);
  const std::int64_t two_p = 2 * static_cast<std::int64_t>(p);
  if (std::gcd(ell, two_p) != 1) {
    throw NonPrimitiveRoot("ell = " + std::to_string(ell) + " is not coprime to 2p = " + std::to_string(two_p));
  }
  return root_pow(RootOfUnity(two_p, ell), 2 * k + 1);
}

std::array<RootOfUnity, 5> eigenvalue_tuple(int p, std::int64_t ell) {
  const RootOfUnity zeta = even_zeta(p, ell);
  const RootOfUnity zeta4 = root_pow(zeta, 4);
  return {-zeta4, zeta, RootOfUnity::one(zeta.order()), -zeta, -zeta4};
}

const std::array<const char*, 5>& eigenvalue_labels() {
  static const std::array<const char*, 5> labels{"-zeta^4", "zeta", "1", "-zeta", "-zeta^4"};
  return labels;
}

ScalarOutcome scalar_obstruction(int p, std::int64_t ell, const std::vector<RootOfUnity>& subset) {
  const std::int64_t r = static_cast<std::int64_t>(subset.size());
  if (r != 1 && r != 2) throw PreconditionError("invariant subspaces of dimension 1 or 2 only");
  const auto lam = eigenvalue_tuple(p, ell);
  const std::int64_t order = lam[0].order();
  const RootOfUnity whole = root_pow(product({lam.begin(), lam.end()}, order), 6 * r);
  const RootOfUnity part = root_pow(product(subset, order), 30);
  return whole == part ? ScalarOutcome::Survives : ScalarOutcome::ScalarObstructed;
}

const char* to_string(Resolution r) {
  switch (r) {
    case Resolution::ScalarObstructed:
      return "scalar_obstructed";
    case Resolution::FormIndefiniteOnSpan:
      return "form_indefinite_on_span";
    case Resolution::FormIndefiniteOnComplement:
      return "form_indefinite_on_complement";
    case Resolution::Unresolved:
      return "unresolved";
  }
  return "?";
}

std::vector<SubspaceCase> subspace_cases(int p, std::int64_t ell, const GramProfile& profile) {
  const auto lam = eigenvalue_tuple(p, ell);
  const auto spaces = eigenspaces(lam);
  const auto& labels = eigenvalue_labels();

  // Multisets the irreducibility argument covers: {lambda_0, lambda_2}
  // through the span, {lambda_1, lambda_3} through the orthogonal complement.
  const std::vector<RootOfUnity> span_case{lam[0], lam[2]};
  const std::vector<RootOfUnity> complement_case{lam[1], lam[3]};
  auto same_multiset = [](std::vector<RootOfUnity> a, std::vector<RootOfUnity> b) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a) {
      auto it = std::find(b.begin(), b.end(), x);
      if (it == b.end()) return false;
      b.erase(it);
    }
    return true;
  };

  std::vector<SubspaceCase> cases;
  auto add_case = [&](const std::vector<int>& take) {
    std::vector<RootOfUnity> subset;
    SubspaceCase c{{}, {}, ScalarOutcome::Survives, Resolution::Unresolved, false};
    for (std::size_t e = 0; e < spaces.size(); ++e) {
      for (int t = 0; t < take[e]; ++t) {
        subset.push_back(spaces[e].value);
        c.multiset.emplace_back(labels[static_cast<std::size_t>(spaces[e].indices.front())]);
      }
      if (take[e] > 0) c.indices.insert(c.indices.end(), spaces[e].indices.begin(), spaces[e].indices.end());
    }
    std::sort(c.indices.begin(), c.indices.end());
    c.scalar = scalar_obstruction(p, ell, subset);
    if (c.scalar == ScalarOutcome::ScalarObstructed) {
      c.resolution = Resolution::ScalarObstructed;
    } else if (same_multiset(subset, span_case)) {
      if (mixed(subspace_signs(spaces, take, profile))) {
        c.resolution = Resolution::FormIndefiniteOnSpan;
        c.irreducibility_asserted = true;
      }
    } else if (same_multiset(subset, complement_case)) {
      std::vector<int> rest(take.size());
      for (std::size_t e = 0; e < take.size(); ++e) rest[e] = static_cast<int>(spaces[e].indices.size()) - take[e];
      if (mixed(subspace_signs(spaces, rest, profile))) {
        c.resolution = Resolution::FormIndefiniteOnComplement;
        c.irreducibility_asserted = true;
      }
    }
    cases.push_back(std::move(c));
  };

  const std::size_t n = spaces.size();
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<int> take(n, 0);
    take[a] = 1;
    add_case(take);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      if (a == b && spaces[a].indices.size() < 2) continue;
      std::vector<int> take(n, 0);
      ++take[a];
      ++take[b];
      add_case(take);
    }
  }
  return cases;
}

// ---------------------------------------------------------------------------
// Burau

bool BurauImage::braid_relation_holds() const { return sigma1 * sigma2 * sigma1 == sigma2 * sigma1 * sigma2; }

bool BurauImage::eigenvalues_are_one_and_minus_q() const {
  const auto qq = CyclotomicInteger::root_power(ring, q.exponent() / (q.order() / ring->order()));
  const auto one = CyclotomicInteger::one(ring);
  for (const CycloMat2* m : {&sigma1, &sigma2}) {
    // x^2 - (1 - q) x - q = (x - 1)(x + q)
    if (!(m->trace() == one - qq) || !(m->det() == -qq)) return false;
  }
  return true;
}

BurauImage burau_matrices(const RootOfUnity& q) {
  // Work in Z[zeta_n] with n the exact order of q, so q = x^e with gcd(e, n) = 1.
  const std::int64_t n = q.multiplicative_order();
  const std::int64_t e = q.exponent() / (q.order() / n);
  auto ring = std::make_shared<const CyclotomicRing>(static_cast<int>(n));
  const auto x = CyclotomicInteger::root_power(ring, e);
  const auto xinv = CyclotomicInteger::root_power(ring, -e);
  const auto zero = CyclotomicInteger::zero(ring);
  const auto one = CyclotomicInteger::one(ring);

  BurauImage img{q,
                 ring,
                 {{-x, one, zero, one}},
                 {{one, zero, x, -x}},
                 {{-xinv, xinv, zero, one}},
                 {{one, zero, one, -xinv}},
                 is_one(-q)};
  return img;
}

bool burau_is_finite(std::int64_t order_of_minus_q) {
  if (order_of_minus_q < 1) throw PreconditionError("order must be positive");
  return order_of_minus_q >= 2 && order_of_minus_q <= 5;
}

ClosureResult burau_closure_oracle(const RootOfUnity& q, std::size_t cap) {
  const BurauImage img = burau_matrices(q);
  struct KeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (std::int64_t x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
      return h;
    }
  };
  std::unordered_set<std::vector<std::int64_t>, KeyHash> seen;
  std::deque<CycloMat2> frontier;
  const CycloMat2 start = CycloMat2::identity(img.ring);
  seen.insert(start.key());
  frontier.push_back(start);
  const std::array<const CycloMat2*, 4> gens{&img.sigma1, &img.sigma2, &img.sigma1_inv, &img.sigma2_inv};
  while (!frontier.empty()) {
    const CycloMat2 g = std::move(frontier.front());
    frontier.pop_front();
    for (const CycloMat2* s : gens) {
      CycloMat2 h = g * *s;
      if (seen.insert(h.key()).second) {
        if (seen.size() > cap) return {false, seen.size()};
        frontier.push_back(std::move(h));
      }
    }
  }
  return {true, seen.size()};
}

// ---------------------------------------------------------------------------
// Certificates

const char* to_string(Route r) {
  switch (r) {
    case Route::OddBurau:
      return "odd_burau";
    case Route::EvenCoxeter:
      return "even_coxeter";
    case Route::Uncertified:
      return "uncertified";
  }
  return "?";
}

int odd_part(int p) {
  if (p < 1) throw PreconditionError("level must be positive");
  while (p % 2 == 0) p /= 2;
  return p;
}

InfinitenessCertificate odd_certificate(int p) {
  const int q = odd_part(p);
  InfinitenessCertificate cert{p, Route::Uncertified, q, std::nullopt, std::nullopt, {}, {}};
  if (q < 7) {
    cert.failed.push_back("odd part " + std::to_string(q) + " < 7");
    return cert;
  }
  OddBurauDetails d{q, q - 5, tadpole_basis(q - 5, q), RootOfUnity::one(2 * q), 0, true, false};
  if (d.loop_colors.size() != 2) {
    cert.failed.push_back("tadpole block at level " + std::to_string(q) + " has dimension " +
                          std::to_string(d.loop_colors.size()) + ", expected 2");
    cert.odd = d;
    return cert;
  }
  // A = zeta_{2q}; q = -A^{-2} when q = 1 mod 4 and -A^2 when q = 3 mod 4.
  d.burau_parameter = RootOfUnity(2 * q, q % 4 == 1 ? q - 2 : q + 2);
  const RootOfUnity minus_q = -d.burau_parameter;
  d.minus_q_order = minus_q.multiplicative_order();
  d.burau_finite = burau_is_finite(d.minus_q_order);
  const RootOfUnity ratio = twist_eigenvalue(d.loop_colors[1], q) * twist_eigenvalue(d.loop_colors[0], q).inverse();
  d.twist_ratio_matches = ratio == minus_q;
  cert.odd = d;
  if (!d.twist_ratio_matches) cert.failed.push_back("twist eigenvalue ratio differs from -q");
  if (d.burau_finite) cert.failed.push_back("-q has order " + std::to_string(d.minus_q_order) + " <= 5");
  if (cert.failed.empty()) {
    cert.route = Route::OddBurau;
    if (q != p) cert.notes.push_back("certified through the odd part " + std::to_string(q) + " of p");
  }
  return cert;
}

InfinitenessCertificate even_certificate(int p) {
  InfinitenessCertificate cert{p, Route::Uncertified, odd_part(p), std::nullopt, std::nullopt, {}, {}};
  if (p % 4 != 0) {
    cert.failed.push_back("p is not divisible by 4");
    return cert;
  }
  const int k = p / 4;
  if (k < 4) {
    cert.failed.push_back("k = " + std::to_string(k) + " < 4");
    return cert;
  }
  const auto ell = find_indefinite_ell(p);
  if (!ell) {
    cert.failed.push_back("no odd ell coprime to 2p makes the form indefinite");
    return cert;
  }
  EvenCoxeterDetails d{k, *ell, in_quoted_window(p, *ell), gram_profile(p, *ell), {}};
  d.cases = subspace_cases(p, *ell, d.profile);
  for (const SubspaceCase& c : d.cases) {
    if (c.resolution != Resolution::Unresolved) continue;
    std::string name = "{";
    for (std::size_t i = 0; i < c.multiset.size(); ++i) name += (i ? "," : "") + c.multiset[i];
    cert.failed.push_back("invariant subspace case " + name + "} unresolved");
  }
  if (!d.ell_in_quoted_window) {
    cert.notes.push_back("ell = " + std::to_string(*ell) +
                         " lies outside (4k/3, 2k); no ell in that window gives an indefinite form");
  }
  if (120 % p == 0) {
    cert.notes.push_back("p divides 120, so the hypothesis p does not divide 120 fails; the exact scalar "
                         "obstruction is used instead");
  }
  for (const SubspaceCase& c : d.cases) {
    if (c.indices == std::vector<int>{1, 3} && c.resolution == Resolution::ScalarObstructed) {
      cert.notes.push_back("the (1,3) multiset {zeta,-zeta} is scalar-obstructed, not a survivor");
    }
  }
  cert.even = std::move(d);
  if (cert.failed.empty()) {
    cert.route = Route::EvenCoxeter;
    cert.notes.push_back("irreducibility on surviving spans and complements is asserted, not computed");
  }
  return cert;
}

InfinitenessCertificate certify_level(int p) {
  InfinitenessCertificate odd = odd_certificate(p);
  if (odd.route == Route::OddBurau) return odd;
  if (p % 4 != 0) return odd;
  InfinitenessCertificate even = even_certificate(p);
  if (even.route == Route::EvenCoxeter) return even;
  even.failed.insert(even.failed.begin(), odd.failed.begin(), odd.failed.end());
  return even;
}

}  // namespace qrep
