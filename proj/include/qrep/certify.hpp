#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrep/cyclotomic.hpp"
#include "qrep/hermitian.hpp"
#include "qrep/roots.hpp"

namespace qrep {

// ---------------------------------------------------------------------------
// Even levels: Dehn twist spectrum on the five-dimensional block.

/// zeta = A^{2k+1}, a primitive 2p-th root, where A = zeta_{2p}^{ell}.
RootOfUnity even_zeta(int p, std::int64_t ell);

/// Rescaled eigenvalues (-zeta^4, zeta, 1, -zeta, -zeta^4) of the twist t on
/// the basis u_0..u_4.
std::array<RootOfUnity, 5> eigenvalue_tuple(int p, std::int64_t ell);

/// Symbolic names of the tuple entries, in basis order.
const std::array<const char*, 5>& eigenvalue_labels();

enum class ScalarOutcome { ScalarObstructed, Survives };

/// Checks the determinant identity a t-invariant subspace with eigenvalues
/// `subset` (size 1 or 2) would force on the central element (t t*)^3:
/// (prod lambda)^{6r} = (prod subset)^{30}. The subspace is ruled out when the
/// identity fails.
ScalarOutcome scalar_obstruction(int p, std::int64_t ell, const std::vector<RootOfUnity>& subset);

enum class Resolution {
  ScalarObstructed,
  FormIndefiniteOnSpan,
  FormIndefiniteOnComplement,
  Unresolved,
};
const char* to_string(Resolution r);

/// One candidate invariant subspace, named by its eigenvalue multiset. Cases
/// of dimension 3 and 4 are covered through their orthogonal complements.
struct SubspaceCase {
  std::vector<int> indices;          // basis indices carrying the multiset, e.g. {0, 2}
  std::vector<std::string> multiset; // symbolic eigenvalue names
  ScalarOutcome scalar;
  Resolution resolution;
  bool irreducibility_asserted;
};

// ---------------------------------------------------------------------------
// Odd levels: reduced Burau image of B_3.

struct BurauImage {
  RootOfUnity q;
  std::shared_ptr<const CyclotomicRing> ring;  // Z[zeta_n], n = multiplicative order of q
  CycloMat2 sigma1;                            // [[-q, 1], [0, 1]]
  CycloMat2 sigma2;                            // [[1, 0], [q, -q]]
  CycloMat2 sigma1_inv;
  CycloMat2 sigma2_inv;
  bool degenerate;                             // -q = 1, both eigenvalues equal 1

  bool braid_relation_holds() const;
  /// Characteristic polynomial of each generator is (x - 1)(x + q).
  bool eigenvalues_are_one_and_minus_q() const;
};

BurauImage burau_matrices(const RootOfUnity& q);

/// Finite exactly for -q of order 2..5. At -q = 1 both generators are
/// unipotent and the image is infinite.
bool burau_is_finite(std::int64_t order_of_minus_q);

struct ClosureResult {
  bool finite;
  std::size_t order;  // group order when finite, elements visited otherwise
};

/// Breadth-first closure of <sigma1, sigma2> with exact entries. Reports
/// finite when the closure stabilizes with at most `cap` elements.
ClosureResult burau_closure_oracle(const RootOfUnity& q, std::size_t cap);

// ---------------------------------------------------------------------------
// Certificates.

enum class Route { OddBurau, EvenCoxeter, Uncertified };
const char* to_string(Route r);

struct OddBurauDetails {
  int odd_part;
  int boundary_color;
  std::vector<int> loop_colors;
  RootOfUnity burau_parameter;    // q; -q is a primitive odd_part-th root
  std::int64_t minus_q_order;
  bool burau_finite;              // burau_is_finite(minus_q_order); false on success
  bool twist_ratio_matches;       // eigenvalue ratio of the twist equals -q
};

struct EvenCoxeterDetails {
  int k;
  std::int64_t ell;
  bool ell_in_quoted_window;
  GramProfile profile;
  std::vector<SubspaceCase> cases;
};

struct InfinitenessCertificate {
  int p;
  Route route;
  int odd_part;
  std::optional<OddBurauDetails> odd;
  std::optional<EvenCoxeterDetails> even;
  std::vector<std::string> failed;  // reasons, when uncertified
  std::vector<std::string> notes;   // provenance remarks
};

int odd_part(int p);

/// The r = 1, 2 case analysis for level p = 4k at root selector ell.
std::vector<SubspaceCase> subspace_cases(int p, std::int64_t ell, const GramProfile& profile);

InfinitenessCertificate odd_certificate(int p);
InfinitenessCertificate even_certificate(int p);
InfinitenessCertificate certify_level(int p);

}  // namespace qrep
