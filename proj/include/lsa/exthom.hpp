#pragma once

// Graded Hom dimensions between simple objects of one block, computed from
// character data as graded invariant multiplicities in a polynomial algebra
// with generators in cohomological degree 2.

#include <string_view>
#include <vector>

#include "lsa/laurent.hpp"
#include "lsa/weyl.hpp"

namespace lsa {

/// dims[k] = dim Hom^{2k}, k = 0..max_degree. Odd cohomological degrees
/// vanish and are not stored; degrees beyond max_degree are unknown, not zero.
struct GradedDims {
  std::vector<BigInt> dims;
  int max_degree = 0;

  friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

/// Coefficients of u^0..u^max_k of a rational function in u = q with
/// integer exponents. Throws NonExactDivision if a coefficient is not an
/// integer and InconsistentInput for negative powers.
std::vector<BigInt> power_series(const RationalHL& r, int max_k);

/// Entry k: coefficient of u^k in (1/|W|) Σ_classes size·χ·ψ / det(1 - u w).
/// Throws InconsistentInput if any dimension comes out negative.
GradedDims graded_hom_dims(const CharTable& table, std::string_view chi, std::string_view psi, int max_k);

/// Entry k: |W| · C(k + r - 1, r - 1), the graded dimension of
/// H_L(O) ⊗ Q[W] for a torus of rank r.
GradedDims lusztig_sheaf_endo_dims(const CharTable& table, int rank, int max_k);

/// Multiplies the graded Hom series by Π_j (1 - u^{d_j}) and compares it with
/// the coinvariant pairing through degree max_k.
bool series_consistency(const CharTable& table, std::string_view chi, std::string_view psi, int max_k);

}  // namespace lsa
