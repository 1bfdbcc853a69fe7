#pragma once

// The Lusztig–Shoji algorithm: given ω for one block, find the unique P and
// block-diagonal Λ with ω = P Λ Pᵀ, where
//   P(χ, χ) = t^{-dim O_χ / 2},
//   P(χ, ψ) = 0 unless O_ψ lies in the boundary of the closure of O_χ,
//   Λ(φ, φ') = 0 unless O_φ = O_φ'.
// Orbits are processed along a linear extension of the closure order; each
// stage produces the Λ-block of one orbit and the P-columns of its labels.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsa/blockdata.hpp"
#include "lsa/laurent.hpp"

namespace lsa {

struct SolveResult {
  std::string block;
  std::vector<std::string> order;            // label ids indexing every matrix
  PolyMatrix p;                              // stalk polynomials
  PolyMatrix lambda;                         // compactly supported cohomology classes
  PolyMatrix p_dual;                         // costalk polynomials
  std::vector<std::string> extension_order;  // orbit ids, minimal first
};

struct SolveOptions {
  /// Selects a random linear extension; the result does not depend on it.
  std::optional<std::uint64_t> order_seed;
};

/// Throws InvalidBlock (validation failed), SingularLambdaBlock,
/// NonExactDivision, SupportViolation, DualSymmetryViolation or
/// InconsistentInput. Matrices are indexed by block.labels order.
SolveResult solve(const BlockData& block, const SolveOptions& options = {});

/// P Λ Pᵀ. Throws ShapeMismatch when the result does not fit the block.
PolyMatrix reconstruct(const SolveResult& result, const BlockData& block);

/// p̃(χ, ψ) = t^{-dim O_ψ} · bar(p(χ*, ψ*)). An involution on matrices
/// indexed by block.labels.
PolyMatrix dualize_p(const PolyMatrix& p, const BlockData& block);
inline PolyMatrix dualize_p(const SolveResult& result, const BlockData& block) { return dualize_p(result.p, block); }

/// Solves under up to `trials` distinct random (linear extension, label
/// permutation) pairs and reports whether every result agrees with the
/// default solve, compared label by label.
bool extension_invariance_check(const BlockData& block, int trials, std::uint64_t seed = 0x5eed);

}  // namespace lsa
