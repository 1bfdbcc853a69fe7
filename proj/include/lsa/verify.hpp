#pragma once

// End-to-end check of the type-A Springer block against the tableau oracle.

#include <string>
#include <vector>

#include "lsa/blockdata.hpp"
#include "lsa/solver.hpp"

namespace lsa {

/// Largest n accepted by verify_springer (oracle enumeration cost).
inline constexpr int kVerifyMaxN = 7;

/// For every pair (λ, μ): if λ dominates μ, the nonzero coefficients of
/// p_{λμ} and of K_{λμ}(q) agree as multisets and p_{λμ}(1) = #SSYT(λ, μ);
/// otherwise p_{λμ} = 0. Returns one message per failing pair.
std::vector<std::string> kostka_mismatches(const BlockData& block, const SolveResult& result, int n);

struct VerifyReport {
  int n = 0;
  std::vector<std::string> mismatches;
  bool order_independent = false;

  bool ok() const { return mismatches.empty() && order_independent; }
};

/// generate -> solve -> oracle comparison -> extension invariance.
/// Throws InconsistentInput when n is outside 1..kVerifyMaxN.
VerifyReport verify_springer(int n, int trials = 5);

}  // namespace lsa
