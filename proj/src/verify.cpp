#include "lsa/verify.hpp"

#include <algorithm>

#include "lsa/oracle.hpp"

namespace lsa {

namespace {

std::vector<BigInt> coefficient_multiset(const HalfLaurent& f) {
  std::vector<BigInt> out;
  for (const auto& [e, v] : f.terms()) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::string> kostka_mismatches(const BlockData& block, const SolveResult& result, int n) {
  std::vector<std::string> out;
  const auto parts = partitions_of(n);
  for (const auto& lambda : parts) {
    for (const auto& mu : parts) {
      const auto i = block.label_index(lambda.id());
      const auto j = block.label_index(mu.id());
      if (!i || !j) {
        out.push_back("missing label for (" + lambda.id() + ", " + mu.id() + ")");
        continue;
      }
      const HalfLaurent& p = result.p(static_cast<Eigen::Index>(*i), static_cast<Eigen::Index>(*j));
      const std::string where = "(" + lambda.id() + ", " + mu.id() + "): ";
      if (!dominates(lambda, mu)) {
        if (!p.is_zero()) out.push_back(where + "p = " + to_string(p) + " but λ does not dominate μ");
        continue;
      }
      const HalfLaurent k = kostka_foulkes(lambda, mu);
      const auto count = ssyt_enumerate(lambda, mu).size();
      if (coefficient_multiset(p) != coefficient_multiset(k))
        out.push_back(where + "p = " + to_string(p) + ", K = " + to_string(k, "q"));
      else if (p.eval_at_one() != k.eval_at_one() || k.eval_at_one() != count)
        out.push_back(where + "p(1) = " + p.eval_at_one().str() + ", #SSYT = " + std::to_string(count));
    }
  }
  return out;
}

VerifyReport verify_springer(int n, int trials) {
  if (n < 1 || n > kVerifyMaxN)
    throw Error(ErrorKind::InconsistentInput,
                "verify supports 1 <= n <= " + std::to_string(kVerifyMaxN) + " (tableau enumeration cost), got " +
                    std::to_string(n));
  VerifyReport report;
  report.n = n;
  const BlockData block = build_springer_block_a(n);
  const SolveResult result = solve(block);
  report.mismatches = kostka_mismatches(block, result, n);
  report.order_independent = extension_invariance_check(block, trials);
  return report;
}

}  // namespace lsa
