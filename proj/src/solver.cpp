#include "lsa/solver.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <utility>

#include "lsa/bareiss.hpp"

namespace lsa {

namespace {

using Index = Eigen::Index;

// The block with ω cut down to its own labels, in label order.
BlockData restricted(const BlockData& block) {
  BlockData out = block;
  out.omega = own_omega(block);
  out.omega_order.clear();
  for (const auto& l : block.labels) out.omega_order.push_back(l.id);
  return out;
}

std::vector<Index> dual_indices(const BlockData& block) {
  std::vector<Index> dual;
  dual.reserve(block.labels.size());
  for (const auto& l : block.labels) dual.push_back(static_cast<Index>(*block.label_index(l.dual)));
  return dual;
}

std::vector<int> label_dims(const BlockData& block) {
  std::vector<int> dims;
  dims.reserve(block.labels.size());
  for (const auto& l : block.labels) dims.push_back(block.orbits[*block.orbit_index(l.orbit)].dim);
  return dims;
}

std::string pair_name(const BlockData& block, Index i, Index j) {
  return "(" + block.labels[static_cast<std::size_t>(i)].id + ", " + block.labels[static_cast<std::size_t>(j)].id + ")";
}

}  // namespace

SolveResult solve(const BlockData& input, const SolveOptions& options) {
  const BlockData block = restricted(input);
  if (auto violations = validate_block(block); !violations.empty()) {
    std::string detail;
    for (const auto& v : violations) detail += std::string(to_string(v.kind)) + " (" + v.detail + "); ";
    throw Error(ErrorKind::InvalidBlock, block.name + ": " + detail);
  }

  const auto n = static_cast<Index>(block.labels.size());
  const OrbitPoset poset(block);
  std::vector<std::size_t> orbit_of;
  for (const auto& l : block.labels) orbit_of.push_back(*block.orbit_index(l.orbit));

  const PolyMatrix& omega = block.omega;
  PolyMatrix p = PolyMatrix::Zero(n, n);
  PolyMatrix lambda = PolyMatrix::Zero(n, n);
  // Σ over finished stages of P(:, stage) Λ_stage P(:, stage)ᵀ.
  PolyMatrix accumulated = PolyMatrix::Zero(n, n);

  SolveResult result;
  result.block = block.name;
  for (const auto& l : block.labels) result.order.push_back(l.id);

  for (const std::size_t stage : poset.linear_extension(options.order_seed)) {
    result.extension_order.push_back(block.orbits[stage].id);
    std::vector<Index> on_stage;
    for (Index i = 0; i < n; ++i)
      if (orbit_of[static_cast<std::size_t>(i)] == stage) on_stage.push_back(i);
    if (on_stage.empty()) continue;

    const int dim = poset.dim(stage);
    const auto k = static_cast<Index>(on_stage.size());
    for (Index i : on_stage) p(i, i) = HalfLaurent::monomial(1, -dim);

    // λ-block: t^{dim} (ω - lower stages) on the orbit.
    PolyMatrix block_lambda(k, k);
    for (Index a = 0; a < k; ++a)
      for (Index b = 0; b < k; ++b) {
        const Index i = on_stage[static_cast<std::size_t>(a)];
        const Index j = on_stage[static_cast<std::size_t>(b)];
        block_lambda(a, b) = shift(omega(i, j) - accumulated(i, j), 2 * dim);
      }
    const auto inverse = fraction_free_inverse(block_lambda);
    if (!inverse)
      throw Error(ErrorKind::SingularLambdaBlock,
                  block.name + ": Λ-block of orbit " + block.orbits[stage].id + " is singular");

    for (Index i = 0; i < n; ++i) {
      if (orbit_of[static_cast<std::size_t>(i)] == stage) continue;
      PolyMatrix rhs(1, k);
      bool nonzero = false;
      for (Index b = 0; b < k; ++b) {
        const Index phi = on_stage[static_cast<std::size_t>(b)];
        rhs(0, b) = shift(omega(i, phi) - accumulated(i, phi), dim);
        nonzero = nonzero || !rhs(0, b).is_zero();
      }
      if (!poset.below(stage, orbit_of[static_cast<std::size_t>(i)])) {
        if (nonzero)
          throw Error(ErrorKind::SupportViolation,
                      block.name + ": label " + block.labels[static_cast<std::size_t>(i)].id +
                          " has nonzero residual against orbit " + block.orbits[stage].id +
                          ", which is not in its closure boundary");
        continue;
      }
      const PolyMatrix scaled = rhs * inverse->scaled_inverse;
      for (Index b = 0; b < k; ++b) {
        const Index phi = on_stage[static_cast<std::size_t>(b)];
        try {
          p(i, phi) = exact_div(scaled(0, b), inverse->scale);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NonExactDivision) throw;
          throw Error(ErrorKind::NonExactDivision, block.name + ": p" + pair_name(block, i, phi) +
                                                       " is not a Laurent polynomial");
        }
      }
    }

    for (Index a = 0; a < k; ++a)
      for (Index b = 0; b < k; ++b)
        lambda(on_stage[static_cast<std::size_t>(a)], on_stage[static_cast<std::size_t>(b)]) = block_lambda(a, b);
    const PolyMatrix columns = p(Eigen::all, on_stage);
    accumulated += columns * block_lambda * columns.transpose();
  }

  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (lambda(i, j) != lambda(j, i))
        throw Error(ErrorKind::InconsistentInput, block.name + ": λ" + pair_name(block, i, j) + " is not symmetric");

  const auto dual = dual_indices(block);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (p(i, j) != p(dual[static_cast<std::size_t>(i)], dual[static_cast<std::size_t>(j)]))
        throw Error(ErrorKind::DualSymmetryViolation,
                    block.name + ": p" + pair_name(block, i, j) + " = " + to_string(p(i, j)) + " differs from p" +
                        pair_name(block, dual[static_cast<std::size_t>(i)], dual[static_cast<std::size_t>(j)]));

  if (accumulated != omega) throw Error(ErrorKind::InconsistentInput, block.name + ": P Λ Pᵀ does not reproduce ω");

  result.p = std::move(p);
  result.lambda = std::move(lambda);
  result.p_dual = dualize_p(result.p, block);
  return result;
}

PolyMatrix reconstruct(const SolveResult& result, const BlockData& block) {
  const auto n = static_cast<Index>(block.labels.size());
  if (result.p.rows() != n || result.p.cols() != n || result.lambda.rows() != n || result.lambda.cols() != n)
    throw Error(ErrorKind::ShapeMismatch, "result matrices do not match block " + block.name);
  return result.p * result.lambda * result.p.transpose();
}

PolyMatrix dualize_p(const PolyMatrix& p, const BlockData& block) {
  const auto n = static_cast<Index>(block.labels.size());
  if (p.rows() != n || p.cols() != n) throw Error(ErrorKind::ShapeMismatch, "p does not match block " + block.name);
  const auto dual = dual_indices(block);
  const auto dims = label_dims(block);
  PolyMatrix out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      out(i, j) = shift(bar(p(dual[static_cast<std::size_t>(i)], dual[static_cast<std::size_t>(j)])),
                        -2 * dims[static_cast<std::size_t>(j)]);
  return out;
}

bool extension_invariance_check(const BlockData& input, int trials, std::uint64_t seed) {
  const BlockData block = restricted(input);
  const SolveResult baseline = solve(block);
  const OrbitPoset poset(block);
  const std::size_t n = block.labels.size();

  std::mt19937_64 rng(seed);
  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> tried;
  const int max_attempts = 20 * std::max(trials, 1);
  for (int attempt = 0; attempt < max_attempts && static_cast<int>(tried.size()) < trials; ++attempt) {
    const std::uint64_t order_seed = rng();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    if (!tried.emplace(poset.linear_extension(order_seed), perm).second) continue;

    BlockData shuffled = block;
    for (std::size_t i = 0; i < n; ++i) {
      shuffled.labels[i] = block.labels[perm[i]];
      shuffled.omega_order[i] = block.labels[perm[i]].id;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        shuffled.omega(static_cast<Index>(i), static_cast<Index>(j)) =
            block.omega(static_cast<Index>(perm[i]), static_cast<Index>(perm[j]));

    const SolveResult r = solve(shuffled, {order_seed});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto bi = static_cast<Index>(perm[i]);
        const auto bj = static_cast<Index>(perm[j]);
        const auto si = static_cast<Index>(i);
        const auto sj = static_cast<Index>(j);
        if (r.p(si, sj) != baseline.p(bi, bj) || r.lambda(si, sj) != baseline.lambda(bi, bj) ||
            r.p_dual(si, sj) != baseline.p_dual(bi, bj))
          return false;
      }
  }
  return true;
}

}  // namespace lsa
