// Regenerates the files under datasets/. Synthetic blocks are built as
// ω = P Λ Pᵀ from a chosen P and Λ so that the solver's answer is known.
//
//   lsa_make_datasets <output-dir>

#include <filesystem>
#include <iostream>
#include <vector>

#include "lsa/io.hpp"

namespace {

using lsa::BlockData;
using lsa::HalfLaurent;
using lsa::PolyMatrix;

HalfLaurent s(int doubled) { return HalfLaurent::monomial(1, doubled); }

void set_omega(BlockData& b, const PolyMatrix& p, const PolyMatrix& lambda) {
  b.omega_order.clear();
  for (const auto& l : b.labels) b.omega_order.push_back(l.id);
  b.omega = p * lambda * p.transpose();
}

// Three orbits of dimensions 0, 1, 3 in a chain; the middle orbit carries two
// local systems exchanged by duality, so p and λ involve half-integer powers
// and the involution is not the identity.
BlockData synthetic_dual_block() {
  BlockData b;
  b.name = "synthetic-dual";
  b.provenance = {{"kind", "synthetic"}, {"construction", "omega = P Lambda P^T"}};
  b.orbits = {{"O0", 0, {}}, {"O1", 1, {"O0"}}, {"O3", 3, {"O1"}}};
  b.labels = {{"a", "O0", "trivial", "a"},
              {"b", "O1", "eps", "c"},
              {"c", "O1", "eps-dual", "b"},
              {"d", "O3", "trivial", "d"}};
  PolyMatrix p = PolyMatrix::Zero(4, 4);
  p(0, 0) = 1;
  p(1, 1) = p(2, 2) = s(-1);
  p(3, 3) = s(-3);
  p(1, 0) = p(2, 0) = s(1) + s(3);
  p(3, 1) = p(3, 2) = s(-1);
  p(3, 0) = s(-2) + 2;
  PolyMatrix lambda = PolyMatrix::Zero(4, 4);
  lambda(0, 0) = 1;
  lambda(1, 1) = lambda(2, 2) = HalfLaurent(1) + s(2);
  lambda(1, 2) = lambda(2, 1) = s(2);
  lambda(3, 3) = s(6) - 1;
  set_omega(b, p, lambda);
  return b;
}

// Bottom orbit with two labels whose Λ-block is [[1, 1], [1, 1]].
BlockData singular_lambda_block() {
  BlockData b;
  b.name = "singular-lambda";
  b.provenance = {{"kind", "synthetic"}, {"defect", "singular Lambda-block on orbit Z"}};
  b.orbits = {{"Z", 0, {}}, {"R", 2, {"Z"}}};
  b.labels = {{"x", "Z", "trivial", "x"}, {"y", "Z", "sign", "y"}, {"r", "R", "trivial", "r"}};
  PolyMatrix p = PolyMatrix::Zero(3, 3);
  p(0, 0) = p(1, 1) = 1;
  p(2, 2) = s(-2);
  PolyMatrix lambda = PolyMatrix::Zero(3, 3);
  lambda(0, 0) = lambda(0, 1) = lambda(1, 0) = lambda(1, 1) = 1;
  lambda(2, 2) = s(4) - 1;
  set_omega(b, p, lambda);
  return b;
}

void write(const std::filesystem::path& dir, const std::string& file, const std::vector<BlockData>& blocks) {
  lsa::write_text_file((dir / file).string(), lsa::dataset_to_json(blocks).dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: lsa_make_datasets <output-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);

  const BlockData gl2 = lsa::build_springer_block_a(2);
  write(dir, "springer_a2.json", {gl2});
  write(dir, "springer_a3.json", {lsa::build_springer_block_a(3)});
  write(dir, "synthetic_dual.json", {synthetic_dual_block()});
  write(dir, "singular_lambda.json", {singular_lambda_block()});

  // Two singleton cuspidal blocks plus GL_2; the first block lists a label of
  // the second in its ω order with a zero entry, which is allowed.
  BlockData cusp_a = lsa::singleton_cuspidal_block("cuspidal-a", 2, s(-4) - s(-2));
  BlockData cusp_b = lsa::singleton_cuspidal_block("cuspidal-b", 0, HalfLaurent(3));
  cusp_a.labels[0].id = cusp_a.labels[0].dual = "cusp-a";
  cusp_b.labels[0].id = cusp_b.labels[0].dual = "cusp-b";
  cusp_a.omega_order = {"cusp-a", "cusp-b"};
  PolyMatrix wide = PolyMatrix::Zero(2, 2);
  wide(0, 0) = cusp_a.omega(0, 0);
  cusp_a.omega = wide;
  cusp_b.omega_order = {"cusp-b"};
  write(dir, "multi_block.json", {gl2, cusp_a, cusp_b, synthetic_dual_block()});

  BlockData leaky = cusp_a;
  leaky.omega(0, 1) = leaky.omega(1, 0) = s(1);
  write(dir, "cross_block_nonzero.json", {leaky, cusp_b});

  BlockData asym = gl2;
  asym.omega(0, 1) += 1;
  asym.provenance = {{"kind", "corrupted"}, {"defect", "asymmetric omega"}};
  asym.name = "asymmetric";
  write(dir, "asymmetric.json", {asym});

  BlockData bad_dims = gl2;
  bad_dims.orbits[*bad_dims.orbit_index("1,1")].dim = 5;
  bad_dims.provenance = {{"kind", "corrupted"}, {"defect", "minimal orbit has the larger dimension"}};
  bad_dims.name = "non-monotone";
  write(dir, "non_monotone_dims.json", {bad_dims});
  return 0;
}
