#include <algorithm>

#include "doctest.h"
#include "lsa/blockdata.hpp"
#include "lsa/io.hpp"
#include "support.hpp"

using namespace lsa;
using lsa::test::t;

namespace {

bool has(const std::vector<Violation>& vs, ViolationKind kind) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == kind; });
}

std::vector<Violation> violations_of(const std::string& file) {
  return validate_dataset(dataset_from_json(read_json_file(lsa::test::dataset(file))));
}

}  // namespace

TEST_CASE("orbit dimensions in type A") {
  CHECK(orbit_dim_type_a(Partition({1, 1, 1}), 3) == 0);
  CHECK(orbit_dim_type_a(Partition({2}), 2) == 2);
  CHECK(orbit_dim_type_a(Partition({2, 1}), 3) == 4);
  CHECK(orbit_dim_type_a(Partition({4}), 4) == 12);
  CHECK_THROWS_AS(orbit_dim_type_a(Partition({2}), 3), Error);
}

TEST_CASE("dominance order") {
  CHECK(dominates(Partition({2, 1}), Partition({1, 1, 1})));
  CHECK_FALSE(dominates(Partition({2, 2}), Partition({3, 1})));
  CHECK(dominates(Partition({3, 1}), Partition({2, 2})));
  CHECK(dominates(Partition({3, 3}), Partition({3, 3})));
  CHECK_FALSE(dominates(Partition({3, 1, 1, 1}), Partition({2, 2, 2})));
  CHECK_FALSE(dominates(Partition({2, 2, 2}), Partition({3, 1, 1, 1})));
  CHECK_THROWS_AS(dominates(Partition({2}), Partition({1, 1, 1})), Error);
}

TEST_CASE("Springer block for GL_2") {
  const BlockData b = build_springer_block_a(2);
  REQUIRE(b.labels.size() == 2);
  const auto triv = static_cast<Eigen::Index>(*b.label_index("2"));
  const auto sgn = static_cast<Eigen::Index>(*b.label_index("1,1"));
  CHECK(b.omega(triv, triv) == HalfLaurent(1));
  CHECK(b.omega(triv, sgn) == t(-1));
  CHECK(b.omega(sgn, triv) == t(-1));
  CHECK(b.omega(sgn, sgn) == HalfLaurent(1));
  CHECK(b.orbits[*b.orbit_index("2")].dim == 2);
  CHECK(b.orbits[*b.orbit_index("1,1")].dim == 0);
  CHECK(validate_block(b).empty());
}

TEST_CASE("Springer blocks validate and have the expected shape") {
  const BlockData b3 = build_springer_block_a(3);
  CHECK(validate_block(b3).empty());
  CHECK(b3.omega(static_cast<Eigen::Index>(*b3.label_index("3")),
                 static_cast<Eigen::Index>(*b3.label_index("1,1,1"))) == t(-3));
  for (int n = 1; n <= 6; ++n) {
    const BlockData b = build_springer_block_a(n);
    CHECK(validate_block(b).empty());
    CHECK(b.labels.size() == partitions_of(n).size());
    const auto sgn = static_cast<Eigen::Index>(*b.label_index(Partition(std::vector<int>(n, 1)).id()));
    CHECK(b.omega(sgn, sgn) == HalfLaurent(1));
    for (const auto& l : b.labels) CHECK(l.dual == l.id);
  }
  CHECK(build_springer_block_a(6).labels.size() == 11);
  CHECK_THROWS_AS(build_springer_block_a(0), Error);
  CHECK_THROWS_AS(build_springer_block_a(kSpringerBlockMaxN + 1), Error);
}

TEST_CASE("closure order of the Springer block is dominance") {
  const BlockData b = build_springer_block_a(6);
  const OrbitPoset poset(b);
  for (std::size_t i = 0; i < b.orbits.size(); ++i)
    for (std::size_t j = 0; j < b.orbits.size(); ++j) {
      const Partition a = Partition::parse(b.orbits[i].id);
      const Partition c = Partition::parse(b.orbits[j].id);
      CHECK(poset.below(i, j) == (i != j && dominates(c, a)));
    }
}

TEST_CASE("linear extensions respect the closure order") {
  const BlockData b = build_springer_block_a(6);
  const OrbitPoset poset(b);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto order = poset.linear_extension(seed);
    REQUIRE(order.size() == b.orbits.size());
    for (std::size_t x = 0; x < order.size(); ++x)
      for (std::size_t y = x + 1; y < order.size(); ++y) CHECK_FALSE(poset.below(order[y], order[x]));
  }
  CHECK(poset.linear_extension() == poset.linear_extension());
}

TEST_CASE("singleton cuspidal block") {
  const BlockData b = singleton_cuspidal_block("c", 2, t(-2) * (t(2) - 1));
  CHECK(validate_block(b).empty());
  CHECK(b.omega(0, 0) == HalfLaurent(1) - t(-2));
}

TEST_CASE("validation reports each defect") {
  const BlockData good = build_springer_block_a(3);

  BlockData asym = good;
  asym.omega(0, 1) += 1;
  CHECK(has(validate_block(asym), ViolationKind::SymmetryViolation));

  BlockData dims = good;
  dims.orbits[*dims.orbit_index("1,1,1")].dim = 9;
  CHECK(has(validate_block(dims), ViolationKind::DimNotMonotone));

  BlockData negative = good;
  negative.orbits[*negative.orbit_index("1,1,1")].dim = -1;
  CHECK(has(validate_block(negative), ViolationKind::NegativeDim));

  BlockData unknown_orbit = good;
  unknown_orbit.labels[0].orbit = "nowhere";
  CHECK(has(validate_block(unknown_orbit), ViolationKind::UnknownOrbit));

  BlockData unknown_cover = good;
  unknown_cover.orbits[0].covers.push_back("nowhere");
  CHECK(has(validate_block(unknown_cover), ViolationKind::UnknownCover));

  BlockData cycle = good;
  cycle.orbits[*cycle.orbit_index("1,1,1")].covers.push_back("3");
  CHECK(has(validate_block(cycle), ViolationKind::CoverCycle));

  BlockData duplicate = good;
  duplicate.labels[1].id = duplicate.labels[0].id;
  CHECK(has(validate_block(duplicate), ViolationKind::DuplicateId));

  BlockData bad_dual = good;
  bad_dual.labels[0].dual = "nope";
  CHECK(has(validate_block(bad_dual), ViolationKind::UnknownLabel));

  BlockData moves = good;
  moves.labels[0].dual = moves.labels[1].id;
  moves.labels[1].dual = moves.labels[0].id;
  CHECK(has(validate_block(moves), ViolationKind::DualChangesOrbit));

  BlockData not_involution = singleton_cuspidal_block("x", 0, HalfLaurent(1));
  not_involution.labels.push_back({"b", "O", "l", "c"});
  not_involution.labels.push_back({"c", "O", "l", "c"});
  not_involution.omega_order = {"cusp", "b", "c"};
  not_involution.omega = PolyMatrix::Identity(3, 3);
  CHECK(has(validate_block(not_involution), ViolationKind::DualNotInvolution));

  BlockData shape = good;
  shape.omega = PolyMatrix::Zero(2, 2);
  CHECK(has(validate_block(shape), ViolationKind::ShapeMismatch));

  BlockData empty;
  empty.name = "empty";
  CHECK(has(validate_block(empty), ViolationKind::EmptyBlock));
}

TEST_CASE("validation requires ω invariant under the duality") {
  BlockData b = singleton_cuspidal_block("pair", 0, HalfLaurent(1));
  b.labels = {{"u", "O", "a", "v"}, {"v", "O", "b", "u"}};
  b.omega_order = {"u", "v"};
  b.omega = PolyMatrix::Identity(2, 2);
  CHECK(validate_block(b).empty());
  b.omega(0, 0) = 2;
  CHECK(has(validate_block(b), ViolationKind::DualInvarianceViolation));
}

TEST_CASE("shipped datasets") {
  CHECK(violations_of("springer_a2.json").empty());
  CHECK(violations_of("springer_a3.json").empty());
  CHECK(violations_of("synthetic_dual.json").empty());
  CHECK(violations_of("multi_block.json").empty());
  CHECK(violations_of("singular_lambda.json").empty());
  CHECK(has(violations_of("asymmetric.json"), ViolationKind::SymmetryViolation));
  CHECK(has(violations_of("non_monotone_dims.json"), ViolationKind::DimNotMonotone));
  CHECK(has(violations_of("cross_block_nonzero.json"), ViolationKind::CrossBlockNonzero));
}

TEST_CASE("cross-block rules") {
  BlockData a = singleton_cuspidal_block("A", 0, HalfLaurent(1));
  BlockData b = singleton_cuspidal_block("B", 0, HalfLaurent(1));
  b.labels[0].id = b.labels[0].dual = "other";
  b.omega_order = {"other"};
  CHECK(validate_dataset(std::vector<BlockData>{a, b}).empty());

  // Same label id in two blocks.
  CHECK(has(validate_dataset(std::vector<BlockData>{a, a}), ViolationKind::DuplicateId));

  a.omega_order = {"cusp", "other"};
  a.omega = PolyMatrix::Identity(2, 2);
  CHECK(validate_dataset(std::vector<BlockData>{a, b}).empty());
  // Validated alone, the foreign label is unknown.
  CHECK(has(validate_block(a), ViolationKind::UnknownLabel));
  a.omega(0, 1) = a.omega(1, 0) = t(1);
  CHECK(has(validate_dataset(std::vector<BlockData>{a, b}), ViolationKind::CrossBlockNonzero));
}
