#include <numeric>

#include "doctest.h"
#include "lsa/weyl.hpp"
#include "support.hpp"

using namespace lsa;
using lsa::test::t;

namespace {

HalfLaurent q(int k) { return t(k); }

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Σ_classes size·a·b, which equals |W|·⟨a, b⟩ for real characters.
BigInt inner(const CharTable& table, const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  BigInt sum = 0;
  for (std::size_t c = 0; c < table.classes.size(); ++c) sum += table.classes[c].size * a[c] * b[c];
  return sum;
}

}  // namespace

TEST_CASE("partitions") {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 1; n <= 8; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(counts[n]));
  CHECK(partitions_of(4).front().id() == "4");
  CHECK(partitions_of(4).back().id() == "1,1,1,1");
  CHECK(Partition({3, 1}).transpose() == Partition({2, 1, 1}));
  CHECK(Partition({2, 2, 1}).n_statistic() == 0 * 2 + 1 * 2 + 2 * 1);
  CHECK(Partition::parse("3,2,2") == Partition({3, 2, 2}));
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition::parse("2,x"), Error);
}

TEST_CASE("conjugacy classes") {
  const auto s2 = conjugacy_classes(2);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0].cycle_type == Partition({1, 1}));
  CHECK(s2[0].size == 1);
  CHECK(s2[1].cycle_type == Partition({2}));
  CHECK(s2[1].size == 1);

  const auto s3 = conjugacy_classes(3);
  REQUIRE(s3.size() == 3);
  CHECK(s3[0].size == 1);
  CHECK(s3[1].cycle_type == Partition({2, 1}));
  CHECK(s3[1].size == 3);
  CHECK(s3[2].size == 2);

  for (int n = 1; n <= 7; ++n) {
    BigInt total = 0;
    for (const auto& c : conjugacy_classes(n)) total += c.size;
    CHECK(total == factorial(n));
  }
}

TEST_CASE("Murnaghan-Nakayama values") {
  for (const auto& rho : partitions_of(5)) CHECK(mn_character(Partition({5}), rho) == 1);
  CHECK(mn_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(mn_character(Partition({2, 1}), Partition({2, 1})) == 0);
  CHECK(mn_character(Partition({2, 1}), Partition({3})) == -1);
  // Sign character.
  CHECK(mn_character(Partition({1, 1, 1, 1}), Partition({2, 1, 1})) == -1);
  CHECK(mn_character(Partition({1, 1, 1, 1}), Partition({2, 2})) == 1);
  // Standard representation of S_4: fixed points minus one.
  CHECK(mn_character(Partition({3, 1}), Partition({2, 1, 1})) == 1);
  CHECK(mn_character(Partition({3, 1}), Partition({4})) == -1);
  CHECK(mn_character(Partition({2, 2}), Partition({3, 1})) == -1);
  CHECK(mn_character(Partition({2, 2}), Partition({2, 2})) == 2);
}

TEST_CASE("character tables are orthogonal") {
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    const CharTable table = char_table_sn(n);
    CHECK(validate_table(table).empty());
    CHECK(table.group_order == factorial(n));
    CHECK(table.rank() == n);
    CHECK(table.irreducibles.size() == table.classes.size());
    BigInt sum_sq = 0;
    for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
      sum_sq += BigInt(table.degree(i)) * table.degree(i);
      for (std::size_t j = 0; j < table.irreducibles.size(); ++j)
        CHECK(inner(table, table.irreducibles[i].values, table.irreducibles[j].values) ==
              (i == j ? table.group_order : BigInt(0)));
    }
    CHECK(sum_sq == table.group_order);
  }
  const CharTable s3 = char_table_sn(3);
  CHECK(s3.degree(s3.char_index("3")) == 1);
  CHECK(s3.degree(s3.char_index("2,1")) == 2);
  CHECK(s3.degree(s3.char_index("1,1,1")) == 1);
  CHECK(char_table_sn(5).irreducibles.size() == 7);
  CHECK_THROWS_AS(s3.char_index("4"), Error);
}

TEST_CASE("table validation catches broken tables") {
  CharTable table = char_table_sn(3);
  table.irreducibles[1].values[0] = 3;
  CHECK_FALSE(validate_table(table).empty());

  table = char_table_sn(3);
  table.classes[1].size = 2;
  CHECK_FALSE(validate_table(table).empty());

  table = char_table_sn(3);
  table.classes[0].molien_det = HalfLaurent();
  CHECK_FALSE(validate_table(table).empty());
}

TEST_CASE("Molien determinants") {
  CHECK(perm_molien_det(Partition({1, 1})) == (HalfLaurent(1) - q(1)) * (HalfLaurent(1) - q(1)));
  CHECK(perm_molien_det(Partition({2})) == HalfLaurent(1) - q(2));
  CHECK(perm_molien_det(Partition({3, 1})) == (HalfLaurent(1) - q(3)) * (HalfLaurent(1) - q(1)));
}

TEST_CASE("invariant degrees of the permutation representation") {
  for (int n = 1; n <= 6; ++n) {
    HalfLaurent expected(1);
    for (int d = 1; d <= n; ++d) expected *= HalfLaurent(1) - q(d);
    CHECK(invariant_degree_product(char_table_sn(n)) == expected);
  }
}

TEST_CASE("coinvariant pairing") {
  const CharTable s2 = char_table_sn(2);
  CHECK(coinvariant_pairing(s2, "2", "2") == HalfLaurent(1));
  CHECK(coinvariant_pairing(s2, "2", "1,1") == q(1));
  CHECK(coinvariant_pairing(s2, "1,1", "1,1") == HalfLaurent(1));

  const CharTable s3 = char_table_sn(3);
  CHECK(coinvariant_pairing(s3, "3", "1,1,1") == q(3));
  // Fake degree of the reflection representation of S_3 is q + q^2.
  CHECK(coinvariant_pairing(s3, "3", "2,1") == q(1) + q(2));
  CHECK_THROWS_AS(coinvariant_pairing(s3, "3", "nope"), Error);
}

TEST_CASE("coinvariants carry the regular representation") {
  // At q = 1 the coinvariant algebra is the regular representation, so the
  // pairing of χ and ψ is the multiplicity of the trivial character in
  // χ ⊗ ψ ⊗ reg, which is deg χ · deg ψ.
  for (int n = 1; n <= 6; ++n) {
    const CharTable table = char_table_sn(n);
    const PolyMatrix m = coinvariant_pairing_matrix(table);
    for (std::size_t i = 0; i < table.irreducibles.size(); ++i)
      for (std::size_t j = 0; j < table.irreducibles.size(); ++j) {
        const auto& entry = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        CHECK(entry.eval_at_one() == BigInt(table.degree(i)) * table.degree(j));
        CHECK(entry == m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)));
        if (!entry.is_zero()) {
          CHECK(entry.min_exponent2() >= 0);
          CHECK(entry.max_exponent2() <= n * (n - 1));
        }
      }
  }
}

TEST_CASE("pairing with the trivial character is the fake degree") {
  // q^{n(λ)} [n]_q! / Π_{hooks} [h]_q, computed here with exact division.
  auto q_int = [](int m) {
    HalfLaurent f;
    for (int i = 0; i < m; ++i) f += q(i);
    return f;
  };
  for (int n = 1; n <= 6; ++n) {
    const CharTable table = char_table_sn(n);
    for (const auto& lambda : partitions_of(n)) {
      HalfLaurent num = q(lambda.n_statistic());
      for (int i = 1; i <= n; ++i) num *= q_int(i);
      HalfLaurent den(1);
      const Partition conj = lambda.transpose();
      for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda.part(r); ++c) den *= q_int(lambda.part(r) - c + conj.part(c) - r - 1);
      CHECK(coinvariant_pairing(table, std::to_string(n), lambda.id()) == exact_div(num, den));
    }
  }
}
