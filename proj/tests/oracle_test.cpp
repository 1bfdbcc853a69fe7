#include <algorithm>

#include "doctest.h"
#include "lsa/oracle.hpp"
#include "lsa/weyl.hpp"
#include "support.hpp"

using namespace lsa;

namespace {

HalfLaurent q(int k) { return HalfLaurent::t_pow(k); }

Partition p(std::vector<int> parts) { return Partition(std::move(parts)); }

// Number of standard Young tableaux by the hook length formula.
BigInt hook_count(const Partition& shape) {
  BigInt num = 1;
  for (int i = 2; i <= shape.size(); ++i) num *= i;
  BigInt den = 1;
  const Partition conj = shape.transpose();
  for (int r = 0; r < shape.length(); ++r)
    for (int c = 0; c < shape.part(r); ++c) den *= (shape.part(r) - c - 1) + (conj.part(c) - r - 1) + 1;
  return num / den;
}

}  // namespace

TEST_CASE("tableau enumeration") {
  auto one = ssyt_enumerate(p({2}), p({1, 1}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].rows == std::vector<std::vector<int>>{{1, 2}});

  CHECK(ssyt_enumerate(p({2, 1}), p({1, 1, 1})).size() == 2);
  for (const auto& lambda : partitions_of(5)) {
    const auto only = ssyt_enumerate(lambda, lambda);
    REQUIRE(only.size() == 1);
    CHECK(is_semistandard(only[0]));
  }
  // Content not dominated by the shape gives nothing.
  CHECK(ssyt_enumerate(p({2, 2}), p({3, 1})).empty());
  CHECK_THROWS_AS(ssyt_enumerate(p({2}), p({1, 1, 1})), Error);

  for (int n = 1; n <= 6; ++n) {
    const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& lambda : partitions_of(n)) {
      const auto all = ssyt_enumerate(lambda, ones);
      CHECK(BigInt(all.size()) == hook_count(lambda));
      for (const auto& tab : all) CHECK(is_semistandard(tab));
    }
  }
}

TEST_CASE("semistandard check") {
  Tableau bad{{{1, 1}, {1}}, p({2, 1}), p({3})};
  CHECK_FALSE(is_semistandard(bad));
  Tableau good{{{1, 1}, {2}}, p({2, 1}), p({2, 1})};
  CHECK(is_semistandard(good));
  Tableau wrong_content{{{1, 2}, {2}}, p({2, 1}), p({2, 1})};
  CHECK_FALSE(is_semistandard(wrong_content));
}

TEST_CASE("reading word and charge") {
  Tableau tab{{{1, 2}, {3}}, p({2, 1}), p({1, 1, 1})};
  CHECK(reading_word(tab) == std::vector<int>{3, 1, 2});
  CHECK(charge(Tableau{{{1, 2}}, p({2}), p({1, 1})}) == 1);
  CHECK(charge(std::vector<int>{1, 1, 1}) == 0);
  CHECK(charge(std::vector<int>{2, 1}) == 0);
  CHECK(charge(std::vector<int>{1, 2, 3}) == 3);
  CHECK(charge(std::vector<int>{3, 2, 1}) == 0);

  std::vector<int> charges;
  for (const auto& t : ssyt_enumerate(p({2, 1}), p({1, 1, 1}))) charges.push_back(charge(t));
  std::sort(charges.begin(), charges.end());
  CHECK(charges == std::vector<int>{1, 2});
}

TEST_CASE("Kostka-Foulkes polynomials") {
  CHECK(kostka_foulkes(p({2}), p({1, 1})) == q(1));
  CHECK(kostka_foulkes(p({2, 1}), p({1, 1, 1})) == q(1) + q(2));
  CHECK(kostka_foulkes(p({3}), p({1, 1, 1})) == q(3));
  for (const auto& lambda : partitions_of(5)) CHECK(kostka_foulkes(lambda, lambda) == HalfLaurent(1));

  // n = 4 values from the standard table.
  CHECK(kostka_foulkes(p({3, 1}), p({2, 1, 1})) == q(1) + q(2));
  CHECK(kostka_foulkes(p({2, 2}), p({1, 1, 1, 1})) == q(2) + q(4));
  CHECK(kostka_foulkes(p({3, 1}), p({1, 1, 1, 1})) == q(3) + q(4) + q(5));
  CHECK(kostka_foulkes(p({2, 1, 1}), p({1, 1, 1, 1})) == q(1) + q(2) + q(3));
  CHECK(kostka_foulkes(p({4}), p({1, 1, 1, 1})) == q(6));
  CHECK(kostka_foulkes(p({2, 2}), p({2, 1, 1})) == q(1));
  CHECK(kostka_foulkes(p({3, 1}), p({2, 2})) == q(1));
  CHECK(kostka_foulkes(p({2, 2}), p({3, 1})).is_zero());
}

TEST_CASE("Kostka-Foulkes general identities") {
  for (int n = 1; n <= 6; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& mu : parts) {
      // K_{(n), μ} = q^{n(μ)}.
      CHECK(kostka_foulkes(Partition({n}), mu) == q(mu.n_statistic()));
      BigInt total = 0;
      for (const auto& lambda : parts) {
        const HalfLaurent k = kostka_foulkes(lambda, mu);
        CHECK(k.eval_at_one() == BigInt(ssyt_enumerate(lambda, mu).size()));
        if (!k.is_zero()) {
          CHECK(k.max_exponent2() == 2 * (mu.n_statistic() - lambda.n_statistic()));
          for (const auto& [e, c] : k.terms()) CHECK(c > 0);
        }
        total += k.eval_at_one() * hook_count(lambda);
      }
      // Σ_λ K_{λμ}(1) f^λ = multinomial coefficient n! / Π μ_i!.
      BigInt multinomial = 1;
      for (int i = 2; i <= n; ++i) multinomial *= i;
      for (int part : mu.parts())
        for (int i = 2; i <= part; ++i) multinomial /= i;
      CHECK(total == multinomial);
    }
  }
}
