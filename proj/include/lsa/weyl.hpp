#pragma once

// Character-level data for finite (relative) Weyl groups.
//
// Polynomials in the auxiliary variable q reuse HalfLaurent with integer
// exponents, so q^k is stored under the doubled key 2k exactly like t^k.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lsa/laurent.hpp"
#include "lsa/partition.hpp"

namespace lsa {

struct ConjugacyClass {
  Partition cycle_type;
  BigInt size;
};

/// One entry per partition of n, in partitions_of order; size = n!/z_ρ.
std::vector<ConjugacyClass> conjugacy_classes(int n);

/// Irreducible character χ_λ of S_n at cycle type ρ (Murnaghan–Nakayama).
/// Throws SizeMismatch when |λ| != |ρ|.
std::int64_t mn_character(const Partition& lambda, const Partition& rho);

/// det(1 - q w) for w of cycle type ρ acting by permutations: Π_i (1 - q^{ρ_i}).
HalfLaurent perm_molien_det(const Partition& rho);

/// Character table of a finite group acting on a vector space. Values are
/// indexed by class position.
struct CharTable {
  struct Class {
    std::string id;
    BigInt size;
    HalfLaurent molien_det;  // det(1 - q w) in q
  };
  struct Character {
    std::string id;
    std::vector<std::int64_t> values;
  };

  BigInt group_order;
  std::vector<Class> classes;
  std::vector<Character> irreducibles;

  /// Throws UnknownLabel.
  std::size_t char_index(std::string_view id) const;
  /// Dimension of the representation the Molien determinants come from.
  int rank() const;
  /// Character degree χ(1), read at the identity class (det = (1-q)^rank).
  std::int64_t degree(std::size_t char_idx) const;
  std::size_t identity_class() const;
};

/// Human-readable invariant violations; empty when the table is consistent
/// (class sizes sum to the order, first orthogonality, Molien determinants
/// with constant term 1 and degree equal to the rank).
std::vector<std::string> validate_table(const CharTable& table);

/// Full S_n table on the permutation representation; character ids are
/// partition ids, class ids are cycle-type ids.
CharTable char_table_sn(int n);

/// (1/|W|) Σ_classes size·χ·ψ / det(1 - q w), reduced.
RationalHL molien_sum(const CharTable& table, std::size_t chi, std::size_t psi);

/// Π_j (1 - q^{d_j}) over the fundamental invariant degrees, obtained as the
/// reciprocal of the Molien series of the invariants. Throws InvalidTable if
/// the invariant ring is not polynomial (reciprocal not a polynomial).
HalfLaurent invariant_degree_product(const CharTable& table);

/// Π_j (1 - q^{d_j}) · molien_sum(χ, ψ): the graded multiplicity pairing on
/// the coinvariant algebra. Throws NonExactDivision for an invalid table.
HalfLaurent coinvariant_pairing(const CharTable& table, std::string_view chi, std::string_view psi);

/// All pairs at once, in irreducibles order; symmetric.
DenseMatrix<HalfLaurent> coinvariant_pairing_matrix(const CharTable& table);

}  // namespace lsa
