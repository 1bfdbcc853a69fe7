#pragma once

// One block of the orthogonal decomposition of equivariant sheaves on the
// nilpotent cone: its simple labels, the orbit closure poset, the duality
// involution on labels, and the input matrix ω.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lsa/laurent.hpp"
#include "lsa/partition.hpp"

namespace lsa {

struct OrbitInfo {
  std::string id;
  int dim = 0;                      // complex dimension
  std::vector<std::string> covers;  // orbits immediately below in closure order
};

struct SimpleLabel {
  std::string id;
  std::string orbit;
  std::string local_system;
  std::string dual;
};

struct BlockData {
  std::string name;
  nlohmann::json provenance = nlohmann::json::object();
  std::vector<OrbitInfo> orbits;
  std::vector<SimpleLabel> labels;
  /// Row/column labels of omega. Must contain every label of the block; may
  /// also name labels of other blocks in the same dataset, whose entries
  /// against this block must vanish.
  std::vector<std::string> omega_order;
  PolyMatrix omega;

  std::optional<std::size_t> label_index(std::string_view id) const;
  std::optional<std::size_t> orbit_index(std::string_view id) const;
};

/// ω restricted to the block's own labels, rows and columns in `labels` order.
PolyMatrix own_omega(const BlockData& block);

enum class ViolationKind {
  EmptyBlock,
  DuplicateId,
  UnknownOrbit,
  UnknownLabel,
  UnknownCover,
  CoverCycle,
  DimNotMonotone,
  NegativeDim,
  DualNotInvolution,
  DualChangesOrbit,
  ShapeMismatch,
  SymmetryViolation,
  DualInvarianceViolation,
  CrossBlockNonzero,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string block;
  std::string detail;
};

/// Strict closure order on the orbits of a block, built from the covers.
class OrbitPoset {
 public:
  /// Throws InvalidBlock when covers name unknown orbits or form a cycle.
  explicit OrbitPoset(const BlockData& block);

  std::size_t size() const noexcept { return dims_.size(); }
  int dim(std::size_t orbit) const { return dims_.at(orbit); }
  /// True iff orbit a lies in the boundary of the closure of orbit b.
  bool below(std::size_t a, std::size_t b) const { return less_[a * size() + b] != 0; }

  /// Minimal orbits first. Without a seed, ties go to the smallest index;
  /// with a seed, ties are broken uniformly at random.
  std::vector<std::size_t> linear_extension(std::optional<std::uint64_t> seed = std::nullopt) const;

 private:
  std::vector<int> dims_;
  std::vector<char> less_;
};

/// Empty iff the block satisfies every structural invariant (ids, covers,
/// dimension monotonicity, duality, ω shape, symmetry, and duality
/// invariance). Labels of other blocks in omega_order are reported as
/// UnknownLabel; use validate_dataset for multi-block files.
std::vector<Violation> validate_block(const BlockData& block);

/// Validates each block and the cross-block rules: label ids unique across
/// blocks, and ω entries pairing labels of different blocks are zero.
std::vector<Violation> validate_dataset(std::span<const BlockData> blocks);

/// n^2 - Σ_j (λᵀ_j)^2. Throws SizeMismatch when |λ| != n.
int orbit_dim_type_a(const Partition& lambda, int n);

/// Dominance order. Throws SizeMismatch when the sizes differ.
bool dominates(const Partition& lambda, const Partition& mu);

/// Largest n accepted by build_springer_block_a.
inline constexpr int kSpringerBlockMaxN = 10;

/// The Springer block of GL_n: labels are partitions of n (χ_λ on the orbit of
/// Jordan type λ, trivial local systems, identity duality), closure order is
/// dominance, and ω is the coinvariant pairing at q = t^{-1}.
BlockData build_springer_block_a(int n);

/// A one-label block for a cuspidal datum with L = G.
BlockData singleton_cuspidal_block(std::string name, int orbit_dim, const HalfLaurent& omega);

}  // namespace lsa
