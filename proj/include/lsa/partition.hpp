#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace lsa {

/// An integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws InconsistentInput unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  /// The i-th part, zero past the end.
  int part(int i) const noexcept { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  Partition transpose() const;
  /// n(λ) = Σ (i-1) λ_i.
  int n_statistic() const;

  /// Comma-separated parts, e.g. "2,1,1"; the empty partition is "".
  std::string id() const;
  static Partition parse(std::string_view text);

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in reverse lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

}  // namespace lsa
