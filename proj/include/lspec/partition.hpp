#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lspec {

/// A Young diagram, stored both as its part list and in multirectangular
/// coordinates (heights a, strictly decreasing bases b).
///
/// Rows, columns, labels and block indices are 1-based throughout the
/// public API, matching cell notation (i, j).  Immutable after construction.
class Partition {
 public:
  /// Throws UsageError unless parts is nonempty, positive and non-increasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  const std::vector<int>& heights() const noexcept { return heights_; }
  const std::vector<int>& bases() const noexcept { return bases_; }
  /// Block index of every row: block_map()[i-1] = f(i).
  const std::vector<int>& block_map() const noexcept { return block_map_; }

  int length() const noexcept { return static_cast<int>(parts_.size()); }
  std::int64_t size() const noexcept { return size_; }
  int blocks() const noexcept { return static_cast<int>(heights_.size()); }

  /// λ_i, or 0 past the last row.
  int part(int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }
  int block_of(int row) const { return block_map_.at(row - 1); }

  /// Plain cell test j <= λ_i; false for out-of-range indices.
  bool contains(int i, int j) const noexcept {
    return i >= 1 && j >= 1 && j <= part(i);
  }

  bool is_self_conjugate() const noexcept { return self_conjugate_; }

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<int> parts_;
  std::vector<int> heights_;
  std::vector<int> bases_;
  std::vector<int> block_map_;
  std::int64_t size_ = 0;
  bool self_conjugate_ = false;
};

/// Parses "p1,p2,...,pk" (spaces tolerated).  Errors name the 1-based
/// position of the offending entry.
Partition parse_partition(std::string_view text);

/// Parses a height vector "a1,...,ar" of positive integers.
std::vector<int> parse_heights(std::string_view text);

Partition conjugate(const Partition& p);

/// ((a_1+...+a_r)^{a_1}, (a_1+...+a_{r-1})^{a_2}, ..., a_1^{a_r}).
Partition self_conjugate_from_heights(std::span<const int> heights);

/// Throws UsageError("partition is not self-conjugate") when needed.
void require_self_conjugate(const Partition& p);

/// Cell membership for a self-conjugate shape.  Evaluates both j <= λ_i and
/// the block-map criterion f(i) + f(j) <= r + 1 and throws std::logic_error
/// if they disagree.  Indices must lie in [1, ℓ].
bool contains_cell(const Partition& p, int i, int j);

Partition dilate(const Partition& p, int factor);

bool is_minimal(const Partition& p);

/// #{i : λ_i < ℓ - i + 1}.
int null_space_dim_by_rows(const Partition& p);
/// Σ_{j=2}^r max{0, min{a_{>=j} - a_{<=r-j+1}, a_j}}; self-conjugate only.
int null_space_dim_by_blocks(const Partition& p);
/// Both formulas; throws std::logic_error if they disagree.  They match the
/// generic kernel only for r <= 2: rows of equal length share their columns,
/// e.g. (4,2,1,1) gives 2 here but has generic kernel dimension 1.
int null_space_dim(const Partition& p);

/// Generic kernel dimension of a matrix with independent continuous entries
/// on the cells of p: ℓ minus the largest non-attacking rook placement,
/// found greedily from the shortest row.  Any partition.
int generic_null_space_dim(const Partition& p);

}  // namespace lspec
