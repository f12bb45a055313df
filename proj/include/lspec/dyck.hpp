#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lspec/enumeration.hpp"
#include "lspec/numeric.hpp"
#include "lspec/partition.hpp"

namespace lspec {

struct PathStep {
  int i = 0;  // row
  int j = 0;  // column
  int h = 0;  // height
  friend bool operator==(const PathStep&, const PathStep&) = default;
};

/// A λ-path (i_t, j_t, h_t), t = 0..2k.
///
/// Length-zero convention: a single-vertex tree labelled c is the one-triple
/// path (c, c, 0) when (c, c) is a cell; otherwise steps is empty and
/// root_label carries c.  root_label is 0 in every other case.
struct LambdaDyckPath {
  std::vector<PathStep> steps;
  int root_label = 0;

  /// k, i.e. half the number of moves.
  std::size_t half_length() const noexcept {
    return steps.empty() ? 0 : (steps.size() - 1) / 2;
  }
  friend bool operator==(const LambdaDyckPath&, const LambdaDyckPath&) = default;
};

enum class PathViolation {
  none,
  // malformed step lists
  empty,
  odd_move_count,
  non_unit_height_step,
  // semantic violations
  cell_outside_shape,
  row_changed_on_odd_step,
  column_changed_on_even_step,
  height_not_dyck,
  endpoints_differ,
  unbalanced_excursion,
};

struct PathCheck {
  PathViolation clause = PathViolation::none;
  std::size_t time = 0;
  std::string message;

  bool valid() const noexcept { return clause == PathViolation::none; }
  bool malformed() const noexcept {
    return clause == PathViolation::empty || clause == PathViolation::odd_move_count ||
           clause == PathViolation::non_unit_height_step;
  }
};

const char* to_string(PathViolation v);

/// Reports the earliest violation (smallest time, then clause order).
PathCheck validate_path(const Partition& p, const LambdaDyckPath& path);

/// Contour-walk image of a λ-plane tree.  Throws UsageError for invalid trees.
LambdaDyckPath tree_to_path(const Partition& p, const LabelledPlaneTree& tree);

/// Inverse map.  Throws UsageError carrying the validation message.
LabelledPlaneTree path_to_tree(const Partition& p, const LambdaDyckPath& path);

/// Number of λ-Dyck paths of length 2k, by depth-first search over moves.
/// The budget caps the number of search nodes.
Integer count_paths(const Partition& p, int k, double budget = kDefaultBruteBudget);

}  // namespace lspec
