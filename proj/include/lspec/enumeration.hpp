#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lspec/numeric.hpp"
#include "lspec/partition.hpp"

namespace lspec {

/// Rooted plane tree in preorder: child_counts[v] is the number of children
/// of the v-th vertex visited depth-first (children left to right), labels[v]
/// its label in [1, ℓ].
struct LabelledPlaneTree {
  std::vector<int> child_counts;
  std::vector<int> labels;

  std::size_t vertex_count() const noexcept { return child_counts.size(); }
  /// parent()[v] for v > 0; parent()[0] = -1.
  std::vector<int> parents() const;

  friend bool operator==(const LabelledPlaneTree&, const LabelledPlaneTree&) = default;
  friend auto operator<=>(const LabelledPlaneTree&, const LabelledPlaneTree&) = default;
};

/// True iff the sequence is the preorder child-count word of exactly one
/// rooted plane tree.
bool is_plane_tree_word(std::span<const int> child_counts);

/// Structure is valid, labels are in [1, ℓ] and every edge {u, v} has
/// (c(u), c(v)) in λ.
bool is_lambda_plane_tree(const Partition& p, const LabelledPlaneTree& tree);

struct MomentTable {
  Partition partition;
  std::vector<Integer> counts;    // C_0 .. C_kmax
  std::vector<Rational> moments;  // C_k / ℓ
};

/// C_k for k <= kmax from the rooted-count recurrence over blocks.
MomentTable count_recurrence(const Partition& p, int kmax);

/// Sum over weak compositions of k+1 of t(ℓ_1..ℓ_r) a_1^{ℓ_1}...a_r^{ℓ_r};
/// k = 0 returns ℓ.
Integer count_summation(std::span<const int> heights, int k);

/// Refined r-plane tree count t(ℓ_1, ..., ℓ_r) by the single-product form.
Integer refined_count_single_product(std::span<const int> composition);
/// The same count by the two-product (Okoth-Wagner) form.
Integer refined_count_two_product(std::span<const int> composition);
/// Both forms; throws std::logic_error if they differ.  Requires Σ >= 2.
Integer refined_count(std::span<const int> composition);

/// C_k a_1^{k+1} 2F1(-k-1, -k; k; a_2/a_1) as an exact terminating sum.
Integer count_fat_hook(int a1, int a2, int k);

inline constexpr double kDefaultBruteBudget = 1e8;

/// ℓ^{k+1} Catalan(k), the number of arbitrarily labelled plane trees.
double brute_force_bound(const Partition& p, int k);

/// Visits every λ-plane tree on k+1 vertices in lexicographic order of
/// (structure, labels).  Throws BudgetExceeded when the bound exceeds budget.
void for_each_lambda_plane_tree(const Partition& p, int k,
                                const std::function<void(const LabelledPlaneTree&)>& visit,
                                double budget = kDefaultBruteBudget);

std::vector<LabelledPlaneTree> enumerate_brute(const Partition& p, int k,
                                               double budget = kDefaultBruteBudget);

Integer count_brute(const Partition& p, int k, double budget = kDefaultBruteBudget);

/// m_k = C_k / ℓ, k = 0..kmax.
std::vector<Rational> moments(const Partition& p, int kmax);

}  // namespace lspec
