#include "lspec/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lspec/errors.hpp"

namespace lspec {

std::vector<int> LabelledPlaneTree::parents() const {
  std::vector<int> parent(child_counts.size(), -1);
  std::vector<std::pair<int, int>> stack;  // (vertex, children still to attach)
  for (int v = 0; v < static_cast<int>(child_counts.size()); ++v) {
    if (!stack.empty()) {
      parent[v] = stack.back().first;
      if (--stack.back().second == 0) stack.pop_back();
    }
    if (child_counts[v] > 0) stack.emplace_back(v, child_counts[v]);
  }
  return parent;
}

bool is_plane_tree_word(std::span<const int> child_counts) {
  if (child_counts.empty()) return false;
  long open = 1;
  for (std::size_t v = 0; v < child_counts.size(); ++v) {
    if (child_counts[v] < 0 || open <= 0) return false;
    open += child_counts[v] - 1;
  }
  return open == 0;
}

bool is_lambda_plane_tree(const Partition& p, const LabelledPlaneTree& tree) {
  if (!is_plane_tree_word(tree.child_counts)) return false;
  if (tree.labels.size() != tree.child_counts.size()) return false;
  for (int label : tree.labels)
    if (label < 1 || label > p.length()) return false;
  const auto parent = tree.parents();
  for (std::size_t v = 1; v < parent.size(); ++v)
    if (!p.contains(tree.labels[parent[v]], tree.labels[v])) return false;
  return true;
}

MomentTable count_recurrence(const Partition& p, int kmax) {
  require_self_conjugate(p);
  if (kmax < 0) throw UsageError("kmax must be >= 0");
  const auto& a = p.heights();
  const int r = p.blocks();
  // rooted[q][k]: trees on k+1 vertices whose root label lies in block q+1.
  std::vector<std::vector<Integer>> rooted(r, std::vector<Integer>(kmax + 1));
  // forest[q][k]: Σ over admissible child blocks s of a_s * rooted[s][k].
  std::vector<std::vector<Integer>> forest(r, std::vector<Integer>(kmax + 1));
  auto update_forest = [&](int k) {
    for (int q = 0; q < r; ++q) {
      Integer sum = 0;
      for (int s = 0; s + q <= r - 1; ++s) sum += a[s] * rooted[s][k];
      forest[q][k] = sum;
    }
  };
  for (int q = 0; q < r; ++q) rooted[q][0] = 1;
  update_forest(0);
  for (int k = 1; k <= kmax; ++k) {
    for (int q = 0; q < r; ++q) {
      Integer sum = 0;
      for (int n = 0; n < k; ++n) sum += rooted[q][n] * forest[q][k - 1 - n];
      rooted[q][k] = std::move(sum);
    }
    update_forest(k);
  }
  MomentTable table{p, {}, {}};
  for (int k = 0; k <= kmax; ++k) {
    Integer total = 0;
    for (int q = 0; q < r; ++q) total += a[q] * rooted[q][k];
    table.moments.emplace_back(total, p.length());
    table.counts.push_back(std::move(total));
  }
  return table;
}

namespace {

void check_composition(std::span<const int> composition) {
  if (composition.empty()) throw UsageError("empty composition");
  long total = 0;
  for (int part : composition) {
    if (part < 0) throw UsageError("negative composition entry");
    total += part;
  }
  if (total < 2) throw UsageError("refined count needs at least two vertices");
}

// Prefix sums with 1-based accessors ℓ_{<=i} and ℓ_{>=i}.
struct CompositionSums {
  explicit CompositionSums(std::span<const int> c) : prefix(c.size() + 1, 0) {
    for (std::size_t i = 0; i < c.size(); ++i) prefix[i + 1] = prefix[i] + c[i];
  }
  long at_most(int i) const { return prefix[i]; }
  long at_least(int i) const { return prefix.back() - prefix[i - 1]; }
  long total() const { return prefix.back(); }
  std::vector<long> prefix;
};

Integer divide_by_k(const Integer& product, long k, const char* form) {
  if (product % k != 0)
    throw std::logic_error(std::string("non-integral refined count (") + form + ")");
  return product / k;
}

}  // namespace

Integer refined_count_single_product(std::span<const int> composition) {
  check_composition(composition);
  const int r = static_cast<int>(composition.size());
  const CompositionSums sums(composition);
  const long k = sums.total() - 1;
  const int half_up = (r + 1) / 2;
  Integer product = 1;
  for (int j = 1; j <= r && product != 0; ++j) {
    const long upper = sums.at_least(j) + sums.at_most(r - j + 1) - 1 - (j <= half_up ? 1 : 0);
    product *= binomial(upper, composition[j - 1]);
  }
  return divide_by_k(product, k, "single product");
}

Integer refined_count_two_product(std::span<const int> composition) {
  check_composition(composition);
  const int r = static_cast<int>(composition.size());
  const CompositionSums sums(composition);
  const long k = sums.total() - 1;
  Integer product = 1;
  for (int j = 1; j <= (r + 1) / 2; ++j)
    product *= binomial(sums.at_least(j) + sums.at_most(r - j + 1) - 2, composition[j - 1]);
  for (int j = 1; j <= r / 2; ++j)
    product *= binomial(sums.at_most(j) + sums.at_least(r - j + 1) - 1, composition[r - j]);
  return divide_by_k(product, k, "two product");
}

Integer refined_count(std::span<const int> composition) {
  Integer single = refined_count_single_product(composition);
  if (single != refined_count_two_product(composition))
    throw std::logic_error("refined count forms disagree");
  return single;
}

Integer count_summation(std::span<const int> heights, int k) {
  if (k < 0) throw UsageError("k must be >= 0");
  if (heights.empty()) throw UsageError("empty height vector");
  for (int a : heights)
    if (a <= 0) throw UsageError("heights must be positive");
  if (k == 0) return Integer(std::accumulate(heights.begin(), heights.end(), 0L));
  const int r = static_cast<int>(heights.size());
  std::vector<int> composition(r, 0);
  Integer total = 0;
  // Odometer over weak compositions of k+1 into r parts, last part implied.
  auto visit = [&](auto&& self, int index, int remaining) -> void {
    if (index == r - 1) {
      composition[index] = remaining;
      Integer term = refined_count_single_product(composition);
      if (term == 0) return;
      for (int q = 0; q < r; ++q) term *= ipow(Integer(heights[q]), composition[q]);
      total += term;
      return;
    }
    for (int part = 0; part <= remaining; ++part) {
      composition[index] = part;
      self(self, index + 1, remaining - part);
    }
  };
  visit(visit, 0, k + 1);
  return total;
}

Integer count_fat_hook(int a1, int a2, int k) {
  if (a1 < 1 || a2 < 1) throw UsageError("fat hook heights must be >= 1");
  if (k < 0) throw UsageError("k must be >= 0");
  if (k == 0) return Integer(a1 + a2);
  // Σ_j (-k-1)_j (-k)_j / ((k)_j j!) x^j with x = a2/a1; terminates at j = k.
  const Rational x(a2, a1);
  Rational term = 1;
  Rational sum = 1;
  for (int j = 0; j < k; ++j) {
    term *= Rational((-k - 1 + j) * static_cast<long>(-k + j),
                     static_cast<long>(k + j) * (j + 1));
    term *= x;
    sum += term;
  }
  const Rational value = Rational(catalan(k) * ipow(Integer(a1), k + 1)) * sum;
  if (boost::multiprecision::denominator(value) != 1)
    throw std::logic_error("hypergeometric count is not an integer");
  return boost::multiprecision::numerator(value);
}

double brute_force_bound(const Partition& p, int k) {
  return std::pow(static_cast<double>(p.length()), k + 1) * catalan(k).convert_to<double>();
}

void for_each_lambda_plane_tree(const Partition& p, int k,
                                const std::function<void(const LabelledPlaneTree&)>& visit,
                                double budget) {
  require_self_conjugate(p);
  if (k < 0) throw UsageError("k must be >= 0");
  const double bound = brute_force_bound(p, k);
  if (bound > budget)
    throw BudgetExceeded("brute-force enumeration bound " + std::to_string(bound) +
                             " exceeds budget " + std::to_string(budget),
                         bound, budget);
  const int n = k + 1;
  LabelledPlaneTree tree;
  tree.child_counts.assign(n, 0);
  tree.labels.assign(n, 0);
  std::vector<int> parent;

  auto label_from = [&](auto&& self, int v) -> void {
    if (v == n) {
      visit(tree);
      return;
    }
    // Labels allowed next to the parent's label c are exactly 1..λ_c.
    const int limit = v == 0 ? p.length() : p.part(tree.labels[parent[v]]);
    for (int label = 1; label <= limit; ++label) {
      tree.labels[v] = label;
      self(self, v + 1);
    }
  };

  // open = number of announced-but-unvisited vertices after position v.
  auto shape_from = [&](auto&& self, int v, int open) -> void {
    if (v == n) {
      parent = tree.parents();
      label_from(label_from, 0);
      return;
    }
    const int remaining_after = n - v - 1;
    for (int children = 0; children <= remaining_after; ++children) {
      const int next_open = open - 1 + children;
      if (next_open > remaining_after) break;
      if (next_open == 0 && remaining_after > 0) continue;
      tree.child_counts[v] = children;
      self(self, v + 1, next_open);
    }
  };
  shape_from(shape_from, 0, 1);
}

std::vector<LabelledPlaneTree> enumerate_brute(const Partition& p, int k, double budget) {
  std::vector<LabelledPlaneTree> trees;
  for_each_lambda_plane_tree(p, k, [&](const LabelledPlaneTree& t) { trees.push_back(t); },
                             budget);
  return trees;
}

Integer count_brute(const Partition& p, int k, double budget) {
  unsigned long long count = 0;
  for_each_lambda_plane_tree(p, k, [&](const LabelledPlaneTree&) { ++count; }, budget);
  return Integer(count);
}

std::vector<Rational> moments(const Partition& p, int kmax) {
  return count_recurrence(p, kmax).moments;
}

}  // namespace lspec
