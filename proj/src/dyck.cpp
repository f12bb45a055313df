#include "lspec/dyck.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "lspec/errors.hpp"

namespace lspec {

const char* to_string(PathViolation v) {
  switch (v) {
    case PathViolation::none: return "none";
    case PathViolation::empty: return "empty step list";
    case PathViolation::odd_move_count: return "odd number of moves";
    case PathViolation::non_unit_height_step: return "height step is not +-1";
    case PathViolation::cell_outside_shape: return "location outside the shape";
    case PathViolation::row_changed_on_odd_step: return "row changed on an odd step";
    case PathViolation::column_changed_on_even_step: return "column changed on an even step";
    case PathViolation::height_not_dyck: return "height is not a Dyck path";
    case PathViolation::endpoints_differ: return "start and end locations differ";
    case PathViolation::unbalanced_excursion: return "unbalanced excursion";
  }
  return "unknown";
}

namespace {

PathCheck violation(PathViolation clause, std::size_t time, std::string detail = {}) {
  PathCheck check{clause, time, to_string(clause)};
  if (!detail.empty()) check.message += " " + detail;
  check.message += " (t=" + std::to_string(time) + ")";
  return check;
}

bool same_location(const PathStep& a, const PathStep& b) { return a.i == b.i && a.j == b.j; }

}  // namespace

PathCheck validate_path(const Partition& p, const LambdaDyckPath& path) {
  require_self_conjugate(p);
  const auto& s = path.steps;
  if (s.empty()) {
    if (path.root_label >= 1 && path.root_label <= p.length() &&
        !p.contains(path.root_label, path.root_label))
      return {};
    return violation(PathViolation::empty, 0);
  }
  if (s.size() % 2 == 0) return violation(PathViolation::odd_move_count, s.size() - 1);
  for (std::size_t t = 1; t < s.size(); ++t)
    if (std::abs(s[t].h - s[t - 1].h) != 1)
      return violation(PathViolation::non_unit_height_step, t);

  std::optional<PathCheck> earliest;
  auto note = [&](PathCheck c) {
    if (!earliest || c.time < earliest->time) earliest = std::move(c);
  };
  const std::size_t last = s.size() - 1;
  // Time-local clauses, scanned in order; the first hit at each t wins.
  for (std::size_t t = 0; t <= last && !earliest; ++t) {
    if (!p.contains(s[t].i, s[t].j)) {
      note(violation(PathViolation::cell_outside_shape, t,
                     "(" + std::to_string(s[t].i) + "," + std::to_string(s[t].j) + ")"));
    } else if (t > 0 && t % 2 == 1 && s[t].i != s[t - 1].i) {
      note(violation(PathViolation::row_changed_on_odd_step, t));
    } else if (t > 0 && t % 2 == 0 && s[t].j != s[t - 1].j) {
      note(violation(PathViolation::column_changed_on_even_step, t));
    } else if (s[t].h < 0 || (t == 0 && s[t].h != 0) || (t == last && s[t].h != 0)) {
      note(violation(PathViolation::height_not_dyck, t));
    }
  }
  if (!same_location(s.front(), s.back()))
    note(violation(PathViolation::endpoints_differ, last));
  // Excursions pair an up-step at a+1 with the first return to h_a at b;
  // balanced means location(a+1) == location(b).
  std::vector<std::size_t> open;
  for (std::size_t t = 1; t <= last; ++t) {
    if (s[t].h > s[t - 1].h) {
      open.push_back(t);
    } else if (!open.empty()) {
      const std::size_t first = open.back();
      open.pop_back();
      if (!same_location(s[first], s[t]))
        note(violation(PathViolation::unbalanced_excursion, t,
                       "at [" + std::to_string(first - 1) + "," + std::to_string(t) + "]"));
    }
  }
  return earliest.value_or(PathCheck{});
}

LambdaDyckPath tree_to_path(const Partition& p, const LabelledPlaneTree& tree) {
  require_self_conjugate(p);
  if (!is_lambda_plane_tree(p, tree)) throw UsageError("not a lambda-plane tree");
  const std::size_t n = tree.vertex_count();
  if (n == 1) {
    const int c = tree.labels[0];
    if (p.contains(c, c)) return {{{c, c, 0}}, 0};
    return {{}, c};
  }
  // Contour walk w_0..w_{2k}: labels c_t and heights h_t.
  std::vector<int> labels{tree.labels[0]};
  std::vector<int> heights{0};
  std::vector<std::pair<int, int>> stack{{0, tree.child_counts[0]}};  // (vertex, unvisited children)
  int next_vertex = 1;
  while (!stack.empty()) {
    auto& [vertex, pending] = stack.back();
    if (pending > 0) {
      --pending;
      const int child = next_vertex++;
      labels.push_back(tree.labels[child]);
      heights.push_back(heights.back() + 1);
      stack.emplace_back(child, tree.child_counts[child]);
    } else {
      stack.pop_back();
      if (stack.empty()) break;
      labels.push_back(tree.labels[stack.back().first]);
      heights.push_back(heights.back() - 1);
    }
  }
  const std::size_t moves = labels.size() - 1;
  LambdaDyckPath path;
  path.steps.resize(moves + 1);
  path.steps[0] = {labels[0], labels[moves - 1], 0};
  for (std::size_t t = 1; t <= moves; ++t) {
    if (t % 2 == 1)
      path.steps[t] = {labels[t - 1], labels[t], heights[t]};
    else
      path.steps[t] = {labels[t], labels[t - 1], heights[t]};
  }
  return path;
}

LabelledPlaneTree path_to_tree(const Partition& p, const LambdaDyckPath& path) {
  const PathCheck check = validate_path(p, path);
  if (!check.valid()) throw UsageError("invalid lambda-Dyck path: " + check.message);
  if (path.steps.empty()) return {{0}, {path.root_label}};
  const auto& s = path.steps;
  LabelledPlaneTree tree{{0}, {s[0].i}};
  std::vector<int> stack{0};
  for (std::size_t t = 1; t < s.size(); ++t) {
    const int label = t % 2 == 1 ? s[t].j : s[t].i;
    if (s[t].h > s[t - 1].h) {
      ++tree.child_counts[stack.back()];
      stack.push_back(static_cast<int>(tree.child_counts.size()));
      tree.child_counts.push_back(0);
      tree.labels.push_back(label);
    } else {
      stack.pop_back();
    }
    if (tree.labels[stack.back()] != label)
      throw std::logic_error("inconsistent vertex label in valid path");
  }
  return tree;
}

Integer count_paths(const Partition& p, int k, double budget) {
  require_self_conjugate(p);
  if (k < 0) throw UsageError("k must be >= 0");
  if (k == 0) return Integer(p.length());
  const int moves = 2 * k;
  std::vector<PathStep> s(moves + 1);
  std::vector<int> open;  // times of unmatched up-steps
  double nodes = 0;
  unsigned long long count = 0;

  auto extend = [&](auto&& self, int t) -> void {
    if (++nodes > budget)
      throw BudgetExceeded("lambda-Dyck path search exceeded node budget", nodes, budget);
    if (t > moves) {
      if (same_location(s[0], s[moves])) ++count;
      return;
    }
    const PathStep& prev = s[t - 1];
    // Down-step: location is forced by the matching up-step.
    if (!open.empty()) {
      const int first = open.back();
      const PathStep target = s[first];
      const bool fits = (t % 2 == 1) ? target.i == prev.i : target.j == prev.j;
      if (fits) {
        s[t] = {target.i, target.j, prev.h - 1};
        open.pop_back();
        self(self, t + 1);
        open.push_back(first);
      }
    }
    // Up-step: needs room to come back down by time 2k.
    if (prev.h + 1 <= moves - t) {
      open.push_back(t);
      if (t % 2 == 1) {
        for (int j = 1; j <= p.part(prev.i); ++j) {
          s[t] = {prev.i, j, prev.h + 1};
          self(self, t + 1);
        }
      } else {
        for (int i = 1; i <= p.part(prev.j); ++i) {  // (i, j) in λ iff i <= λ'_j = λ_j
          s[t] = {i, prev.j, prev.h + 1};
          self(self, t + 1);
        }
      }
      open.pop_back();
    }
  };
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j) {
      s[0] = {i, j, 0};
      extend(extend, 1);
    }
  return Integer(count);
}

}  // namespace lspec
