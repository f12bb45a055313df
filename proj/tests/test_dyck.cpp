#include <doctest.h>

#include <set>
#include <string>

#include "lspec/dyck.hpp"
#include "lspec/errors.hpp"
#include "lspec/json_io.hpp"
#include "oracles.hpp"

using namespace lspec;

namespace {

LabelledPlaneTree fig_tree() {
  return {{3, 1, 0, 2, 2, 0, 0, 0, 0}, {1, 3, 2, 1, 2, 3, 2, 4, 6}};
}

LambdaDyckPath fig_path() {
  return {{{1, 6, 0}, {1, 3, 1}, {2, 3, 2}, {2, 3, 1}, {1, 3, 0}, {1, 1, 1},
           {2, 1, 2}, {2, 3, 3}, {2, 3, 2}, {2, 2, 3}, {2, 2, 2}, {2, 1, 1},
           {4, 1, 2}, {4, 1, 1}, {1, 1, 0}, {1, 6, 1}, {1, 6, 0}},
          0};
}

LabelledPlaneTree from_parents(const std::vector<int>& parent, const std::vector<int>& labels) {
  LabelledPlaneTree t;
  t.child_counts.assign(parent.size(), 0);
  for (std::size_t v = 1; v < parent.size(); ++v) ++t.child_counts[parent[v]];
  t.labels = labels;
  return t;
}

// Definition-level check written independently of validate_path.
bool naive_valid(const std::vector<int>& parts, const std::vector<PathStep>& s) {
  const int n = static_cast<int>(s.size()) - 1;
  for (int t = 0; t <= n; ++t) {
    if (s[t].j > parts[s[t].i - 1] || s[t].h < 0) return false;
    if (t > 0 && (t % 2 ? s[t].i != s[t - 1].i : s[t].j != s[t - 1].j)) return false;
  }
  if (s[0].h || s[n].h || s[0].i != s[n].i || s[0].j != s[n].j) return false;
  for (int a = 0; a < n; ++a) {
    if (s[a + 1].h != s[a].h + 1) continue;
    int b = a + 1;
    while (s[b].h != s[a].h) ++b;
    if (s[a + 1].i != s[b].i || s[a + 1].j != s[b].j) return false;
  }
  return true;
}

long long count_paths_naive(const std::vector<int>& parts, int k) {
  const int ell = static_cast<int>(parts.size());
  std::vector<PathStep> s(2 * k + 1);
  long long total = 0;
  auto rec = [&](auto&& self, int t) -> void {
    if (t == 2 * k + 1) {
      total += naive_valid(parts, s);
      return;
    }
    for (int dh : {1, -1}) {
      const int h = s[t - 1].h + dh;
      if (h < 0 || h > 2 * k + 1 - t) continue;
      for (int x = 1; x <= ell; ++x) {
        s[t] = t % 2 ? PathStep{s[t - 1].i, x, h} : PathStep{x, s[t - 1].j, h};
        if (s[t].j > parts[s[t].i - 1]) continue;
        self(self, t + 1);
      }
    }
  };
  for (int i = 1; i <= ell; ++i)
    for (int j = 1; j <= parts[i - 1]; ++j) {
      s[0] = {i, j, 0};
      rec(rec, 1);
    }
  return total;
}

}  // namespace

TEST_CASE("figure tree and path correspond") {
  auto p = parse_partition("6,3,3,1,1,1");
  CHECK(validate_path(p, fig_path()).valid());
  CHECK(tree_to_path(p, fig_tree()) == fig_path());
  CHECK(path_to_tree(p, fig_path()) == fig_tree());
  CHECK(fig_path().half_length() == 8);
}

TEST_CASE("single cell shape") {
  auto p = parse_partition("1");
  LambdaDyckPath path{{{1, 1, 0}, {1, 1, 1}, {1, 1, 2}, {1, 1, 1}, {1, 1, 0}}, 0};
  CHECK(validate_path(p, path).valid());
  auto t = path_to_tree(p, path);
  CHECK(t.child_counts == std::vector<int>{1, 1, 0});
  CHECK(t.labels == std::vector<int>{1, 1, 1});
}

TEST_CASE("two-vertex trees") {
  auto p = parse_partition("3,3,2");
  for (int x = 1; x <= 3; ++x)
    for (int y = 1; y <= 3; ++y) {
      if (y > p.parts()[x - 1]) continue;
      LabelledPlaneTree t{{1, 0}, {x, y}};
      LambdaDyckPath expected{{{x, y, 0}, {x, y, 1}, {x, y, 0}}, 0};
      CHECK(tree_to_path(p, t) == expected);
      CHECK(path_to_tree(p, expected) == t);
    }
}

TEST_CASE("zero-edge trees") {
  auto p = parse_partition("3,3,2");
  auto diag = tree_to_path(p, LabelledPlaneTree{{0}, {2}});
  CHECK(diag.steps == std::vector<PathStep>{{2, 2, 0}});
  CHECK(path_to_tree(p, diag) == LabelledPlaneTree{{0}, {2}});
  auto off = tree_to_path(p, LabelledPlaneTree{{0}, {3}});
  CHECK(off.steps.empty());
  CHECK(off.root_label == 3);
  CHECK(validate_path(p, off).valid());
  CHECK(path_to_tree(p, off) == LabelledPlaneTree{{0}, {3}});
}

TEST_CASE("violations are reported with their clause") {
  auto p = parse_partition("6,3,3,1,1,1");
  auto path = fig_path();
  CHECK(validate_path(p, LambdaDyckPath{}).clause == PathViolation::empty);

  auto even = path;
  even.steps.pop_back();
  CHECK(validate_path(p, even).clause == PathViolation::odd_move_count);
  CHECK(validate_path(p, even).malformed());

  auto jump = path;
  jump.steps[2].h = 3;
  CHECK(validate_path(p, jump).clause == PathViolation::non_unit_height_step);

  auto outside = path;
  outside.steps[1].j = 4;
  outside.steps[2].j = 4;
  auto c = validate_path(p, outside);
  CHECK(c.clause == PathViolation::cell_outside_shape);
  CHECK(c.time == 2);

  auto row = path;
  row.steps[1].i = 2;
  CHECK(validate_path(p, row).clause == PathViolation::row_changed_on_odd_step);

  // The excursion over [0,2] leaves at (1,1) and comes back at (2,1).
  LambdaDyckPath unbalanced{{{1, 1, 0}, {1, 1, 1}, {2, 1, 0}, {2, 1, 1}, {1, 1, 0}}, 0};
  auto u = validate_path(parse_partition("2,1"), unbalanced);
  CHECK(u.clause == PathViolation::unbalanced_excursion);
  CHECK(u.message.find("unbalanced excursion at [0,2]") != std::string::npos);
  CHECK_THROWS_AS(path_to_tree(parse_partition("2,1"), unbalanced), UsageError);
}

TEST_CASE("round trip and counts for ell <= 4, k <= 5") {
  for (const auto& a : oracle::height_vectors(4)) {
    auto p = self_conjugate_from_heights(a);
    for (int k = 0; k <= 5; ++k) {
      std::set<std::vector<int>> seen;
      std::size_t trees = 0;
      oracle::for_each_tree_naive(p.parts(), k, [&](const auto& parent, const auto& labels) {
        auto t = from_parents(parent, labels);
        auto path = tree_to_path(p, t);
        CHECK(validate_path(p, path).valid());
        CHECK(path_to_tree(p, path) == t);
        std::vector<int> key{path.root_label};
        for (const auto& st : path.steps) key.insert(key.end(), {st.i, st.j, st.h});
        seen.insert(key);
        ++trees;
      });
      CHECK(seen.size() == trees);
      CHECK(count_paths(p, k) == Integer(trees));
    }
  }
}

TEST_CASE("path counts match a definition-level search") {
  CHECK(count_paths(parse_partition("2,1"), 2) == 10);
  CHECK(count_paths(parse_partition("1"), 3) == 5);
  CHECK(count_paths(parse_partition("3,3,2"), 2) == 44);
  for (const auto& a : oracle::height_vectors(3)) {
    auto p = self_conjugate_from_heights(a);
    for (int k = 1; k <= 3; ++k) {
      CHECK(count_paths(p, k) == Integer(count_paths_naive(p.parts(), k)));
      CHECK(count_paths(p, k) == count_recurrence(p, k).counts[k]);
    }
  }
}

TEST_CASE("json round trip") {
  auto tree = fig_tree();
  CHECK(tree_from_json(tree_to_json(tree)) == tree);
  auto path = fig_path();
  CHECK(path_from_json(path_to_json(path)) == path);
  LambdaDyckPath empty{{}, 3};
  CHECK(path_from_json(path_to_json(empty)) == empty);
  CHECK_THROWS_AS(tree_from_json("{\"children\": [1]}"), UsageError);
  CHECK_THROWS_AS(path_from_json("[[1,2]]"), UsageError);
  CHECK_THROWS_AS(path_from_json("not json"), UsageError);
}
