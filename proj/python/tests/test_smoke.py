from fractions import Fraction
from math import comb

import numpy as np
import pytest

import lambda_spectra as ls


def test_partition_round_trip():
    assert ls.parse_partition("3,3,2") == [3, 3, 2]
    assert ls.conjugate([4, 2, 1]) == [3, 2, 1, 1]
    assert ls.from_heights([2, 1]) == [3, 3, 2]
    assert ls.heights([3, 3, 2]) == [2, 1]
    with pytest.raises(ValueError):
        ls.parse_partition("1,2")


def test_counts_agree():
    counts = ls.count_trees([2, 1], 6)
    assert counts[:3] == [2, 3, 10]
    for k, c in enumerate(counts):
        assert c == ls.count_summation([1, 1], k) == ls.count_fat_hook(1, 1, k)
    assert ls.count_brute([2, 1], 4) == counts[4]
    staircase = ls.count_trees([3, 2, 1], 8)
    assert all(staircase[k] * (k + 1) == 3 * comb(4 * k, k) for k in range(9))


def test_big_integers_are_exact():
    c = ls.count_trees([4, 3, 2, 1], 30)[30]
    assert c * 31 == 4 * comb(150, 30)
    assert c > 2**64


def test_moments_are_fractions():
    m = ls.moments([2, 1], 2)
    assert m == [1, Fraction(3, 2), 5]
    assert isinstance(m[1], Fraction)


def test_tree_path_round_trip():
    p = [2, 1]
    trees = ls.enumerate_trees(p, 3)
    assert len(trees) == ls.count_trees(p, 3)[3] == ls.count_paths(p, 3)
    for tree in trees:
        steps, root = ls.tree_to_path(p, tree)
        assert ls.validate_path(p, steps, root)[0]
        assert ls.path_to_tree(p, steps, root) == tree
    ok, message = ls.validate_path(p, [[1, 1, 0], [1, 1, 1], [2, 1, 0], [2, 1, 1], [1, 1, 0]])
    assert not ok and "unbalanced" in message


def test_transforms_and_equations():
    r = ls.r_transform([1], 6)
    assert r == [1] * 7
    assert ls.cauchy_equation([2, 1]) == ls.fat_hook_cubic(2, 1) or ls.cauchy_equation([2, 1]) == {
        k: -v for k, v in ls.fat_hook_cubic(2, 1).items()
    }
    s = ls.s_transform([1], 5)
    assert s == [(-1) ** n for n in range(6)]


def test_fat_hook_density():
    support = ls.fat_hook_support(1, 1)
    assert support["z_plus"] == pytest.approx(27 / 4)
    assert support["atom_mass"] == 0
    x = np.linspace(*support["support"], 40)[1:-1]
    closed = np.array([ls.fat_hook_density_closed_form(1, 1, v) for v in x])
    cont = np.array([ls.fat_hook_density_continuation(1, 1, v) for v in x])
    assert np.allclose(closed, cont, rtol=1e-8)
    assert ls.stieltjes_density([1, 1], 2.0) == pytest.approx(ls.fat_hook_density(1, 1, 2.0), rel=1e-4)
    assert np.all(closed > 0)


def test_simulation_matches_first_moments():
    out = ls.simulate([2, 1], N=10, trials=40, seed=7, kmax=2, threads=1)
    assert out["moments"][0] == 1
    assert abs(out["moments"][1] - 1.5) < 4 * out["standard_errors"][1]
    eig = ls.gram_eigenvalues([2, 1], 10, seed=3)
    assert eig.shape == (20,) and np.all(eig >= -1e-9)
    again = ls.simulate([2, 1], N=10, trials=40, seed=7, kmax=2, threads=1)
    assert np.array_equal(out["eigenvalues"], again["eigenvalues"])


def test_kernel_dimensions():
    k = ls.kernel_dim([4, 2, 1, 1], 1, seed=5)
    assert k["numeric"] == k["generic"] == ls.generic_null_space_dim([4, 2, 1, 1]) == 1
    assert ls.null_space_dim([4, 2, 1, 1]) == 2
    assert ls.analytic_law([4, 2, 1, 1])["atom_mass"] == pytest.approx(0.25)


def test_errors_map_to_python():
    with pytest.raises(ls.BudgetExceeded):
        ls.count_brute([3, 3, 2], 8, budget=10.0)
    with pytest.raises(ValueError):
        ls.count_trees([3, 1], 2)
