"""Spectra of lambda-shaped random matrices.

Partitions are passed as lists of parts (largest first); self-conjugate
shapes can also be built from block heights with :func:`from_heights`.
Exact integers come back as Python ints and exact rationals as
:class:`fractions.Fraction`.
"""

from ._core import (
    BudgetExceeded,
    ConvergenceError,
    UsageError,
    analytic_law,
    cauchy_equation,
    conjugate,
    count_brute,
    count_fat_hook,
    count_paths,
    count_summation,
    count_trees,
    enumerate_trees,
    fat_hook_cubic,
    fat_hook_density,
    fat_hook_density_closed_form,
    fat_hook_density_continuation,
    fat_hook_support,
    from_heights,
    generic_null_space_dim,
    gram_eigenvalues,
    heights,
    kernel_dim,
    moment_equation,
    moments,
    null_space_dim,
    parse_partition,
    path_to_tree,
    r_transform,
    refined_count,
    s_transform,
    simulate,
    stieltjes_density,
    support_edges,
    tree_to_path,
    validate_path,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
