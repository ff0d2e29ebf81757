"""Toric complexes, their infinite cyclic covers, and Artin kernels."""

from ._core import (
    Complex,
    RefusalError,
    aomoto_betti,
    chen_ranks,
    clique_polynomial,
    cover_ring_dims,
    cut_polynomial,
    finite_dim,
    fixture_names,
    flagification_defect,
    holonomy_dims,
    kernel,
    lcs_ranks,
    monodromy_trivial,
    run_cli,
    strata,
    toric_betti,
    zcover,
)

__all__ = [
    "Complex",
    "RefusalError",
    "aomoto_betti",
    "chen_ranks",
    "clique_polynomial",
    "cover_ring_dims",
    "cut_polynomial",
    "finite_dim",
    "fixture_names",
    "flagification_defect",
    "holonomy_dims",
    "kernel",
    "lcs_ranks",
    "monodromy_trivial",
    "run_cli",
    "strata",
    "toric_betti",
    "zcover",
]
