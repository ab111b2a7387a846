"""Randomized invariant suite: >= 200 parameter draws, N <= 12."""

from property_grid import BOUNDS, run_grid


def test_randomized_invariant_grid():
    n_run, worst, failures = run_grid()
    assert n_run >= 200
    assert not failures, f"{len(failures)} invariant violations, first: {failures[0]}"
    for key, bound in BOUNDS.items():
        assert worst[key] <= bound, (key, worst[key], bound)
