import os
import subprocess
import sys

from hypothesis import given, strategies as st
import pytest

from vactab import kernels
from vactab.setpart import bell, stirling2
from vactab.tableaux import rsk_permutation, semistandard_tableaux
from vactab.partitions import partitions_up_to

BACKENDS = kernels.backends()
needs_both = pytest.mark.skipif("cython" not in BACKENDS, reason="compiled extension not built")


def test_fallback_is_always_available():
    assert "python" in BACKENDS
    assert kernels.BACKEND in BACKENDS


def test_env_var_forces_pure_python():
    env = dict(os.environ, VACTAB_PURE_PYTHON="1")
    proc = subprocess.run(
        [sys.executable, "-c", "from vactab import kernels; print(kernels.BACKEND)"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.stdout.strip() == "python"


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_histogram_matches_stirling(name):
    mod = BACKENDS[name]
    for n in range(8):
        hist = mod.block_count_histogram(n)
        assert hist == [stirling2(n, r) for r in range(n + 1)]
        assert len(mod.restricted_growth_strings(n)) == bell(n)


@needs_both
def test_insert_parity_exhaustive():
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    for lam in partitions_up_to(5):
        for t in semistandard_tableaux(lam, 3):
            for x in range(1, 6):
                a = py.row_insert(t, x)
                assert cy.row_insert(t, x) == a
                rows, i = a
                assert cy.row_uninsert(rows, i) == py.row_uninsert(rows, i) == (t, x)


@needs_both
@given(st.permutations(range(1, 8)), st.integers(0, 9))
def test_jdt_parity(perm, x):
    p, _ = rsk_permutation(perm)
    assert BACKENDS["cython"].jdt_delete(p, x) == BACKENDS["python"].jdt_delete(p, x)


@needs_both
def test_count_constrained_parity():
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    for n in range(8):
        for lo in range(n + 1):
            for hi in range(1, n + 1):
                for pin, role in [(0, kernels.PIN_NONE)] + [(p, r) for p in range(1, n + 1) for r in (1, 2)]:
                    assert cy.count_constrained(n, lo, hi, pin, role) == py.count_constrained(n, lo, hi, pin, role)


@needs_both
def test_rgs_parity():
    for n in range(7):
        assert BACKENDS["cython"].restricted_growth_strings(n) == BACKENDS["python"].restricted_growth_strings(n)
