"""Backend selection and numba/numpy kernel agreement."""

import os
import subprocess
import sys

import numpy as np
import pytest

from threesq import backend

numba_impl = pytest.importorskip("threesq._kernels_numba")
from threesq import _kernels_numpy as numpy_impl  # noqa: E402


SCALAR_KERNELS = (
    "r2_table",
    "r3_table",
    "r4_table",
    "n3_table",
    "tri3_table",
    "signed_pair_table",
    "signed_triple_table",
)


@pytest.mark.parametrize("name", SCALAR_KERNELS)
@pytest.mark.parametrize("N", [0, 1, 7, 256])
def test_backends_agree(name, N):
    a = getattr(numba_impl, name)(N)
    b = getattr(numpy_impl, name)(N)
    assert np.array_equal(a, b), (name, N)


@pytest.mark.parametrize("N", [1, 64, 300])
def test_tuple_kernels_agree(N):
    for i, (a, b) in enumerate(zip(numba_impl.solution_tables(N), numpy_impl.solution_tables(N))):
        assert np.array_equal(a, b), ("solution_tables", i)
    for i, (a, b) in enumerate(zip(numba_impl.divisor_tables(N), numpy_impl.divisor_tables(N))):
        assert np.array_equal(a, b), ("divisor_tables", i)


def _spawn_backend(value):
    env = dict(os.environ)
    if value is None:
        env.pop("THREESQ_BACKEND", None)
    else:
        env["THREESQ_BACKEND"] = value
    out = subprocess.run(
        [sys.executable, "-c", "from threesq.backend import active_backend; print(active_backend())"],
        capture_output=True,
        text=True,
        env=env,
    )
    return out.returncode, out.stdout.strip(), out.stderr


def test_env_flag_selects_numpy():
    rc, name, err = _spawn_backend("numpy")
    assert rc == 0, err
    assert name == "numpy"


def test_env_flag_selects_numba():
    rc, name, err = _spawn_backend("numba")
    assert rc == 0, err
    assert name == "numba"


def test_auto_prefers_numba_when_available():
    rc, name, err = _spawn_backend(None)
    assert rc == 0, err
    assert name == "numba"


def test_bad_flag_rejected():
    rc, _, err = _spawn_backend("fortran")
    assert rc != 0
    assert "THREESQ_BACKEND" in err


def test_public_surface():
    assert backend.active_backend() in ("numba", "numpy")
    assert callable(backend.r3_table)
