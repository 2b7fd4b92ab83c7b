import pytest

from threesq import backend


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # First call of each kernel may JIT-compile (numba backend); keep that
    # out of any timed section.
    backend.r2_table(16)
    backend.r3_table(16)
    backend.r4_table(16)
    backend.n3_table(16)
    backend.tri3_table(16)
    backend.signed_pair_table(16)
    backend.signed_triple_table(16)
    backend.solution_tables(16)
    backend.divisor_tables(16)
