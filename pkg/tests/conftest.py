import pytest

import frechet


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # compile the jit kernels once up front so test timings measure logic
    u = frechet.gen_curve("noisy-polygon", 4, seed=1)
    v = frechet.gen_curve("noisy-polygon", 3, seed=2)
    for fn in frechet.CLOSED_ALGORITHMS.values():
        fn(u, v)
    frechet.witness_coupling(u, v, frechet.frechet_closed_sort(u, v))
