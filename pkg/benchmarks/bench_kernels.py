"""Time the jitted and pure-numpy paths of the hot kernels side by side.

The iteration error series (successive multiplication by a fixed factor,
spectral norm of the deviation at every step) dominates the runtime of
convergence reports.  Small ambient dimensions are loop-overhead bound
and benefit from the JIT; large ones are BLAS/LAPACK bound and the two
paths converge.

Run:  python3 benchmarks/bench_kernels.py
"""

import time

import numpy as np

from sumspaces import _kernels
from sumspaces.iteration import _oracle_subspace, sum_of_projections
from sumspaces.subspaces import SubspaceFamily, orthonormalize


def family_inputs(rng, d, n_members, member_dim):
    members = tuple(
        orthonormalize(rng.normal(size=(d, member_dim))) for _ in range(n_members)
    )
    f = SubspaceFamily(d, members)
    m_fac = np.ascontiguousarray(np.eye(d) - sum_of_projections(f))
    q = _oracle_subspace(f).basis
    p = q @ q.T
    target = np.ascontiguousarray((p + p.T) / 2.0)
    return m_fac, target


def best_of(fn, repeats=5):
    best = np.inf
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def run_case(name, m_fac, target, n_steps):
    paths = [("numpy", _kernels.error_series_numpy, _kernels.power_chain_numpy)]
    if _kernels.NUMBA_ENABLED:
        paths.append(("numba", _kernels.error_series_jit, _kernels.power_chain_jit))
        # trigger compilation outside the timed region
        _kernels.error_series_jit(m_fac, target, 2)
        _kernels.power_chain_jit(m_fac, 2)

    results = {}
    for label, series, chain in paths:
        t_series = best_of(lambda: series(m_fac, target, n_steps))
        t_chain = best_of(lambda: chain(m_fac, n_steps))
        results[label] = (t_series, t_chain)
        print(
            f"{name:<24} {label:<6} error_series {t_series * 1e3:9.3f} ms   "
            f"power_chain {t_chain * 1e3:9.3f} ms"
        )
    if len(results) == 2:
        s_np, c_np = results["numpy"]
        s_nb, c_nb = results["numba"]
        print(
            f"{name:<24} {'ratio':<6} error_series {s_np / s_nb:9.2f} x    "
            f"power_chain {c_np / c_nb:9.2f} x"
        )
    print()


def main():
    print(f"numba path active: {_kernels.NUMBA_ENABLED}")
    print()
    rng = np.random.default_rng(0)
    for name, d, n_members, member_dim, n_steps in [
        ("small  d=8,   N=400", 8, 3, 2, 400),
        ("medium d=40,  N=200", 40, 4, 3, 200),
        ("large  d=240, N=60", 240, 5, 8, 60),
    ]:
        m_fac, target = family_inputs(rng, d, n_members, member_dim)
        run_case(name, m_fac, target, n_steps)


if __name__ == "__main__":
    main()
