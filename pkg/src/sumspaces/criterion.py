"""The spectral criterion r(E) < 1 on the matrix of pairwise angle cosines.

E is symmetric, nonnegative and hollow, so its spectral radius is its
largest eigenvalue.  r(E) < 1 is equivalent to I - E being positive
definite, i.e. to every leading principal minor of I - E being positive;
for three subspaces it is also equivalent to the pairwise minimal angles
summing to more than pi.  All three formulations are computed and cross
checked.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InconsistencyError, NumericalError, WrongArity
from .subspaces import SubspaceFamily, _frozen_array, restricted_norm

# |r(E) - 1| at or below this counts as the boundary: the criterion is
# reported unsatisfied and the equivalence cross-check is suspended.
BOUNDARY_BAND = 1e-9
# Dead zone for the secondary formulations' own decision statistics.
_STAT_DEAD_ZONE = 1e-12
# Construction-time tolerance for symmetry / hollowness / nonnegativity.
_ENTRY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class EMatrix:
    """Symmetric hollow nonnegative matrix of pairwise angle cosines."""

    n: int
    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError(f"entries must be square, got {entries.shape}")
        if self.n != entries.shape[0] or self.n < 1:
            raise ValueError(f"n={self.n} does not match shape {entries.shape}")
        if np.abs(np.diag(entries)).max() > _ENTRY_TOL:
            raise ValueError("diagonal entries must be zero")
        if np.abs(entries - entries.T).max() > _ENTRY_TOL:
            raise ValueError("entries must be symmetric")
        if entries.min() < -_ENTRY_TOL:
            raise ValueError("entries must be nonnegative")
        # canonicalize: exact symmetry, exact zeros where only noise was
        entries = (entries + entries.T) / 2.0
        np.fill_diagonal(entries, 0.0)
        entries[entries < 0.0] = 0.0
        object.__setattr__(self, "entries", _frozen_array(entries))


@dataclass(frozen=True)
class CriterionReport:
    """Joint result of the three formulations of the spectral test.

    ``satisfied`` is True only when the spectral radius is below 1 and
    outside the boundary band; on the band ``boundary`` is set and the
    test is conservatively reported as failed.  ``margin`` is
    1 - spectral_radius.  ``angle_sum`` is filled only for three
    subspaces with all cosines at most 1.
    """

    spectral_radius: float
    satisfied: bool
    leading_minors: tuple
    angle_sum: float | None
    margin: float
    boundary: bool


def build_e_matrix(f: SubspaceFamily) -> EMatrix:
    """Measure the optimal pairwise angle cosines of a family."""
    n = f.n
    entries = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            v = restricted_norm(f.members[i], f.members[j])
            entries[i, j] = v
            entries[j, i] = v
    return EMatrix(n, entries)


def e_matrix_with_bounds(f: SubspaceFamily, bounds) -> EMatrix:
    """EMatrix from user-supplied upper bounds on the angle cosines.

    Any entrywise upper bound of the measured cosines is a valid input to
    the criterion; looser bounds only weaken it.  Entries below the
    measured value (beyond 1e-9) are rejected.
    """
    e = EMatrix(f.n, bounds)
    measured = build_e_matrix(f)
    deficit = measured.entries - e.entries
    if deficit.max() > 1e-9:
        i, j = np.unravel_index(np.argmax(deficit), deficit.shape)
        raise ValueError(
            f"bound at ({i},{j}) is {e.entries[i, j]}, below the measured "
            f"cosine {measured.entries[i, j]}"
        )
    return e


def spectral_radius(e: EMatrix) -> float:
    """Largest eigenvalue of E, which equals its spectral radius.

    The returned eigenpair is residual-checked against the matrix.
    """
    w, v = np.linalg.eigh(e.entries)
    lam = float(w[-1])
    vec = v[:, -1]
    resid = float(np.linalg.norm(e.entries @ vec - lam * vec))
    scale = float(np.abs(e.entries).max())
    if resid > 1e-10 * e.n * max(scale, 1e-300):
        raise NumericalError(
            f"eigenpair residual {resid:.3e} out of tolerance"
        )
    return lam


def leading_minors(e: EMatrix):
    """Leading principal minors of I - E, for orders 1..n."""
    g = np.eye(e.n) - e.entries
    return [float(np.linalg.det(g[:m, :m])) for m in range(1, e.n + 1)]


def three_subspace_angle_test(e: EMatrix) -> bool:
    """For three subspaces: do the pairwise minimal angles sum to > pi?"""
    if e.n != 3:
        raise WrongArity(f"angle-sum test needs exactly 3 subspaces, got {e.n}")
    off = np.array([e.entries[0, 1], e.entries[1, 2], e.entries[2, 0]])
    if off.max() > 1.0:
        raise ValueError("angle-sum test needs all cosines in [0, 1]")
    return float(np.arccos(off).sum()) > np.pi


def evaluate_criterion(e: EMatrix) -> CriterionReport:
    """Run all applicable formulations of the test and cross-check them.

    Outside the boundary band the formulations must agree; a disagreement
    means a numerical bug and raises InconsistencyError.  Statistics that
    sit within 1e-12 of their own decision point are excluded from the
    cross-check (they carry no sign information at double precision).
    """
    r = spectral_radius(e)
    minors = leading_minors(e)
    angle_sum = None
    if e.n == 3 and e.entries.max() <= 1.0:
        off = np.array([e.entries[0, 1], e.entries[1, 2], e.entries[2, 0]])
        angle_sum = float(np.arccos(off).sum())

    boundary = abs(r - 1.0) <= BOUNDARY_BAND
    satisfied = (r < 1.0) and not boundary

    if not boundary:
        by_radius = r < 1.0
        if min(abs(m) for m in minors) > _STAT_DEAD_ZONE:
            by_minors = all(m > 0.0 for m in minors)
            if by_minors != by_radius:
                raise InconsistencyError(
                    f"minor test ({by_minors}) disagrees with spectral "
                    f"radius {r}"
                )
        if angle_sum is not None and abs(angle_sum - np.pi) > _STAT_DEAD_ZONE:
            by_angles = angle_sum > np.pi
            if by_angles != by_radius:
                raise InconsistencyError(
                    f"angle-sum test ({by_angles}) disagrees with spectral "
                    f"radius {r}"
                )

    return CriterionReport(
        spectral_radius=r,
        satisfied=satisfied,
        leading_minors=tuple(minors),
        angle_sum=angle_sum,
        margin=1.0 - r,
        boundary=boundary,
    )
