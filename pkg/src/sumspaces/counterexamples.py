"""Block families of lines realizing a boundary angle matrix (r(E) = 1).

For any symmetric hollow nonnegative E with spectral radius 1 and any
alpha in (0, 1), the matrix I - alpha*E is a Gram matrix of n unit vectors
whose pairwise inner products are -alpha*e_ij.  Stacking the line families
of K such factors block-diagonally, with alphas increasing towards 1,
yields a family whose measured pairwise cosines are alpha_K * e_ij and
whose concatenated-basis operator has smallest squared singular value
1 - alpha_K.  Each truncation is linearly independent with
well-conditioned sum; the conditioning degenerates as alpha_K -> 1, which
is the finite witness that the limiting family's sum fails to be closed.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .criterion import EMatrix, spectral_radius
from .errors import NotBoundary, NotPositiveDefinite, NumericalError, VerificationFailed
from .subspaces import Subspace, SubspaceFamily, _frozen_array, restricted_norm, sum_operator

# |r(E) - 1| accepted as "boundary" for the construction.
BOUNDARY_TOL = 1e-9
# Entrywise tolerance on the per-block Gram factorization residual.
GRAM_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class CounterexampleSpec:
    """Input to the construction: boundary matrix plus block schedule.

    A matrix with spectral radius above 1 (beyond tolerance) is rescaled
    by 1/r on construction, with a warning; one with radius below 1 is
    rejected, since then the criterion holds and no counterexample exists.
    """

    e: EMatrix
    alphas: tuple
    K: int = 0

    def __post_init__(self):
        alphas = tuple(float(a) for a in self.alphas)
        if len(alphas) < 1:
            raise ValueError("need at least one block")
        if not all(0.0 < a < 1.0 for a in alphas):
            raise ValueError("all alphas must lie strictly between 0 and 1")
        if any(b <= a for a, b in zip(alphas, alphas[1:])):
            raise ValueError("alphas must be strictly increasing")
        if self.K and self.K != len(alphas):
            raise ValueError(f"K={self.K} but {len(alphas)} alphas given")

        r = spectral_radius(self.e)
        e = self.e
        if r > 1.0 + BOUNDARY_TOL:
            warnings.warn(
                f"spectral radius {r:.12g} exceeds 1; rescaling entries by 1/r",
                stacklevel=2,
            )
            e = EMatrix(self.e.n, self.e.entries / r)
            r = spectral_radius(e)
        if abs(r - 1.0) > BOUNDARY_TOL:
            raise NotBoundary(
                f"spectral radius {r:.12g} is not 1 within tolerance; "
                "the construction needs a boundary matrix"
            )
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "K", len(alphas))


@dataclass(frozen=True, eq=False)
class CounterexampleFamily:
    """Constructed family with its per-block unit vectors and eigenvector.

    ``family`` has n members of dimension K in R^(n*K); block k occupies
    coordinates [k*n, (k+1)*n).  ``block_vectors[k]`` is the n x n matrix
    whose column i is the block-k unit vector of member i.  ``c`` is the
    unit eigenvector with E c = c used by the degeneration witness.
    """

    family: SubspaceFamily
    block_vectors: tuple
    c: np.ndarray

    def __post_init__(self):
        object.__setattr__(
            self, "block_vectors", tuple(_frozen_array(v) for v in self.block_vectors)
        )
        object.__setattr__(self, "c", _frozen_array(self.c))


@dataclass(frozen=True)
class PairNorm:
    i: int
    j: int
    measured: float
    target: float


@dataclass(frozen=True)
class CounterexampleVerification:
    """Outcome of the four construction checks.

    ``pairs`` compares each measured pairwise cosine with its target
    alpha_K * e_ij.  ``combination_residuals[k]`` is the deviation of the
    squared norm of the c-weighted combination of block-k vectors from
    1 - alpha_k.  ``sigma_min_sq`` at most ``degeneration_limit``
    (= 1 - alpha_K, up to tolerance) exhibits the degenerating frame
    bound, while ``sigma_min`` > 0 confirms the truncation itself is
    linearly independent.
    """

    pairs: tuple
    combination_residuals: tuple
    sigma_min: float
    sigma_min_sq: float
    degeneration_limit: float
    linearly_independent: bool
    passed: bool


def principal_eigenvector(e: EMatrix) -> np.ndarray:
    """Unit vector c with E c = c, for a boundary matrix.

    Sign convention: the first coordinate of magnitude above 1e-12 is
    positive.
    """
    r = spectral_radius(e)
    if abs(r - 1.0) > BOUNDARY_TOL:
        raise NotBoundary(f"spectral radius {r:.12g} is not 1 within tolerance")
    w, v = np.linalg.eigh(e.entries)
    c = v[:, -1]
    for x in c:
        if abs(x) > 1e-12:
            if x < 0:
                c = -c
            break
    resid = float(np.linalg.norm(e.entries @ c - c))
    if resid > 1e-9:
        raise NumericalError(f"eigenvector residual {resid:.3e} out of tolerance")
    return c


def gram_vectors(e: EMatrix, alpha: float) -> np.ndarray:
    """Unit vectors in R^n whose Gram matrix is I - alpha*E.

    Returned as the columns of the symmetric square root of I - alpha*E
    (deterministic; any factor with unit columns would do).  Pairwise
    inner products are -alpha*e_ij and the collection is linearly
    independent since the least eigenvalue of the Gram matrix is
    1 - alpha * r(E) > 0.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie strictly between 0 and 1, got {alpha}")
    g = np.eye(e.n) - alpha * e.entries
    w, u = np.linalg.eigh(g)
    if w[0] <= 0.0:
        raise NotPositiveDefinite(
            f"I - alpha*E has least eigenvalue {w[0]:.3e}; "
            "alpha is too large for this matrix"
        )
    v = (u * np.sqrt(w)) @ u.T
    resid = np.abs(v.T @ v - g).max()
    if resid > GRAM_TOL:
        raise NumericalError(f"Gram factorization residual {resid:.3e}")
    return v


def build_counterexample(spec: CounterexampleSpec) -> CounterexampleFamily:
    """Assemble the K-block family for the given boundary matrix.

    Member i collects the i-th unit vector of every block, one per
    column, each supported on its own n coordinates; the columns are
    therefore orthonormal and each member is a valid K-dimensional
    subspace of R^(n*K).
    """
    n, big_k = spec.e.n, spec.K
    c = principal_eigenvector(spec.e)
    blocks = [gram_vectors(spec.e, a) for a in spec.alphas]

    d = n * big_k
    members = []
    for i in range(n):
        basis = np.zeros((d, big_k))
        for k, v in enumerate(blocks):
            basis[k * n:(k + 1) * n, k] = v[:, i]
        members.append(Subspace(d, basis))
    family = SubspaceFamily(d, tuple(members))
    return CounterexampleFamily(family, tuple(blocks), c)


def verify_counterexample(
    cf: CounterexampleFamily, spec: CounterexampleSpec
) -> CounterexampleVerification:
    """Check a constructed family against its defining identities.

    Verifies (a) measured pairwise cosines equal alpha_K * e_ij, (b) the
    squared norm of the c-weighted combination in each block equals
    1 - alpha_k, (c) the squared least singular value of the
    concatenated-basis operator is at most 1 - alpha_K, and (d) it is
    still positive.  Raises VerificationFailed naming the first violated
    check; the exception carries the full record.
    """
    e = spec.e
    n = e.n
    alpha_max = spec.alphas[-1]
    failures = []

    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            measured = restricted_norm(cf.family.members[i], cf.family.members[j])
            target = alpha_max * e.entries[i, j]
            pairs.append(PairNorm(i=i, j=j, measured=measured, target=target))
            if abs(measured - target) > 1e-9:
                failures.append(
                    f"pair ({i},{j}): measured cosine {measured} vs target {target}"
                )

    combo_residuals = []
    for k, (alpha, v) in enumerate(zip(spec.alphas, cf.block_vectors)):
        norm_sq = float(np.sum((v @ cf.c) ** 2))
        resid = abs(norm_sq - (1.0 - alpha))
        combo_residuals.append(resid)
        if resid > 1e-10:
            failures.append(
                f"block {k}: combination norm^2 off by {resid:.3e} from {1.0 - alpha}"
            )

    svals = np.linalg.svd(sum_operator(cf.family), compute_uv=False)
    sigma_min = float(svals[-1])
    sigma_min_sq = sigma_min ** 2
    limit = 1.0 - alpha_max
    if sigma_min_sq > limit + 1e-9:
        failures.append(
            f"sigma_min^2 = {sigma_min_sq} exceeds the degeneration limit {limit}"
        )
    independent = sigma_min > 0.0
    if not independent:
        failures.append("sigma_min is not positive: truncation is not independent")

    record = CounterexampleVerification(
        pairs=tuple(pairs),
        combination_residuals=tuple(combo_residuals),
        sigma_min=sigma_min,
        sigma_min_sq=sigma_min_sq,
        degeneration_limit=limit,
        linearly_independent=independent,
        passed=not failures,
    )
    if failures:
        raise VerificationFailed(failures[0], record=record)
    return record


def geometric_alphas(big_k: int) -> tuple:
    """Default block schedule 1 - 2^-k for k = 1..K."""
    if big_k < 1:
        raise ValueError(f"need at least one block, got {big_k}")
    return tuple(1.0 - 2.0 ** -k for k in range(1, big_k + 1))
