"""Coin-walker step operator, Kraus generators, and exact walk evolution.

Three tracing schemes are supported:

* prompt  -- the coin is traced after every step; the walk is a biased
  classical random walk and distributions are binomial.
* global  -- the coin is traced once, after all steps; distributions come
  from a single completely positive map with two Kraus generators.
* delayed -- the coin is traced every m steps; the walk iterates a fixed
  CP map whose Kraus generators are those of an m-step global walk.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

import numpy as np

from .laurent import IDENTITY, CoinBlock, E_MINUS, E_PLUS, LaurentOperator

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
NEGATIVE_DUST = 1e-12
DIAGONAL_FLOOR = -1e-10


class KrausCompletenessError(ValueError):
    """Raised when a proposed Kraus family fails the completeness relation."""


def coin_matrix(p: float) -> np.ndarray:
    """The one-parameter real unitary coin [[sqrt(p), sqrt(1-p)], [sqrt(1-p), -sqrt(p)]]."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"coin bias must lie in [0, 1], got {p}")
    sp, sq = np.sqrt(p), np.sqrt(1.0 - p)
    return np.array([[sp, sq], [sq, -sp]], dtype=complex)


@dataclass(frozen=True, eq=False)
class WalkConfig:
    """Coin parameters and initial coin state for a walk started at the origin.

    Either ``p`` (the standard one-parameter coin) or ``coin`` (an arbitrary
    2x2 unitary) must be given, not both.
    """

    c: complex
    d: complex
    p: float | None = None
    coin: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        if (self.p is None) == (self.coin is None):
            raise ValueError("specify exactly one of p or coin")
        if abs(abs(self.c) ** 2 + abs(self.d) ** 2 - 1.0) > 1e-12:
            raise ValueError("initial coin amplitudes must satisfy |c|^2 + |d|^2 = 1")
        if self.p is not None:
            if not 0.0 <= self.p <= 1.0:
                raise ValueError(f"coin bias must lie in [0, 1], got {self.p}")
        else:
            u = np.asarray(self.coin, dtype=complex)
            if u.shape != (2, 2):
                raise ValueError("coin must be a 2x2 matrix")
            if np.max(np.abs(u @ u.conj().T - np.eye(2))) > 1e-12:
                raise ValueError("coin matrix is not unitary")
            u.setflags(write=False)
            object.__setattr__(self, "coin", u)

    @classmethod
    def symmetric(cls, p: float = 0.5) -> "WalkConfig":
        """The canonical symmetric initialization c = 1/sqrt(2), d = i/sqrt(2)."""
        s = 1.0 / np.sqrt(2.0)
        return cls(c=s, d=1j * s, p=p)

    @property
    def coin_unitary(self) -> np.ndarray:
        if self.coin is not None:
            return self.coin
        return coin_matrix(self.p)


class SiteDistribution:
    """A finite-support probability distribution over integer lattice sites."""

    __slots__ = ("_probs",)

    def __init__(self, probs: Mapping[int, float], *, sum_tol: float = 1e-12):
        clean: dict[int, float] = {}
        total = 0.0
        for site, prob in probs.items():
            prob = float(prob)
            if prob < -NEGATIVE_DUST:
                raise ValueError(f"negative probability {prob} at site {site}")
            if prob > 0.0:
                clean[int(site)] = prob
                total += prob
        if abs(total - 1.0) > sum_tol:
            raise ValueError(f"probabilities sum to {total}, not 1")
        self._probs = clean

    @classmethod
    def delta(cls, site: int = 0) -> "SiteDistribution":
        return cls({site: 1.0})

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._probs))

    def __getitem__(self, site: int) -> float:
        return self._probs.get(site, 0.0)

    def __len__(self) -> int:
        return len(self._probs)

    def items(self) -> Iterator[tuple[int, float]]:
        return iter(sorted(self._probs.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{s}: {p:.6g}" for s, p in self.items())
        return f"SiteDistribution({{{body}}})"

    def to_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        sites = np.array(self.support, dtype=int)
        probs = np.array([self._probs[s] for s in sites], dtype=float)
        return sites, probs

    def probabilities(self) -> np.ndarray:
        return np.array([p for _, p in self.items()])

    def distance(self, other: "SiteDistribution") -> float:
        sites = set(self._probs) | set(other._probs)
        return max((abs(self[s] - other[s]) for s in sites), default=0.0)

    def total_variation(self, other: "SiteDistribution") -> float:
        sites = set(self._probs) | set(other._probs)
        return 0.5 * sum(abs(self[s] - other[s]) for s in sites)


class DensityMatrix:
    """A walker density matrix on a finite site window.

    Stored as a dense complex array over the window together with the site
    index of the first row/column; entries are addressed by lattice site.
    """

    __slots__ = ("_mat", "_lo")

    def __init__(self, mat: np.ndarray, lo: int, *, validate: bool = True):
        mat = np.asarray(mat, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError("density matrix must be square")
        mat, lo = _trim_window(mat, lo)
        if validate:
            if np.max(np.abs(mat - mat.conj().T)) > HERMITICITY_TOL:
                raise ValueError("density matrix is not Hermitian")
            if abs(np.trace(mat).real - 1.0) > TRACE_TOL:
                raise ValueError(f"trace is {np.trace(mat).real}, not 1")
            if np.min(np.diag(mat).real) < -NEGATIVE_DUST:
                raise ValueError("negative diagonal entry beyond tolerance")
        mat.setflags(write=False)
        self._mat = mat
        self._lo = int(lo)

    @classmethod
    def delta(cls, site: int = 0) -> "DensityMatrix":
        return cls(np.array([[1.0 + 0j]]), site)

    @classmethod
    def from_entries(cls, entries: Mapping[tuple[int, int], complex]) -> "DensityMatrix":
        sites = sorted({i for i, _ in entries} | {j for _, j in entries})
        lo, hi = sites[0], sites[-1]
        n = hi - lo + 1
        mat = np.zeros((n, n), dtype=complex)
        for (i, j), v in entries.items():
            mat[i - lo, j - lo] = v
        return cls(mat, lo)

    @property
    def site_range(self) -> tuple[int, int]:
        return self._lo, self._lo + self._mat.shape[0] - 1

    def entry(self, i: int, j: int) -> complex:
        lo, hi = self.site_range
        if not (lo <= i <= hi and lo <= j <= hi):
            return 0j
        return self._mat[i - lo, j - lo]

    @property
    def trace(self) -> float:
        return float(np.trace(self._mat).real)

    def hermiticity_defect(self) -> float:
        return float(np.max(np.abs(self._mat - self._mat.conj().T)))

    def to_entries(self, tol: float = 0.0) -> dict[tuple[int, int], complex]:
        out = {}
        lo = self._lo
        rows, cols = np.nonzero(np.abs(self._mat) > tol)
        for r, c in zip(rows, cols):
            out[(r + lo, c + lo)] = self._mat[r, c]
        return out

    def diagonal(self) -> SiteDistribution:
        """Site occupation probabilities from the diagonal.

        Negative floating dust is clamped to zero; anything below -1e-10
        is treated as a genuine positivity failure.
        """
        diag = np.diag(self._mat).real.copy()
        if np.min(diag, initial=0.0) < DIAGONAL_FLOOR:
            raise ValueError(f"diagonal entry {np.min(diag)} below {DIAGONAL_FLOOR}")
        diag[diag < 0.0] = 0.0
        total = diag.sum()
        if abs(total - 1.0) < 1e-10 and total > 0.0:
            diag /= total
        return SiteDistribution(
            {self._lo + k: v for k, v in enumerate(diag) if v > 0.0}
        )

    def dense(self) -> np.ndarray:
        return self._mat.copy()


def _trim_window(mat: np.ndarray, lo: int) -> tuple[np.ndarray, int]:
    mask = np.abs(mat) > 0.0
    if not mask.any():
        return np.zeros((1, 1), dtype=complex), lo
    rows = np.nonzero(mask.any(axis=1))[0]
    cols = np.nonzero(mask.any(axis=0))[0]
    a = int(min(rows[0], cols[0]))
    b = int(max(rows[-1], cols[-1]))
    return np.ascontiguousarray(mat[a : b + 1, a : b + 1]), lo + a


# -- step operator and Kraus generators -------------------------------------


def build_step_operator(config: WalkConfig) -> CoinBlock:
    """The one-step coin-walker unitary as a 2x2 block of shift operators."""
    u = config.coin_unitary
    return CoinBlock(
        ((u[0, 0] * E_PLUS, u[0, 1] * E_PLUS),
         (u[1, 0] * E_MINUS, u[1, 1] * E_MINUS))
    )


def kraus_pair(config: WalkConfig, n: int) -> tuple[LaurentOperator, LaurentOperator]:
    """Kraus generators of the n-step globally traced walk.

    A0 picks the coin-0 row of the n-step block power applied to the initial
    coin state; A1 the coin-1 row.  Together they satisfy the completeness
    relation in both operator orders (they are normal).
    """
    if n < 0:
        raise ValueError(f"step count must be nonnegative, got {n}")
    block = build_step_operator(config).power(n)
    if block.max_degree() > n:
        raise AssertionError("operator support escaped the light cone")
    a0 = config.c * block[0, 0] + config.d * block[0, 1]
    a1 = config.c * block[1, 0] + config.d * block[1, 1]
    return a0, a1


def kraus_delayed(config: WalkConfig, m: int) -> tuple[LaurentOperator, LaurentOperator]:
    """Kraus generators of one period of the delayed tracing scheme."""
    if m < 1:
        raise ValueError(f"trace period must be at least 1, got {m}")
    return kraus_pair(config, m)


# -- distributions ----------------------------------------------------------


def global_trajectory(config: WalkConfig, n: int) -> list[SiteDistribution]:
    """Site distributions of the globally traced walk for steps 0..n.

    Computed by direct evolution of the joint coin-walker amplitudes, a
    deliberately different code path from the Laurent-coefficient kernels.
    """
    if n < 0:
        raise ValueError(f"step count must be nonnegative, got {n}")
    u = config.coin_unitary
    size = 2 * n + 1
    psi = np.zeros((2, size), dtype=complex)
    psi[0, n] = config.c
    psi[1, n] = config.d
    out = [_amplitude_distribution(psi, offset=n)]
    for _ in range(n):
        up = np.zeros(size, dtype=complex)
        down = np.zeros(size, dtype=complex)
        up[1:] = u[0, 0] * psi[0, :-1] + u[0, 1] * psi[1, :-1]
        down[:-1] = u[1, 0] * psi[0, 1:] + u[1, 1] * psi[1, 1:]
        psi = np.stack([up, down])
        out.append(_amplitude_distribution(psi, offset=n))
    return out


def _amplitude_distribution(psi: np.ndarray, offset: int) -> SiteDistribution:
    probs = np.abs(psi[0]) ** 2 + np.abs(psi[1]) ** 2
    return SiteDistribution(
        {k - offset: p for k, p in enumerate(probs) if p > 0.0}
    )


def global_distribution(config: WalkConfig, n: int) -> SiteDistribution:
    """Distribution after n steps with a single final trace of the coin."""
    return global_trajectory(config, n)[-1]


def prompt_step_probabilities(config: WalkConfig) -> tuple[float, float]:
    """Right/left step probabilities of the promptly traced (classical) walk."""
    u = config.coin_unitary
    right = abs(u[0, 0] * config.c + u[0, 1] * config.d) ** 2
    left = abs(u[1, 0] * config.c + u[1, 1] * config.d) ** 2
    return float(right), float(left)


def prompt_trajectory(config: WalkConfig, n: int) -> list[SiteDistribution]:
    """Distributions of the promptly traced walk for steps 0..n."""
    if n < 0:
        raise ValueError(f"step count must be nonnegative, got {n}")
    right, left = prompt_step_probabilities(config)
    step = np.array([left, right])
    probs = np.array([1.0])
    lo = 0
    out = [SiteDistribution.delta(0)]
    for _ in range(n):
        probs = np.convolve(probs, step)
        lo -= 1
        out.append(
            SiteDistribution({lo + 2 * k: p for k, p in enumerate(probs) if p > 0.0})
        )
    return out


def prompt_distribution(config: WalkConfig, n: int) -> SiteDistribution:
    """Distribution after n steps with the coin traced after every step."""
    return prompt_trajectory(config, n)[-1]


# -- CP-map evolution -------------------------------------------------------


def cp_apply(
    rho: DensityMatrix,
    kraus: Sequence[LaurentOperator],
    *,
    completeness_tol: float = 1e-10,
) -> DensityMatrix:
    """Apply the CP map with the given Kraus generators to a density matrix."""
    total = LaurentOperator.zero()
    for op in kraus:
        total = total + op.adjoint() * op
    defect = total.distance(IDENTITY)
    if defect > completeness_tol:
        raise KrausCompletenessError(
            f"Kraus completeness violated: residual {defect:.3e}"
        )
    degrees = [d for op in kraus for d in op.support]
    dmin, dmax = min(degrees), max(degrees)
    span = dmax - dmin
    src = rho.dense()
    w = src.shape[0]
    out = np.zeros((w + span, w + span), dtype=complex)
    for op in kraus:
        for d, a in op.items():
            for e, b in op.items():
                out[d - dmin : d - dmin + w, e - dmin : e - dmin + w] += (
                    a * np.conj(b)
                ) * src
    lo = rho.site_range[0] + dmin
    return DensityMatrix(out, lo)


def cp_walk(config: WalkConfig, m: int, n_iterations: int) -> list[DensityMatrix]:
    """Iterate the delayed-tracing CP map from the origin state.

    Returns the trajectory rho^(0), ..., rho^(n_iterations); each iteration
    applies one full trace period of m coin-walker steps.
    """
    if n_iterations < 0:
        raise ValueError(f"iteration count must be nonnegative, got {n_iterations}")
    kraus = kraus_delayed(config, m)
    trajectory = [DensityMatrix.delta(0)]
    for _ in range(n_iterations):
        trajectory.append(cp_apply(trajectory[-1], kraus))
    return trajectory
