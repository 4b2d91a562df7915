"""Doubly stochastic kernels, reshuffling matrices, and the pseudo-memory map.

All kernels here are translation invariant, so they are stored by
displacement degree like the complex operators in :mod:`coinwalk.laurent`,
but with real coefficients.  For such a kernel the row sums, column sums,
and plain coefficient sum coincide, which makes double stochasticity a
one-line check.
"""

from __future__ import annotations

import math
from typing import Iterator, Mapping

import numpy as np

from .engine import SiteDistribution, WalkConfig, kraus_delayed, kraus_pair
from .laurent import LaurentOperator

TRIM_TOL = 1e-14
REAL_TOL = 1e-12
SUM_TOL = 1e-12
NONNEG_TOL = 1e-12


class IncompatibleCoinError(ValueError):
    """The coin initialization breaks the base case of the memory decomposition.

    Carries the measured one-step right-move probability so callers can
    report how far the configuration is from compatibility.
    """

    def __init__(self, measured_right: float, expected_right: float):
        self.measured_right = measured_right
        self.expected_right = expected_right
        super().__init__(
            "one-step right probability "
            f"{measured_right:.12g} != {expected_right:.12g} required by the "
            "classical kernel convention"
        )


class RealKernel:
    """A real translation-invariant kernel indexed by displacement degree.

    ``kind`` may be ``"stochastic"`` (nonnegative, coefficients sum to 1,
    hence doubly stochastic as a matrix) or ``"null-sum"`` (coefficients sum
    to 0); either flag is validated at construction.
    """

    __slots__ = ("_coeffs", "kind")

    def __init__(self, coeffs: Mapping[int, float], kind: str | None = None):
        data: dict[int, float] = {}
        for deg, val in coeffs.items():
            val = float(val)
            if abs(val) > TRIM_TOL:
                data[int(deg)] = val
        total = sum(data.values())
        if kind == "stochastic":
            if any(v < -NONNEG_TOL for v in data.values()):
                raise ValueError("stochastic kernel has a negative coefficient")
            if abs(total - 1.0) > SUM_TOL:
                raise ValueError(f"stochastic kernel sums to {total}, not 1")
        elif kind == "null-sum":
            if abs(total) > SUM_TOL:
                raise ValueError(f"null-sum kernel sums to {total}, not 0")
        elif kind is not None:
            raise ValueError(f"unknown kernel kind: {kind!r}")
        self._coeffs = data
        self.kind = kind

    @classmethod
    def from_laurent(cls, op: LaurentOperator, kind: str | None = None) -> "RealKernel":
        """Cast a Laurent operator with (analytically) real coefficients."""
        coeffs = {}
        for deg, amp in op.items():
            if abs(amp.imag) > REAL_TOL:
                raise ValueError(f"coefficient at degree {deg} has imaginary part {amp.imag}")
            coeffs[deg] = amp.real
        return cls(coeffs, kind)

    @classmethod
    def identity(cls) -> "RealKernel":
        return cls({0: 1.0}, "stochastic")

    # -- inspection ---------------------------------------------------------

    def coeff(self, degree: int) -> float:
        return self._coeffs.get(degree, 0.0)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def coefficient_sum(self) -> float:
        return sum(self._coeffs.values())

    def items(self) -> Iterator[tuple[int, float]]:
        return iter(sorted(self._coeffs.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{d}: {v:.6g}" for d, v in self.items())
        return f"RealKernel({{{body}}}, kind={self.kind!r})"

    def distance(self, other: "RealKernel") -> float:
        degrees = set(self._coeffs) | set(other._coeffs)
        return max((abs(self.coeff(d) - other.coeff(d)) for d in degrees), default=0.0)

    def isclose(self, other: "RealKernel", tol: float = 1e-12) -> bool:
        return self.distance(other) <= tol

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "RealKernel") -> "RealKernel":
        out = dict(self._coeffs)
        for deg, val in other._coeffs.items():
            out[deg] = out.get(deg, 0.0) + val
        return RealKernel(out)

    def __sub__(self, other: "RealKernel") -> "RealKernel":
        out = dict(self._coeffs)
        for deg, val in other._coeffs.items():
            out[deg] = out.get(deg, 0.0) - val
        return RealKernel(out)

    def __mul__(self, other):
        if isinstance(other, RealKernel):
            return self.convolve(other)
        return RealKernel({d: other * v for d, v in self._coeffs.items()})

    def __rmul__(self, scalar) -> "RealKernel":
        return RealKernel({d: scalar * v for d, v in self._coeffs.items()})

    def convolve(self, other: "RealKernel") -> "RealKernel":
        if not self._coeffs or not other._coeffs:
            return RealKernel({})
        lo_a, arr_a = self._as_array()
        lo_b, arr_b = other._as_array()
        conv = np.convolve(arr_a, arr_b)
        lo = lo_a + lo_b
        # coefficient sums multiply under convolution, so flags propagate
        if "null-sum" in (self.kind, other.kind):
            kind = "null-sum"
        elif self.kind == other.kind == "stochastic":
            kind = "stochastic"
        else:
            kind = None
        return RealKernel({lo + k: v for k, v in enumerate(conv)}, kind)

    def power(self, n: int) -> "RealKernel":
        if n < 0:
            raise ValueError(f"negative kernel power: {n}")
        result = RealKernel({0: 1.0})
        for _ in range(n):
            result = result.convolve(self)
        return result

    def apply(self, mapping: Mapping[int, float]) -> dict[int, float]:
        """Convolve with an arbitrary signed site map; returns a plain dict."""
        out: dict[int, float] = {}
        for deg, val in self._coeffs.items():
            for site, weight in mapping.items():
                key = site + deg
                out[key] = out.get(key, 0.0) + val * weight
        return out

    def apply_distribution(self, dist: SiteDistribution) -> SiteDistribution:
        if self.kind != "stochastic":
            raise ValueError("only stochastic kernels map distributions to distributions")
        return SiteDistribution(self.apply(dict(dist.items())))

    def _as_array(self) -> tuple[int, np.ndarray]:
        lo = min(self._coeffs)
        hi = max(self._coeffs)
        arr = np.zeros(hi - lo + 1, dtype=float)
        for deg, val in self._coeffs.items():
            arr[deg - lo] = val
        return lo, arr


SHIFT_DIFFERENCE = RealKernel({+1: 1.0, -1: -1.0}, "null-sum")


def _require_bias(config: WalkConfig) -> float:
    if config.p is None:
        raise ValueError(
            "this construction needs the one-parameter coin; the config uses "
            "a general unitary"
        )
    return config.p


def classical_kernel(p: float) -> RealKernel:
    """The biased classical step kernel: move right with probability 1-p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"coin bias must lie in [0, 1], got {p}")
    return RealKernel({+1: 1.0 - p, -1: p}, "stochastic")


def quantum_kernel(config: WalkConfig, n: int) -> RealKernel:
    """The doubly stochastic kernel of the n-step globally traced walk.

    Built from degree-wise modulus-squared Kraus coefficients; applying it
    to the origin delta reproduces the n-step site distribution.
    """
    a0, a1 = kraus_pair(config, n)
    op = a0.hadamard_conj(a0) + a1.hadamard_conj(a1)
    return RealKernel.from_laurent(op, "stochastic")


def mixing_matrix(config: WalkConfig, i: int) -> RealKernel:
    """The inhomogeneous mixing term of the kernel recurrence at step i."""
    if i < 0:
        raise ValueError(f"step count must be nonnegative, got {i}")
    if i == 0:
        return RealKernel({})
    p = _require_bias(config)
    a0, a1 = kraus_pair(config, i)
    cross = a0.hadamard_conj(a1) + a1.hadamard_conj(a0)
    op = math.sqrt(p * (1.0 - p)) * cross + (2.0 * p - 1.0) * a0.hadamard_conj(a0)
    return RealKernel.from_laurent(op)


def reshuffling_matrix(config: WalkConfig, i: int) -> RealKernel:
    """The null-sum kernel weighting the (n-i)-step classical distribution."""
    if i < 1:
        raise ValueError(f"reshuffling index must be at least 1, got {i}")
    if i == 1:
        return RealKernel({}, "null-sum")
    kernel = SHIFT_DIFFERENCE.convolve(mixing_matrix(config, i - 1))
    return RealKernel(dict(kernel.items()), "null-sum")


def phi_matrix(config: WalkConfig) -> RealKernel:
    """The fixed null-sum part of the period-2 delayed kernel."""
    kernel = delayed_kernel(config) - classical_kernel(_require_bias(config))
    return RealKernel(dict(kernel.items()), "null-sum")


def delayed_kernel(config: WalkConfig, m: int = 2) -> RealKernel:
    """The fixed doubly stochastic kernel of the period-m delayed walk."""
    b0, b1 = kraus_delayed(config, m)
    op = b0.hadamard_conj(b0) + b1.hadamard_conj(b1)
    return RealKernel.from_laurent(op, "stochastic")


def kernel_walk(
    kernel: RealKernel, n: int, start: SiteDistribution | None = None
) -> list[SiteDistribution]:
    """Repeatedly apply a stochastic kernel; returns the n+1 distributions."""
    if n < 0:
        raise ValueError(f"step count must be nonnegative, got {n}")
    if kernel.kind != "stochastic":
        raise ValueError("kernel walk requires a stochastic kernel")
    current = start if start is not None else SiteDistribution.delta(0)
    trajectory = [current]
    for _ in range(n):
        current = kernel.apply_distribution(current)
        trajectory.append(current)
    return trajectory


def binomial_solution(config: WalkConfig, n: int) -> SiteDistribution:
    """The closed-form period-2 kernel walk as a binomial sum of kernel powers.

    Valid because the classical kernel and its null-sum correction commute
    as translation-invariant kernels.
    """
    if n < 0:
        raise ValueError(f"step count must be nonnegative, got {n}")
    delta_c = classical_kernel(_require_bias(config))
    phi = phi_matrix(config)
    acc: dict[int, float] = {}
    for k in range(n + 1):
        term = phi.power(n - k).convolve(delta_c.power(k))
        weight = float(math.comb(n, k))
        for deg, val in term.items():
            acc[deg] = acc.get(deg, 0.0) + weight * val
    # the alternating binomial sum cancels to scale 1, leaving signed rounding
    # noise a little above the default distribution tolerances
    return SiteDistribution(
        {d: v for d, v in acc.items() if v > 1e-11}, sum_tol=1e-9
    )


def pseudo_memory_reconstruct(config: WalkConfig, n: int) -> SiteDistribution:
    """Rebuild the n-step quantum distribution from classical distributions.

    Takes the n-step classical distribution and adds the reshuffled earlier
    classical distributions.  Requires the coin initialization to reproduce
    the classical kernel at the first step, which pins the base case of the
    decomposition; otherwise :class:`IncompatibleCoinError` is raised.
    """
    if n < 0:
        raise ValueError(f"step count must be nonnegative, got {n}")
    p = _require_bias(config)
    a0, _ = kraus_pair(config, 1)
    measured_right = abs(a0.coeff(+1)) ** 2
    if abs(measured_right - (1.0 - p)) > 1e-10:
        raise IncompatibleCoinError(measured_right, 1.0 - p)
    delta_c = classical_kernel(p)
    classical = [RealKernel.identity()]
    for _ in range(n):
        classical.append(delta_c.convolve(classical[-1]))
    acc = {deg: val for deg, val in classical[n].items()}
    for i in range(2, n + 1):
        omega = reshuffling_matrix(config, i)
        for deg, val in omega.convolve(classical[n - i]).items():
            acc[deg] = acc.get(deg, 0.0) + val
    return SiteDistribution(
        {d: v for d, v in acc.items() if v > TRIM_TOL}, sum_tol=1e-9
    )
