"""Exact arithmetic for translation-invariant operators on the integer lattice.

Every operator here is a Laurent polynomial in the commuting unit-shift
operators, stored as a finite map from displacement degree to a complex
coefficient.  The dense matrix realization of such an operator A satisfies
A[i, j] = coeff(i - j) for all integer sites i, j; ``to_dense`` materializes
a finite window of that matrix for oracle-style checks.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

import numpy as np

#: Coefficients with magnitude below this are dropped after every operation.
TRIM_TOL = 1e-14


class LaurentOperator:
    """A finite-support Laurent polynomial in the lattice shift operator."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, complex] | None = None):
        data: dict[int, complex] = {}
        if coeffs:
            for deg, amp in coeffs.items():
                amp = complex(amp)
                if abs(amp) > TRIM_TOL:
                    data[int(deg)] = amp
        self._coeffs = data

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentOperator":
        return cls()

    @classmethod
    def one(cls) -> "LaurentOperator":
        return cls({0: 1.0})

    @classmethod
    def shift(cls, degree: int, amplitude: complex = 1.0) -> "LaurentOperator":
        return cls({degree: amplitude})

    # -- inspection ---------------------------------------------------------

    def coeff(self, degree: int) -> complex:
        return self._coeffs.get(degree, 0j)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def items(self) -> Iterator[tuple[int, complex]]:
        return iter(sorted(self._coeffs.items()))

    def __len__(self) -> int:
        return len(self._coeffs)

    def __repr__(self) -> str:
        terms = ", ".join(f"{d}: {a}" for d, a in self.items())
        return f"LaurentOperator({{{terms}}})"

    def distance(self, other: "LaurentOperator") -> float:
        """Max absolute coefficient difference (Chebyshev distance)."""
        degrees = set(self._coeffs) | set(other._coeffs)
        if not degrees:
            return 0.0
        return max(abs(self.coeff(d) - other.coeff(d)) for d in degrees)

    def isclose(self, other: "LaurentOperator", tol: float = 1e-12) -> bool:
        return self.distance(other) <= tol

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "LaurentOperator") -> "LaurentOperator":
        if not isinstance(other, LaurentOperator):
            return NotImplemented
        out = dict(self._coeffs)
        for deg, amp in other._coeffs.items():
            out[deg] = out.get(deg, 0j) + amp
        return LaurentOperator(out)

    def __neg__(self) -> "LaurentOperator":
        return LaurentOperator({d: -a for d, a in self._coeffs.items()})

    def __sub__(self, other: "LaurentOperator") -> "LaurentOperator":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentOperator):
            if not self._coeffs or not other._coeffs:
                return LaurentOperator()
            lo_a, arr_a = self._as_array()
            lo_b, arr_b = other._as_array()
            conv = np.convolve(arr_a, arr_b)
            lo = lo_a + lo_b
            return LaurentOperator({lo + k: v for k, v in enumerate(conv)})
        return LaurentOperator({d: other * a for d, a in self._coeffs.items()})

    def __rmul__(self, scalar) -> "LaurentOperator":
        return LaurentOperator({d: scalar * a for d, a in self._coeffs.items()})

    def adjoint(self) -> "LaurentOperator":
        return LaurentOperator({-d: np.conj(a) for d, a in self._coeffs.items()})

    def hadamard_conj(self, other: "LaurentOperator") -> "LaurentOperator":
        """Degree-wise product of self with the conjugate of ``other``.

        Equals the matrix Hadamard product of the dense realizations of
        self and the entrywise conjugate of ``other``.
        """
        out = {}
        for deg, amp in self._coeffs.items():
            b = other.coeff(deg)
            if b:
                out[deg] = amp * np.conj(b)
        return LaurentOperator(out)

    def is_normal(self, tol: float = 1e-12) -> bool:
        return (self * self.adjoint()).isclose(self.adjoint() * self, tol)

    # -- dense realization --------------------------------------------------

    def to_dense(self, window: Iterable[int]) -> np.ndarray:
        """Dense matrix over the given sites: entry (i, j) = coeff(site_i - site_j)."""
        sites = np.asarray(list(window), dtype=int)
        if sites.size == 0:
            raise ValueError("window must be nonempty")
        diff = sites[:, None] - sites[None, :]
        out = np.zeros(diff.shape, dtype=complex)
        for deg, amp in self._coeffs.items():
            out[diff == deg] = amp
        return out

    def _as_array(self) -> tuple[int, np.ndarray]:
        lo = min(self._coeffs)
        hi = max(self._coeffs)
        arr = np.zeros(hi - lo + 1, dtype=complex)
        for deg, amp in self._coeffs.items():
            arr[deg - lo] = amp
        return lo, arr


IDENTITY = LaurentOperator.one()
E_PLUS = LaurentOperator.shift(+1)
E_MINUS = LaurentOperator.shift(-1)


class CoinBlock:
    """A 2x2 block of LaurentOperators, closed under block multiplication."""

    __slots__ = ("_entries",)

    def __init__(self, entries):
        rows = tuple(tuple(entries[r][c] for c in (0, 1)) for r in (0, 1))
        for row in rows:
            for op in row:
                if not isinstance(op, LaurentOperator):
                    raise TypeError("CoinBlock entries must be LaurentOperators")
        self._entries = rows

    @classmethod
    def identity(cls) -> "CoinBlock":
        one, zero = LaurentOperator.one(), LaurentOperator.zero()
        return cls(((one, zero), (zero, one)))

    def __getitem__(self, key: tuple[int, int]) -> LaurentOperator:
        r, c = key
        return self._entries[r][c]

    def __matmul__(self, other: "CoinBlock") -> "CoinBlock":
        if not isinstance(other, CoinBlock):
            return NotImplemented
        out = [[None, None], [None, None]]
        for r in (0, 1):
            for c in (0, 1):
                out[r][c] = self[r, 0] * other[0, c] + self[r, 1] * other[1, c]
        return CoinBlock(out)

    def adjoint(self) -> "CoinBlock":
        return CoinBlock(
            ((self[0, 0].adjoint(), self[1, 0].adjoint()),
             (self[0, 1].adjoint(), self[1, 1].adjoint()))
        )

    def power(self, n: int) -> "CoinBlock":
        """Block power by binary exponentiation; n = 0 gives the identity block."""
        if n < 0:
            raise ValueError(f"negative block power: {n}")
        result = CoinBlock.identity()
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base if n > 1 else base
            n >>= 1
        return result

    def unitarity_defect(self) -> float:
        """Max coefficient deviation of B B-dagger from the identity block."""
        prod = self @ self.adjoint()
        ident = CoinBlock.identity()
        return max(
            prod[r, c].distance(ident[r, c]) for r in (0, 1) for c in (0, 1)
        )

    def max_degree(self) -> int:
        degs = [abs(d) for r in (0, 1) for c in (0, 1) for d in self[r, c].support]
        return max(degs, default=0)
