"""Dense linear algebra over a small prime field GF(p).

Matrices are plain numpy integer arrays; the prime lives on a :class:`GF`
context object, never on the entries.  Pivoting is deterministic: columns are
scanned left to right and the first nonzero entry from the top of the
remaining rows is taken, so :meth:`GF.rref` and :meth:`GF.nullspace` return
canonical results.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

MAX_PRIME = 13

# Working dtype for elimination; products of two residues < 13 plus one more
# residue stay far inside int32.
_WORK = np.int32


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


class GF:
    """Prime field context, ``2 <= p <= 13``."""

    def __init__(self, p: int):
        p = int(p)
        if not is_prime(p) or p > MAX_PRIME:
            raise ValueError(f"p must be a prime in [2, {MAX_PRIME}], got {p}")
        self.p = p
        self._inv = np.zeros(p, dtype=_WORK)
        for a in range(1, p):
            self._inv[a] = pow(a, p - 2, p)

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def inv(self, a: int) -> int:
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self._inv[a])

    def asarray(self, m, ndim: int = 2) -> np.ndarray:
        """Copy ``m`` into a reduced working array of the given rank."""
        arr = np.array(m, dtype=np.int64)
        if arr.ndim != ndim:
            if arr.size == 0 and ndim == 2:
                return np.zeros((0, 0), dtype=_WORK)
            raise ValueError(f"expected a {ndim}-d array, got shape {arr.shape}")
        return np.mod(arr, self.p).astype(_WORK)

    def matmul(self, a, b) -> np.ndarray:
        a = np.mod(np.asarray(a, dtype=np.int64), self.p)
        b = np.mod(np.asarray(b, dtype=np.int64), self.p)
        # float64 products go through BLAS and are exact below 2**53
        if a.shape[-1] * (self.p - 1) ** 2 < 2**53:
            prod = np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
        else:
            prod = a @ b
        return np.mod(prod, self.p)

    def _echelon(self, m: np.ndarray, reduced: bool) -> tuple[np.ndarray, list[int]]:
        """Row reduce ``m`` in place; return (matrix, pivot columns)."""
        p = self.p
        rows, cols = m.shape
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.flatnonzero(m[r:, c])
            if nz.size == 0:
                continue
            k = r + int(nz[0])
            if k != r:
                m[[r, k]] = m[[k, r]]
            if m[r, c] != 1:
                m[r, c:] = (m[r, c:] * self._inv[m[r, c]]) % p
            if reduced:
                hit = np.flatnonzero(m[:, c])
                hit = hit[hit != r]
            else:
                hit = r + 1 + np.flatnonzero(m[r + 1 :, c])
            if hit.size:
                m[hit, c:] = np.mod(m[hit, c:] - np.outer(m[hit, c], m[r, c:]), p)
            pivots.append(c)
            r += 1
        return m, pivots

    def rank(self, m) -> int:
        arr = self.asarray(m)
        if arr.size == 0:
            return 0
        # Eliminate along the shorter side.
        if arr.shape[0] > arr.shape[1]:
            arr = np.ascontiguousarray(arr.T)
        return len(self._echelon(arr, reduced=False)[1])

    def rref(self, m) -> np.ndarray:
        arr = self.asarray(m)
        if arr.size == 0:
            return arr
        return self._echelon(arr, reduced=True)[0]

    def rref_pivots(self, m) -> tuple[np.ndarray, list[int]]:
        arr = self.asarray(m)
        if arr.size == 0:
            return arr, []
        return self._echelon(arr, reduced=True)

    def nullspace(self, m) -> list[np.ndarray]:
        """Basis of ``{v : m v = 0}``, one vector per free column in order."""
        arr = self.asarray(m)
        cols = arr.shape[1]
        if arr.shape[0] == 0:
            return [_unit(cols, j) for j in range(cols)]
        red, pivots = self._echelon(arr, reduced=True)
        pivot_set = set(pivots)
        basis = []
        for f in range(cols):
            if f in pivot_set:
                continue
            v = np.zeros(cols, dtype=_WORK)
            v[f] = 1
            for row, pc in enumerate(pivots):
                v[pc] = (-red[row, f]) % self.p
            basis.append(v)
        return basis

    nullspace_basis = nullspace

    def in_span(self, vectors: Sequence, target) -> bool:
        t = self.asarray(target, ndim=1)
        if not len(vectors):
            return not t.any()
        vs = self.asarray(np.vstack([np.asarray(v) for v in vectors]))
        if vs.shape[1] != t.shape[0]:
            raise ValueError(
                f"dimension mismatch: vectors of length {vs.shape[1]}, target of length {t.shape[0]}"
            )
        return self.rank(vs) == self.rank(np.vstack([vs, t]))

    def row_basis(self, m) -> np.ndarray:
        """Nonzero rows of the reduced echelon form of ``m``."""
        red, pivots = self.rref_pivots(m)
        return red[: len(pivots)]


def _unit(n: int, j: int) -> np.ndarray:
    v = np.zeros(n, dtype=_WORK)
    v[j] = 1
    return v


class SpanBuilder:
    """Incrementally maintained echelon basis of a subspace of GF(p)^n.

    Used for submodule closures, where vectors arrive one at a time and most
    of them are already in the span.
    """

    def __init__(self, field: GF, n: int):
        self.field = field
        self.n = n
        self._rows: list[np.ndarray] = []
        self._pivots: list[int] = []

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, v) -> np.ndarray:
        p = self.field.p
        w = np.mod(np.asarray(v, dtype=_WORK), p)
        for row, pc in zip(self._rows, self._pivots):
            if w[pc]:
                w = np.mod(w - w[pc] * row, p)
        return w

    def add(self, v) -> bool:
        """Add ``v``; return True when it enlarged the span."""
        w = self.reduce(v)
        nz = np.flatnonzero(w)
        if nz.size == 0:
            return False
        pc = int(nz[0])
        w = np.mod(w * self.field.inv(w[pc]), self.field.p)
        self._rows.append(w)
        self._pivots.append(pc)
        return True

    def contains(self, v) -> bool:
        return not self.reduce(v).any()

    def basis(self) -> np.ndarray:
        if not self._rows:
            return np.zeros((0, self.n), dtype=_WORK)
        return np.vstack(self._rows)
