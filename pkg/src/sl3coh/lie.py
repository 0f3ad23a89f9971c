"""The Lie algebra sl_3 over GF(p), its torus weights, center and quotient.

Brackets are not typed in: each basis element is realized as a derivation
``x_i d/dx_j`` acting on the linear forms in ``x1, x2, x3`` and the bracket is
the commutator of derivations, read back in the basis

    (h1, h2, e1, e2, e3, f1, f2, f3)
    h1 = x1 d1 - x2 d2,  h2 = x2 d2 - x3 d3,
    e1 = x1 d2,  e2 = x2 d3,  e3 = x1 d3,
    f1 = x2 d1,  f2 = x3 d2,  f3 = x3 d1.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from itertools import combinations, product
from pathlib import Path
from typing import NamedTuple, Sequence

import numpy as np

from .linalg import GF


class Weight(NamedTuple):
    """Torus weight ``a*w1 + b*w2`` in fundamental-weight coordinates."""

    a: int
    b: int

    def __add__(self, other):  # type: ignore[override]
        return Weight(self.a + other[0], self.b + other[1])

    def __sub__(self, other):
        return Weight(self.a - other[0], self.b - other[1])

    def __neg__(self):
        return Weight(-self.a, -self.b)

    def scale(self, k: int) -> "Weight":
        return Weight(k * self.a, k * self.b)

    def is_dominant(self) -> bool:
        return self.a >= 0 and self.b >= 0

    def divisible_by(self, p: int) -> bool:
        return self.a % p == 0 and self.b % p == 0

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


ZERO = Weight(0, 0)
ALPHA1 = Weight(2, -1)
ALPHA2 = Weight(-1, 2)


def reflect1(w: Weight) -> Weight:
    return Weight(-w.a, w.a + w.b)


def reflect2(w: Weight) -> Weight:
    return Weight(w.a + w.b, -w.b)


def weyl_orbit(w) -> frozenset[Weight]:
    """Orbit of ``w`` under the Weyl group S_3 of type A_2."""
    start = Weight(*w)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for v in (reflect1(u), reflect2(u)):
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return frozenset(seen)


def dominant_representative(w) -> Weight:
    return next(u for u in weyl_orbit(w) if u.is_dominant())


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """Finite-dimensional Lie algebra over GF(p) given by structure constants.

    ``structure[i, j]`` is the coordinate vector of ``[x_i, x_j]``;
    ``p_power[i]`` that of ``x_i^[p]``.
    """

    field: GF
    labels: tuple[str, ...]
    structure: np.ndarray
    p_power: np.ndarray
    weights: tuple[Weight, ...]
    name: str = "custom"
    notes: tuple[str, ...] = field(default=(), compare=False)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def basis_vector(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    def _coords(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        return self.basis_vector(int(x)) if x.ndim == 0 else x

    def bracket(self, x, y) -> np.ndarray:
        """``[x, y]``; either argument may be a basis index or a coordinate vector."""
        x, y = self._coords(x), self._coords(y)
        return np.mod(np.einsum("i,j,ijk->k", x, y, self.structure), self.p)

    def ad(self, x) -> np.ndarray:
        """Matrix of ``ad x`` acting on column coordinate vectors."""
        x = self._coords(x)
        # column j is [x, x_j]
        return np.mod(np.einsum("i,ijk->kj", x, self.structure), self.p)

    def ad_matrices(self) -> list[np.ndarray]:
        return [self.ad(i) for i in range(self.dim)]

    def is_sl3_basis(self) -> bool:
        return self.labels == SL3_LABELS


SL3_LABELS = ("h1", "h2", "e1", "e2", "e3", "f1", "f2", "f3")

# (i, j) pairs such that the basis element is x_i d/dx_j, or a signed sum of them.
_SL3_DERIVATIONS = {
    "h1": {(0, 0): 1, (1, 1): -1},
    "h2": {(1, 1): 1, (2, 2): -1},
    "e1": {(0, 1): 1},
    "e2": {(1, 2): 1},
    "e3": {(0, 2): 1},
    "f1": {(1, 0): 1},
    "f2": {(2, 1): 1},
    "f3": {(2, 0): 1},
}

SL3_WEIGHTS = (
    ZERO,
    ZERO,
    ALPHA1,
    ALPHA2,
    ALPHA1 + ALPHA2,
    -ALPHA1,
    -ALPHA2,
    -(ALPHA1 + ALPHA2),
)


def _apply_derivation(der: dict, form: dict) -> dict:
    """Apply ``sum c * x_i d/dx_j`` to a linear form ``{k: coeff}`` in x_k."""
    out: dict[int, int] = {}
    for (i, j), c in der.items():
        if j in form:
            out[i] = out.get(i, 0) + c * form[j]
    return {k: v for k, v in out.items() if v}


def _commutator_on_generators(d1: dict, d2: dict) -> dict:
    """The derivation ``[d1, d2]`` as ``{(i, j): coeff}``.

    A derivation of k[x1, x2, x3] is fixed by its values on the generators;
    ``[d1, d2](x_k) = d1(d2(x_k)) - d2(d1(x_k))``.
    """
    out: dict[tuple[int, int], int] = {}
    for k in range(3):
        gen = {k: 1}
        a = _apply_derivation(d1, _apply_derivation(d2, gen))
        b = _apply_derivation(d2, _apply_derivation(d1, gen))
        for i in set(a) | set(b):
            c = a.get(i, 0) - b.get(i, 0)
            if c:
                out[(i, k)] = c
    return out


def _sl3_coordinates(der: dict, p: int) -> np.ndarray:
    """Coordinates of a trace-zero derivation in the sl_3 basis."""
    v = np.zeros(8, dtype=np.int64)
    diag = [der.get((k, k), 0) for k in range(3)]
    if sum(diag) % p:
        raise ValueError(f"derivation {der} is not trace-free mod {p}")
    v[0] = diag[0]
    v[1] = -diag[2]
    for label, spec in _SL3_DERIVATIONS.items():
        if label.startswith("h"):
            continue
        ((pos, _),) = spec.items()
        v[SL3_LABELS.index(label)] = der.get(pos, 0)
    return np.mod(v, p)


def build_sl3(p: int) -> LieAlgebra:
    """sl_3 over GF(p) in the basis (h1, h2, e1, e2, e3, f1, f2, f3)."""
    F = GF(p)
    n = len(SL3_LABELS)
    c = np.zeros((n, n, n), dtype=np.int64)
    ders = [_SL3_DERIVATIONS[lab] for lab in SL3_LABELS]
    for i, j in product(range(n), repeat=2):
        c[i, j] = _sl3_coordinates(_commutator_on_generators(ders[i], ders[j]), p)
    pmap = np.zeros((n, n), dtype=np.int64)
    pmap[0, 0] = pmap[1, 1] = 1
    return LieAlgebra(F, SL3_LABELS, c, pmap, SL3_WEIGHTS, name="sl3")


# Hand-typed nonzero brackets [x_i, x_j] for i < j over the integers; a
# cross-check fixture for build_sl3, never used by the construction itself.
SL3_BRACKET_TABLE = {
    ("h1", "e1"): {"e1": 2},
    ("h1", "e2"): {"e2": -1},
    ("h1", "e3"): {"e3": 1},
    ("h1", "f1"): {"f1": -2},
    ("h1", "f2"): {"f2": 1},
    ("h1", "f3"): {"f3": -1},
    ("h2", "e1"): {"e1": -1},
    ("h2", "e2"): {"e2": 2},
    ("h2", "e3"): {"e3": 1},
    ("h2", "f1"): {"f1": 1},
    ("h2", "f2"): {"f2": -2},
    ("h2", "f3"): {"f3": -1},
    ("e1", "e2"): {"e3": 1},
    ("e1", "f1"): {"h1": 1},
    ("e1", "f3"): {"f2": -1},
    ("e2", "f2"): {"h2": 1},
    ("e2", "f3"): {"f1": 1},
    ("e3", "f1"): {"e2": -1},
    ("e3", "f2"): {"e1": 1},
    ("e3", "f3"): {"h1": 1, "h2": 1},
    ("f1", "f2"): {"f3": -1},
}


@dataclass
class StructureReport:
    antisymmetry: list[tuple[int, int]] = field(default_factory=list)
    jacobi: list[tuple[int, int, int]] = field(default_factory=list)
    weight_additivity: list[tuple[int, int]] = field(default_factory=list)
    p_power: list[int] = field(default_factory=list)
    unimodular: list[int] = field(default_factory=list)
    labels: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not (
            self.antisymmetry or self.jacobi or self.weight_additivity or self.p_power or self.unimodular
        )

    def failures(self) -> list[str]:
        lab = self.labels
        out = [f"antisymmetry ({lab[i]},{lab[j]})" for i, j in self.antisymmetry]
        out += [f"jacobi ({lab[i]},{lab[j]},{lab[k]})" for i, j, k in self.jacobi]
        out += [f"weight ({lab[i]},{lab[j]})" for i, j in self.weight_additivity]
        out += [f"p-power {lab[i]}" for i in self.p_power]
        out += [f"trace ad {lab[i]}" for i in self.unimodular]
        return out


def verify_structure(L: LieAlgebra) -> StructureReport:
    """Check antisymmetry, Jacobi, weight additivity, the p-map and tr ad = 0."""
    p, n = L.p, L.dim
    c = np.mod(L.structure, p)
    rep = StructureReport(labels=L.labels)

    for i in range(n):
        for j in range(i, n):
            bad = np.mod(c[i, j] + c[j, i], p).any() if i != j else c[i, i].any()
            if bad:
                rep.antisymmetry.append((i, j))

    # J[i,j,k] = [x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]]
    inner = np.einsum("jkr,irs->ijks", c, c)
    jac = np.mod(inner + inner.transpose(1, 2, 0, 3) + inner.transpose(2, 0, 1, 3), p)
    for i, j, k in combinations(range(n), 3):
        if jac[i, j, k].any():
            rep.jacobi.append((i, j, k))

    for i, j in product(range(n), repeat=2):
        target = L.weights[i] + L.weights[j]
        for k in np.flatnonzero(c[i, j]):
            if L.weights[k] != target:
                rep.weight_additivity.append((i, j))
                break

    for i in range(n):
        lhs = L.ad(np.mod(L.p_power[i], p))
        rhs = np.linalg.matrix_power(L.ad(i).astype(object), p).astype(np.int64) % p
        if not np.array_equal(np.mod(lhs, p), rhs):
            rep.p_power.append(i)
        if int(np.trace(L.ad(i))) % p:
            rep.unimodular.append(i)
    return rep


def center(L: LieAlgebra) -> list[np.ndarray]:
    """Canonical basis of ``{x : [x, y] = 0 for all y}``."""
    # x in center iff sum_i x_i c[i, j, :] = 0 for every j
    n = L.dim
    m = np.mod(L.structure, L.p).transpose(1, 2, 0).reshape(n * n, n)
    return L.field.nullspace(m)


def complement_pivots(field: GF, vectors: Sequence) -> tuple[np.ndarray, list[int]]:
    """Echelon basis of span(vectors) with pivots at the *last* nonzero entry.

    Quotients drop the pivot coordinates, which keeps the earliest basis
    vectors (e.g. h1 over h2, highest weight vectors over lower ones).
    """
    if not len(vectors):
        return np.zeros((0, 0), dtype=np.int64), []
    m = np.asarray(np.vstack([np.asarray(v) for v in vectors]), dtype=np.int64)
    red, piv = field.rref_pivots(m[:, ::-1])
    n = m.shape[1]
    rows = np.asarray(red[: len(piv)][:, ::-1], dtype=np.int64)
    return rows, [n - 1 - c for c in piv]


class QuotientMap:
    """Projection ``V -> V/W`` in coordinates, W given by a spanning list."""

    def __init__(self, field: GF, n: int, sub_vectors: Sequence):
        self.field = field
        self.n = n
        self.rows, self.pivots = complement_pivots(field, sub_vectors)
        self.kept = [i for i in range(n) if i not in set(self.pivots)]

    @property
    def dim(self) -> int:
        return len(self.kept)

    def reduce(self, v) -> np.ndarray:
        w = np.asarray(v, dtype=np.int64).copy()
        for row, pc in zip(self.rows, self.pivots):
            if w[pc] % self.field.p:
                w = w - w[pc] * row
        return np.mod(w, self.field.p)

    def project(self, v) -> np.ndarray:
        return self.reduce(v)[self.kept]

    def project_matrix(self, m) -> np.ndarray:
        """Image of the columns of ``m`` in quotient coordinates."""
        m = np.asarray(m, dtype=np.int64)
        return np.column_stack([self.project(m[:, j]) for j in range(m.shape[1])]) if m.shape[1] else (
            np.zeros((self.dim, 0), dtype=np.int64)
        )


def quotient_by_center(L: LieAlgebra, strict: bool = False) -> LieAlgebra:
    """The algebra ``L / Z(L)`` with induced brackets and p-map.

    With a trivial center ``L`` comes back unchanged and a warning is issued
    (``strict=True`` turns that into a ValueError).
    """
    z = center(L)
    if not z:
        msg = f"{L.name} has trivial center over GF({L.p}); quotient is the algebra itself"
        if strict:
            raise ValueError(msg)
        warnings.warn(msg, stacklevel=2)
        return L
    q = QuotientMap(L.field, L.dim, z)
    kept = q.kept
    m = q.dim
    c = np.zeros((m, m, m), dtype=np.int64)
    for a, i in enumerate(kept):
        for b, j in enumerate(kept):
            c[a, b] = q.project(L.structure[i, j])
    pmap = np.array([q.project(L.p_power[i]) for i in kept], dtype=np.int64).reshape(m, m)
    return LieAlgebra(
        L.field,
        tuple(L.labels[i] for i in kept),
        c,
        pmap,
        tuple(L.weights[i] for i in kept),
        name=f"{L.name}-quotient",
        notes=(f"quotient by center of dimension {len(z)}",),
    )


def algebra_to_json(L: LieAlgebra) -> dict:
    brackets = []
    for i, j in combinations(range(L.dim), 2):
        v = np.mod(L.structure[i, j], L.p)
        if v.any():
            brackets.append([i, j, [int(x) for x in v]])
    return {
        "p": L.p,
        "dim": L.dim,
        "labels": list(L.labels),
        "brackets": brackets,
        "pmap": [[int(x) for x in row] for row in np.mod(L.p_power, L.p)],
        "weights": [[w.a, w.b] for w in L.weights],
    }


def algebra_from_json(doc: dict, name: str = "custom") -> LieAlgebra:
    """Inverse of :func:`algebra_to_json`; brackets listed for ``i < j`` only."""
    F = GF(doc["p"])
    n = int(doc["dim"])
    labels = tuple(doc.get("labels") or [f"x{i}" for i in range(n)])
    if len(labels) != n:
        raise ValueError("labels length does not match dim")
    c = np.zeros((n, n, n), dtype=np.int64)
    for entry in doc.get("brackets", []):
        i, j, coeffs = entry
        if len(coeffs) != n:
            raise ValueError(f"bracket [{i},{j}] has {len(coeffs)} coefficients, expected {n}")
        c[i, j] = coeffs
        c[j, i] = -np.asarray(coeffs)
    pmap = np.asarray(doc.get("pmap", np.zeros((n, n))), dtype=np.int64).reshape(n, n)
    weights = tuple(Weight(int(a), int(b)) for a, b in doc.get("weights", [[0, 0]] * n))
    if len(weights) != n:
        raise ValueError("weights length does not match dim")
    return LieAlgebra(F, labels, np.mod(c, F.p), np.mod(pmap, F.p), weights, name=name)


def load_algebra(path) -> LieAlgebra:
    path = Path(path)
    return algebra_from_json(json.loads(path.read_text()), name=f"custom:{path.name}")
