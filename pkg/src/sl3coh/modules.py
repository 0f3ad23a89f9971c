"""Modules over the Lie algebras of :mod:`sl3coh.lie`.

A module is a list of action matrices, one per algebra basis element, acting
on column vectors, together with an integer torus weight for each module basis
vector.  Restricted simple modules L(r, s) are built as the simple head of a
baby Verma module.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .lie import ALPHA1, ALPHA2, ZERO, LieAlgebra, QuotientMap, Weight, center, weyl_orbit
from .linalg import GF, SpanBuilder

Character = Counter  # Weight -> multiplicity


class UndecidedError(RuntimeError):
    """Raised when a simplicity test would need a larger enumeration."""


@dataclass(eq=False)
class GModule:
    algebra: LieAlgebra
    action: list[np.ndarray]
    weights: tuple[Weight, ...]
    name: str = "module"
    highest_index: int | None = None
    notes: list[str] = field(default_factory=list)
    basis_labels: tuple[str, ...] | None = None

    def label(self, k: int) -> str:
        if self.basis_labels is not None:
            return self.basis_labels[k]
        return "1" if self.dim == 1 else f"v{k}"

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def field(self) -> GF:
        return self.algebra.field

    @property
    def p(self) -> int:
        return self.algebra.p

    def act(self, x, v) -> np.ndarray:
        """Action of the algebra element with coordinates ``x`` on ``v``."""
        x = np.asarray(x, dtype=np.int64)
        mat = np.einsum("i,ijk->jk", x, np.asarray(self.action, dtype=np.int64))
        return self.field.matmul(mat, v)

    def character(self) -> Character:
        return module_character(self)


@dataclass
class ModuleReport:
    homomorphism: list[tuple[int, int]] = field(default_factory=list)
    weights: list[int] = field(default_factory=list)
    restricted: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.homomorphism or self.weights or self.restricted)


def check_module(M: GModule, restricted: bool = True) -> ModuleReport:
    """Verify the homomorphism, weight and (optionally) restrictedness laws."""
    L, p = M.algebra, M.p
    n = L.dim
    acts = [np.asarray(a, dtype=np.int64) for a in M.action]
    rep = ModuleReport()
    for i in range(n):
        for j in range(i + 1, n):
            lhs = np.einsum("k,kab->ab", L.structure[i, j], np.asarray(acts))
            rhs = acts[i] @ acts[j] - acts[j] @ acts[i]
            if np.mod(lhs - rhs, p).any():
                rep.homomorphism.append((i, j))
    for i in range(n):
        rows, cols = np.nonzero(np.mod(acts[i], p))
        if any(M.weights[r] != M.weights[c] + L.weights[i] for r, c in zip(rows, cols)):
            rep.weights.append(i)
    if restricted:
        for i in range(n):
            lhs = np.einsum("k,kab->ab", L.p_power[i], np.asarray(acts))
            rhs = _matpow(acts[i], p, p)
            if np.mod(lhs - rhs, p).any():
                rep.restricted.append(i)
    return rep


def _matpow(a: np.ndarray, k: int, p: int) -> np.ndarray:
    out = np.eye(a.shape[0], dtype=np.int64)
    for _ in range(k):
        out = np.mod(out @ a, p)
    return out


def trivial_module(L: LieAlgebra) -> GModule:
    return GModule(L, [np.zeros((1, 1), dtype=np.int64) for _ in range(L.dim)], (ZERO,), name="trivial")


def adjoint_module(L: LieAlgebra) -> GModule:
    return GModule(L, L.ad_matrices(), tuple(L.weights), name="adjoint", basis_labels=L.labels)


def quotient_module(M: GModule, sub_vectors: Sequence, name: str | None = None) -> GModule:
    """``M / W`` for a submodule W given by spanning vectors.

    The basis of the quotient is the image of the module basis vectors that
    are not pivots of W (pivots taken at the last nonzero coordinate).
    """
    q = QuotientMap(M.field, M.dim, sub_vectors)
    action = [q.project_matrix(np.asarray(a, dtype=np.int64)[:, q.kept]) for a in M.action]
    hi = None
    if M.highest_index is not None and M.highest_index in q.kept:
        hi = q.kept.index(M.highest_index)
    return GModule(
        M.algebra,
        action,
        tuple(M.weights[i] for i in q.kept),
        name=name or f"{M.name}/sub",
        highest_index=hi,
        basis_labels=None if M.basis_labels is None else tuple(M.basis_labels[i] for i in q.kept),
    )


def quotient_module_center(L: LieAlgebra) -> GModule:
    """The adjoint action of ``L`` on ``L / Z(L)``; L(1,1) for sl_3 at p = 3."""
    z = center(L)
    if not z:
        raise ValueError(f"{L.name} has trivial center over GF({L.p})")
    M = quotient_module(adjoint_module(L), z, name="quotient-center")
    return M


def dual_module(M: GModule) -> GModule:
    action = [np.mod(-np.asarray(a, dtype=np.int64).T, M.p) for a in M.action]
    name = M.name[len("dual(") : -1] if M.name.startswith("dual(") else f"dual({M.name})"
    labels = None if M.basis_labels is None else tuple(f"{lab}*" for lab in M.basis_labels)
    return GModule(M.algebra, action, tuple(-w for w in M.weights), name=name, basis_labels=labels)


def module_character(M: GModule) -> Character:
    return Counter(M.weights)


# ---------------------------------------------------------------- baby Verma


def baby_verma(L: LieAlgebra, weight) -> GModule:
    """Baby Verma module Z(lambda) = u(g) (x)_{u(b)} k_lambda for sl_3.

    Basis ``f1^i f2^j f3^m v`` (``0 <= i, j, m < p``), ordered
    lexicographically.  The action of a basis element y on a monomial is
    computed by peeling off the leftmost f and straightening,
    ``y (f rest) = f (y rest) + [y, f] rest``, with ``f^p = 0`` in the
    restricted enveloping algebra.
    """
    if not L.is_sl3_basis():
        raise ValueError("baby Verma modules need the sl3 basis (h1, h2, e1, e2, e3, f1, f2, f3)")
    lam = Weight(*weight)
    p = L.p
    if not (0 <= lam.a < p and 0 <= lam.b < p):
        raise ValueError(f"highest weight {lam} is not restricted for p = {p}")

    monos = list(product(range(p), repeat=3))
    pos = {m: k for k, m in enumerate(monos)}
    dim = len(monos)
    F = L.index("f1"), L.index("f2"), L.index("f3")
    c = np.mod(L.structure, p)

    def unit(mono) -> np.ndarray:
        v = np.zeros(dim, dtype=np.int64)
        v[pos[mono]] = 1
        return v

    def act_vec(y: int, vec: np.ndarray) -> np.ndarray:
        out = np.zeros(dim, dtype=np.int64)
        for k in np.flatnonzero(vec):
            out += vec[k] * act(y, monos[k])
        return np.mod(out, p)

    def act_elem(coeffs: np.ndarray, mono) -> np.ndarray:
        out = np.zeros(dim, dtype=np.int64)
        for y in np.flatnonzero(coeffs):
            out += coeffs[y] * act(int(y), mono)
        return np.mod(out, p)

    @lru_cache(maxsize=None)
    def _act(y: int, mono: tuple[int, int, int]) -> tuple[int, ...]:
        i, j, m = mono
        # monomials the f's can extend directly
        if y == F[0]:
            return tuple(unit((i + 1, j, m))) if i + 1 < p else (0,) * dim
        if y == F[2]:
            # f3 commutes with f1 and f2
            return tuple(unit((i, j, m + 1))) if m + 1 < p else (0,) * dim
        if y == F[1] and i == 0:
            return tuple(unit((0, j + 1, m))) if j + 1 < p else (0,) * dim
        if mono == (0, 0, 0):
            v = np.zeros(dim, dtype=np.int64)
            if y == L.index("h1"):
                v[0] = lam.a
            elif y == L.index("h2"):
                v[0] = lam.b
            # e's kill v; remaining f cases handled above
            return tuple(np.mod(v, p))
        if i > 0:
            t, rest = F[0], (i - 1, j, m)
        elif j > 0:
            t, rest = F[1], (0, j - 1, m)
        else:
            t, rest = F[2], (0, 0, m - 1)
        out = act_vec(t, act(y, rest)) + act_elem(c[y, t], rest)
        return tuple(np.mod(out, p))

    def act(y: int, mono) -> np.ndarray:
        return np.asarray(_act(y, mono), dtype=np.int64)

    action = []
    for y in range(L.dim):
        mat = np.zeros((dim, dim), dtype=np.int64)
        for k, mono in enumerate(monos):
            mat[:, k] = act(y, mono)
        action.append(mat)
    weights = tuple(
        lam - ALPHA1.scale(i) - ALPHA2.scale(j) - (ALPHA1 + ALPHA2).scale(m) for i, j, m in monos
    )
    labels = tuple(f"f1^{i}f2^{j}f3^{m}v" for i, j, m in monos)
    return GModule(L, action, weights, name=f"Z({lam.a},{lam.b})", highest_index=0, basis_labels=labels)


def generated_submodule(M: GModule, vectors: Iterable) -> np.ndarray:
    """Echelon basis of the smallest submodule containing ``vectors``."""
    span = SpanBuilder(M.field, M.dim)
    queue = []
    for v in vectors:
        if span.add(v):
            queue.append(np.asarray(v, dtype=np.int64))
    acts = [np.asarray(a, dtype=np.int64) for a in M.action]
    while queue:
        v = queue.pop()
        for a in acts:
            w = np.mod(a @ v, M.p)
            if w.any() and span.add(w):
                queue.append(w)
    return span.basis()


def _projective_points(basis: np.ndarray, p: int):
    """One nonzero vector per line in the span of the rows of ``basis``."""
    k = basis.shape[0]
    for coeffs in product(range(p), repeat=k):
        nz = [c for c in coeffs if c]
        if not nz or nz[0] != 1:
            continue
        yield np.mod(np.asarray(coeffs, dtype=np.int64) @ np.asarray(basis, dtype=np.int64), p)


def _weight_spaces(M: GModule) -> dict[Weight, list[int]]:
    spaces: dict[Weight, list[int]] = {}
    for k, w in enumerate(M.weights):
        spaces.setdefault(w, []).append(k)
    return spaces


def maximal_submodule(Z: GModule) -> np.ndarray:
    """Unique maximal submodule of a highest weight module, as an echelon basis.

    The maximal submodule is graded, so it is spanned by the weight vectors w
    whose generated submodule misses the highest weight vector; every vector
    of every weight space is swept (up to scalars).
    """
    if Z.highest_index is None:
        raise ValueError(f"{Z.name} has no marked highest weight vector")
    top = np.zeros(Z.dim, dtype=np.int64)
    top[Z.highest_index] = 1
    found = SpanBuilder(Z.field, Z.dim)
    for w, idx in sorted(_weight_spaces(Z).items()):
        if w == Z.weights[Z.highest_index]:
            continue
        basis = np.zeros((len(idx), Z.dim), dtype=np.int64)
        basis[np.arange(len(idx)), idx] = 1
        for v in _projective_points(basis, Z.p):
            if found.contains(v):
                continue
            sub = generated_submodule(Z, [v])
            if not Z.field.in_span(list(sub), top):
                for row in sub:
                    found.add(row)
    return found.basis()


def simple_quotient(Z: GModule) -> GModule:
    """The simple head ``Z / rad Z`` of a baby Verma module."""
    rad = maximal_submodule(Z)
    name = Z.name.replace("Z(", "L(", 1) if Z.name.startswith("Z(") else f"head({Z.name})"
    L_mod = quotient_module(Z, list(rad), name=name) if len(rad) else _renamed(Z, name)
    try:
        simple = is_simple(L_mod)
    except UndecidedError:
        simple = None
    if simple is False:
        raise RuntimeError(f"{name}: quotient by the computed radical is not simple")
    if simple is None:
        L_mod.notes.append("simplicity undecided by invariant-vector enumeration")
    return L_mod


def _renamed(M: GModule, name: str) -> GModule:
    return GModule(
        M.algebra, list(M.action), M.weights, name=name, highest_index=M.highest_index, basis_labels=M.basis_labels
    )


def simple_module(L: LieAlgebra, r: int, s: int) -> GModule:
    return simple_quotient(baby_verma(L, (r, s)))


def raising_invariants(M: GModule) -> list[np.ndarray]:
    """Basis of the joint kernel of the e-actions."""
    L = M.algebra
    es = [i for i, lab in enumerate(L.labels) if lab.startswith("e")]
    if not es:
        raise ValueError("algebra has no raising operators labelled e*")
    stacked = np.vstack([np.asarray(M.action[i], dtype=np.int64) for i in es])
    return M.field.nullspace(stacked)


def is_simple(M: GModule, bound: int = 4) -> bool:
    """Simplicity via the nonzero vectors killed by all raising operators.

    Any nonzero submodule contains such a vector, so M is simple iff each of
    them generates M.  Raises :class:`UndecidedError` when the invariant space
    has dimension above ``bound``.
    """
    inv = raising_invariants(M)
    if len(inv) > bound:
        raise UndecidedError(f"{M.name}: {len(inv)}-dimensional invariant space exceeds bound {bound}")
    if M.dim == 0:
        return False
    basis = np.vstack(inv) if inv else np.zeros((0, M.dim), dtype=np.int64)
    return all(len(generated_submodule(M, [v])) == M.dim for v in _projective_points(basis, M.p))


# ------------------------------------------------------ reference characters


def _twist(ch: Counter, p: int) -> Character:
    return Counter({w.scale(p): m for w, m in ch.items()})


def reference_characters(p: int = 3) -> dict[str, Character]:
    """Frobenius-twisted characters of the G-modules named in the results."""
    if p != 3:
        raise ValueError("reference characters are tabulated for p = 3 only")
    roots = weyl_orbit((1, 1))
    nat = Counter({Weight(1, 0): 1, Weight(-1, 1): 1, Weight(0, -1): 1})
    base = {
        "k": Counter({ZERO: 1}),
        "L(1,0)": nat,
        "L(0,1)": Counter({-w: m for w, m in nat.items()}),
        "L(1,1)": Counter({**{w: 1 for w in roots}, ZERO: 1}),
        "H0(1,1)": Counter({**{w: 1 for w in roots}, ZERO: 2}),
    }
    return {(name if name == "k" else f"{name}^(1)"): _twist(ch, p) for name, ch in base.items()}


# ------------------------------------------------------------------- JSON I/O


def module_to_json(M: GModule) -> dict:
    return {
        "name": M.name,
        "p": M.p,
        "dim": M.dim,
        "weights": [[w.a, w.b] for w in M.weights],
        "action": [[[int(x) for x in row] for row in np.mod(a, M.p)] for a in M.action],
    }


def module_from_json(L: LieAlgebra, doc: dict) -> GModule:
    dim = int(doc["dim"])
    if "p" in doc and int(doc["p"]) != L.p:
        raise ValueError(f"module is over GF({doc['p']}), algebra over GF({L.p})")
    action = [np.mod(np.asarray(a, dtype=np.int64), L.p) for a in doc["action"]]
    if len(action) != L.dim:
        raise ValueError(f"expected {L.dim} action matrices, got {len(action)}")
    if any(a.shape != (dim, dim) for a in action):
        raise ValueError(f"action matrices must be {dim}x{dim}")
    weights = tuple(Weight(int(a), int(b)) for a, b in doc["weights"])
    if len(weights) != dim:
        raise ValueError("weights length does not match dim")
    return GModule(L, action, weights, name=doc.get("name", "custom"))


def load_module(L: LieAlgebra, path) -> GModule:
    return module_from_json(L, json.loads(Path(path).read_text()))
