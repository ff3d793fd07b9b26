"""Exact linear algebra over a prime field or the rationals."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import TYPE_CHECKING

import numpy as np
import sympy

from .scalars import FieldCfg, Scalar

if TYPE_CHECKING:
    from numpy.typing import NDArray

__all__ = [
    "SubspaceMod",
    "coordinates",
    "inverse_mod",
    "kernel_basis",
    "matmul_mod",
    "rank",
    "rref",
    "rref_mod",
]


def matmul_mod(
    a: NDArray[np.int64], b: NDArray[np.int64], p: int
) -> NDArray[np.int64]:
    """Matrix product modulo ``p``.

    Runs through float64 while the accumulated sums stay exact.
    """
    if a.shape[-1] * (p - 1) ** 2 < 2**53:
        out = a.astype(np.float64) @ b.astype(np.float64)
        return np.mod(np.rint(out), p).astype(np.int64)
    return (a.astype(np.int64) @ b.astype(np.int64)) % p


def rref_mod(
    rows: NDArray[np.int64] | Sequence[Sequence[int]], p: int
) -> tuple[NDArray[np.int64], list[int]]:
    """Reduced row echelon form modulo ``p``; zero rows are dropped."""
    m = np.array(rows, dtype=np.int64) % p
    if m.ndim != 2 or m.size == 0:
        width = m.shape[1] if m.ndim == 2 else 0
        return np.zeros((0, width), dtype=np.int64), []
    n_rows, n_cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, p) % p
        col = m[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            m[hit] = (m[hit] - np.outer(col[hit], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _to_sympy(rows: Sequence[Sequence[Scalar]]) -> sympy.Matrix:
    return sympy.Matrix(
        [[sympy.Rational(Fraction(c).numerator, Fraction(c).denominator)
          for c in row] for row in rows]
    )


def _from_sympy(value: sympy.Expr) -> Scalar:
    value = sympy.Rational(value)
    if value.q == 1:
        return int(value.p)
    return Fraction(int(value.p), int(value.q))


def rref(
    rows: Sequence[Sequence[Scalar]], cfg: FieldCfg
) -> tuple[list[list[Scalar]], list[int]]:
    if cfg.is_prime:
        m, pivots = rref_mod(
            [[int(cfg.reduce(c)) for c in row] for row in rows], cfg.p
        )
        return m.tolist(), pivots
    if not rows:
        return [], []
    m, pivots = _to_sympy(rows).rref()
    out = [
        [_from_sympy(c) for c in m.row(i)] for i in range(len(pivots))
    ]
    return out, list(pivots)


def rank(rows: Sequence[Sequence[Scalar]], cfg: FieldCfg) -> int:
    if not rows:
        return 0
    return len(rref(rows, cfg)[1])


def kernel_basis(
    rows: Sequence[Sequence[Scalar]], cfg: FieldCfg, n_cols: int
) -> list[tuple[Scalar, ...]]:
    """Basis of ``{v : M v = 0}`` with a 1 in each free column."""
    reduced, pivots = rref(rows, cfg) if rows else ([], [])
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v: list[Scalar] = [0] * n_cols
        v[f] = 1
        for row, c in zip(reduced, pivots, strict=True):
            v[c] = cfg.neg(row[f])
        basis.append(tuple(v))
    return basis


def coordinates(
    basis: Sequence[Sequence[Scalar]],
    vector: Sequence[Scalar],
    cfg: FieldCfg,
) -> list[Scalar] | None:
    """Solve ``Σ c_i basis_i = vector``; ``None`` if there is no solution."""
    n = len(basis)
    width = len(vector)
    # columns are basis vectors, augmented by the target
    rows = [
        [basis[i][j] for i in range(n)] + [vector[j]] for j in range(width)
    ]
    reduced, pivots = rref(rows, cfg)
    if n in pivots:
        return None
    out: list[Scalar] = [0] * n
    for row, c in zip(reduced, pivots, strict=True):
        out[c] = row[n]
    return out


def inverse_mod(m: NDArray[np.int64], p: int) -> NDArray[np.int64]:
    n = m.shape[0]
    augmented = np.hstack([m % p, np.eye(n, dtype=np.int64)])
    reduced, pivots = rref_mod(augmented, p)
    if pivots[:n] != list(range(n)):
        errmsg = "Matrix is singular."
        raise ValueError(errmsg)
    return reduced[:n, n:]


class SubspaceMod:
    """Subspace of row vectors modulo ``p`` in fully reduced echelon form."""

    def __init__(self, dim: int, p: int) -> None:
        self.p = p
        self.basis = np.zeros((0, dim), dtype=np.int64)
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, vecs: NDArray[np.int64]) -> NDArray[np.int64]:
        v = np.atleast_2d(np.asarray(vecs, dtype=np.int64)) % self.p
        if self.pivots:
            v = (v - matmul_mod(v[:, self.pivots], self.basis, self.p))
            v %= self.p
        return v

    def contains(self, vec: NDArray[np.int64]) -> bool:
        return not self.reduce(vec).any()

    def add(self, vecs: NDArray[np.int64]) -> NDArray[np.int64]:
        """Extend by ``vecs`` and return the genuinely new echelon rows."""
        r = self.reduce(vecs)
        r = r[np.any(r, axis=1)]
        if r.shape[0] == 0:
            return r
        new, pivots = rref_mod(r, self.p)
        if self.pivots:
            self.basis = (
                self.basis - matmul_mod(self.basis[:, pivots], new, self.p)
            ) % self.p
        self.basis = np.vstack([self.basis, new])
        self.pivots.extend(pivots)
        return new

    def close(self, maps: Iterable[NDArray[np.int64]]) -> int:
        """Close under right multiplication by every matrix in ``maps``."""
        maps = list(maps)
        frontier = self.basis.copy()
        while frontier.shape[0]:
            images = np.vstack(
                [matmul_mod(frontier, a, self.p) for a in maps]
            )
            frontier = self.add(images)
        return self.dim
