"""Verma modules and simple modules of the double D(H)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Literal

import numpy as np

from .catalog import build_algebra
from .linalg import SubspaceMod, inverse_mod, matmul_mod
from .ncalg import format_word
from .report import Check, make_check

if TYPE_CHECKING:
    from numpy.typing import NDArray

    from .catalog import AlgebraSpec
    from .ncalg import Word
    from .scalars import FieldCfg

__all__ = [
    "ModuleRep",
    "SimplicityCertificate",
    "Weight",
    "certify_simple",
    "check_relations",
    "expected_action",
    "head_dimension",
    "irrep_table",
    "simple_module",
    "verify_irreps",
    "verma_module",
]

GENERATORS = ("x", "y", "g", "zeta", "u", "v")

# projective points enumerated at most by certify_simple
_MAX_POINTS = 200_000


@dataclass(frozen=True)
class Weight:
    """One-dimensional module of ``D^{≥0}``: g by 1, ζ by k, u and v by 0."""

    k: int
    p: int

    def value(self, letters: Word, alg: AlgebraSpec) -> int:
        out = 1
        for a in letters:
            name = alg.alphabet[a]
            if name in ("u", "v"):
                return 0
            if name == "zeta":
                out = out * self.k % self.p
        return out


@dataclass(eq=False)
class ModuleRep:
    """Left module given by one action matrix per generator.

    ``matrices[a] @ v`` is the action of ``a`` on the column vector ``v``.
    """

    name: str
    p: int
    labels: list[str]
    matrices: dict[str, NDArray[np.int64]] = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def word_matrix(self, word: Word, alg: AlgebraSpec) -> NDArray[np.int64]:
        out = np.eye(self.dim, dtype=np.int64)
        for a in word:
            out = matmul_mod(out, self.matrices[alg.alphabet[a]], self.p)
        return out

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "p": self.p,
            "dim": self.dim,
            "basis": list(self.labels),
            "matrices": {k: v.tolist() for k, v in self.matrices.items()},
        }


def _double(cfg: FieldCfg) -> AlgebraSpec:
    if not cfg.is_prime:
        errmsg = "Modules of D(H) are built over F_p only."
        raise ValueError(errmsg)
    return build_algebra("DH", cfg)


def check_relations(module: ModuleRep, dh: AlgebraSpec) -> list[str]:
    """Defining relations of ``D(H)`` that do not act by zero."""
    p = module.p
    bad = []
    for rule in dh.system.rules:
        lhs = module.word_matrix(rule.lhs, dh)
        rhs = np.zeros_like(lhs)
        for w, c in rule.rhs.terms.items():
            rhs = (rhs + int(c) * module.word_matrix(w, dh)) % p
        if (lhs != rhs).any():
            bad.append(f"{format_word(rule.lhs, dh.alphabet)} = {rule.rhs}")
    return bad


def _verified(module: ModuleRep, dh: AlgebraSpec) -> ModuleRep:
    bad = check_relations(module, dh)
    if bad:
        errmsg = f"{module.name} violates {', '.join(bad)}."
        raise RuntimeError(errmsg)
    return module


def verma_module(cfg: FieldCfg, k: int) -> ModuleRep:
    """``M(λ_k)`` on the basis ``x^i y^j · w``, ``i, j < p``.

    A generator times ``x^i y^j`` is normalized in ``D(H)``; each normal
    word splits as a ``D^{<0}`` part times a ``D^{≥0}`` part, which acts
    on the weight line by a scalar.
    """
    dh = _double(cfg)
    p = cfg.p
    weight = Weight(k % p, p)
    x, y = dh.letter("x"), dh.letter("y")
    words = [(x,) * i + (y,) * j for i in range(p) for j in range(p)]
    index = {w: n for n, w in enumerate(words)}
    matrices = {}
    for name in GENERATORS:
        m = np.zeros((p * p, p * p), dtype=np.int64)
        for col, w in enumerate(words):
            for word, c in dh.system.multiply((dh.letter(name),), w).items():
                cut = 0
                while cut < len(word) and word[cut] in (x, y):
                    cut += 1
                scalar = weight.value(word[cut:], dh)
                if scalar:
                    row = index[word[:cut]]
                    m[row, col] = (m[row, col] + int(c) * scalar) % p
        matrices[name] = m
    labels = [f"w({i},{j})" for i in range(p) for j in range(p)]
    return _verified(ModuleRep(f"M({k})", p, labels, matrices), dh)


def _generated(module: ModuleRep, vectors: NDArray[np.int64]) -> SubspaceMod:
    space = SubspaceMod(module.dim, module.p)
    space.add(vectors)
    space.close(m.T for m in module.matrices.values())
    return space


def _quotient(
    module: ModuleRep, sub: SubspaceMod, classes: list[NDArray[np.int64]],
    labels: list[str], name: str,
) -> ModuleRep:
    """Quotient action on the basis given by the classes of ``classes``."""
    p = module.p
    free = [c for c in range(module.dim) if c not in sub.pivots]

    def project(v: NDArray[np.int64]) -> NDArray[np.int64]:
        return sub.reduce(v)[0][free]

    basis = np.column_stack([project(v) for v in classes])
    if len(free) != len(classes):
        errmsg = (f"{name}: {len(classes)} classes for a quotient of "
                  f"dimension {len(free)}.")
        raise RuntimeError(errmsg)
    change = inverse_mod(basis, p)
    matrices = {}
    for gen, m in module.matrices.items():
        images = np.column_stack([project(m @ v % p) for v in classes])
        matrices[gen] = matmul_mod(change, images, p)
    return ModuleRep(name, p, labels, matrices)


def _unit(dim: int, i: int) -> NDArray[np.int64]:
    e = np.zeros(dim, dtype=np.int64)
    e[i] = 1
    return e


def simple_module(cfg: FieldCfg, k: int) -> ModuleRep:
    """``L_k``, built through ``M(λ_k) → V_k → L_k``.

    ``V_k`` is ``M(λ_k)`` modulo the submodule generated by ``x · w``,
    written in the basis ``y_j``; ``L_k`` divides by the submodule
    generated by ``y_{r+1}``, ``r ≡ -2k (mod p)``.
    """
    dh = _double(cfg)
    p = cfg.p
    k %= p
    verma = verma_module(cfg, k)
    n_k = _generated(verma, _unit(verma.dim, p))
    ys = [_unit(verma.dim, j) for j in range(p)]
    v_k = _quotient(verma, n_k, ys, [f"y{j}" for j in range(p)],
                    f"V({k})")
    _verified(v_k, dh)
    r = (-2 * k) % p
    if r + 1 < p:
        tilde = _generated(v_k, _unit(p, r + 1))
    else:
        tilde = SubspaceMod(p, p)
    zs = [_unit(p, j) for j in range(r + 1)]
    simple = _quotient(v_k, tilde, zs, [f"z{j}" for j in range(r + 1)],
                       f"L({k})")
    return _verified(simple, dh)


def expected_action(cfg: FieldCfg, k: int, dim: int
                    ) -> dict[str, NDArray[np.int64]]:
    """Action on ``y_0, …, y_{dim-1}`` by the closed formulas.

    ``ζ y_j = (k+j) y_j``, ``v y_j = ½ j (1-2k-j) y_{j-1}``,
    ``y y_j = y_{j+1}``, ``g`` by the identity, ``x`` and ``u`` by zero.
    """
    p = cfg.p
    half = int(cfg.half())
    out = {name: np.zeros((dim, dim), dtype=np.int64) for name in GENERATORS}
    out["g"] = np.eye(dim, dtype=np.int64)
    for j in range(dim):
        out["zeta"][j, j] = (k + j) % p
        if j:
            out["v"][j - 1, j] = half * j * (1 - 2 * k - j) % p
        if j + 1 < dim:
            out["y"][j + 1, j] = 1
    return out


@dataclass
class SimplicityCertificate:
    simple: bool
    method: Literal["burnside", "exhaustive", "basis"]
    witness: NDArray[np.int64] | None = None


def _burnside(module: ModuleRep) -> bool:
    """Whether the action matrices span the full matrix algebra."""
    d, p = module.dim, module.p
    eye = np.eye(d, dtype=np.int64)
    span = SubspaceMod(d * d, p)
    span.add(eye.ravel())
    span.close(np.kron(eye, m) for m in module.matrices.values())
    return span.dim == d * d


def _points(d: int, p: int):
    """One representative per line of ``F_p^d``, leading entry 1."""
    for lead in range(d):
        tail = d - lead - 1
        for n in range(p**tail):
            v = np.zeros(d, dtype=np.int64)
            v[lead] = 1
            for i in range(tail):
                n, v[lead + 1 + i] = divmod(n, p)
            yield v


def certify_simple(
    module: ModuleRep,
    mode: Literal["auto", "burnside", "exhaustive"] = "auto",
) -> SimplicityCertificate:
    """Decide simplicity; a non-simple verdict carries a witness vector.

    ``auto`` accepts on the Burnside criterion first: the algebra
    generated by the action matrices being all ``d × d`` matrices proves
    simplicity by one subspace closure, also at ``p = 7``. Failing that,
    it looks for a basis vector generating a proper submodule.
    ``exhaustive``, and ``auto`` as a last resort, enumerates one vector
    per line, ``(p^d - 1)/(p - 1)`` of them, and refuses beyond 200 000
    lines.
    """
    d, p = module.dim, module.p
    if mode in ("auto", "burnside") and _burnside(module):
        return SimplicityCertificate(True, "burnside")
    if mode == "burnside":
        return SimplicityCertificate(False, "burnside")
    if mode == "auto":
        for i in range(d):
            e = _unit(d, i)
            if _generated(module, e).dim < d:
                return SimplicityCertificate(False, "basis", e)
    if (p**d - 1) // (p - 1) > _MAX_POINTS:
        errmsg = (f"{module.name}: {d}-dimensional over F_{p} is too large "
                  f"for exhaustive enumeration.")
        raise ValueError(errmsg)
    for v in _points(d, p):
        if _generated(module, v).dim < d:
            return SimplicityCertificate(False, "exhaustive", v)
    return SimplicityCertificate(True, "exhaustive")


def head_dimension(verma: ModuleRep) -> int:
    """Dimension of the simple head of a Verma module.

    A vector lies in the largest proper submodule iff no element of the
    algebra moves it onto the weight line; the head is dual to the
    closure of the weight-line coordinate under the action.
    """
    functionals = SubspaceMod(verma.dim, verma.p)
    functionals.add(_unit(verma.dim, 0))
    functionals.close(verma.matrices.values())
    return functionals.dim


def irrep_table(cfg: FieldCfg) -> list[tuple[int, int]]:
    """``(k, dim L_k)`` for every weight ``k ∈ F_p``."""
    return [(k, simple_module(cfg, k).dim) for k in range(cfg.p)]


def verify_irreps(cfg: FieldCfg, certify: bool = True) -> list[Check]:
    """Build and check every Verma and simple module at ``p``."""
    p = cfg.p
    checks = []
    dims = []
    for k in range(p):
        params = {"p": p, "k": k}
        verma = verma_module(cfg, k)
        graded = _graded(verma)
        checks.append(make_check("irreps/verma-graded",
                                 "M(λ_k) is graded", params, not graded,
                                 graded))
        simple = simple_module(cfg, k)
        r = (-2 * k) % p
        dims.append(simple.dim)
        want = expected_action(cfg, k, simple.dim)
        bad = [n for n in GENERATORS
               if (simple.matrices[n] != want[n]).any()]
        checks.append(make_check(
            "irreps/action", "L_k acts by the closed formulas", params,
            simple.dim == r + 1 and not bad,
            f"dim {simple.dim}, expected {r + 1}; differs on "
            f"{', '.join(bad)}" if bad or simple.dim != r + 1 else "",
        ))
        head = head_dimension(verma)
        checks.append(make_check(
            "irreps/head", "L_k is the head of M(λ_k)", params,
            head == simple.dim, f"head {head}, L_k {simple.dim}",
        ))
        if certify:
            cert = certify_simple(simple)
            checks.append(make_check(
                "irreps/simple", "L_k is simple", params, cert.simple,
                f"method {cert.method}",
            ))
    checks.append(make_check(
        "irreps/dimensions", "dimensions are 1, …, p", {"p": p},
        sorted(dims) == list(range(1, p + 1)), f"{sorted(dims)}",
    ))
    return checks


def _graded(verma: ModuleRep) -> str:
    """Empty if every generator shifts ``-i-j`` by its degree."""
    p = verma.p
    degree = {"x": -1, "y": -1, "g": 0, "zeta": 0, "u": 1, "v": 1}
    levels = [-(i + j) for i in range(p) for j in range(p)]
    for name, m in verma.matrices.items():
        rows, cols = np.nonzero(m)
        for r, c in zip(rows, cols, strict=True):
            if levels[r] != levels[c] + degree[name]:
                return f"{name} maps {verma.labels[c]} to {verma.labels[r]}"
    return ""
