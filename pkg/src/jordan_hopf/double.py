"""Structure constants and the Drinfeld double of a finite Hopf algebra."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

from .hopfstr import antipode, counit, word_coproduct
from .linalg import SubspaceMod, inverse_mod, matmul_mod
from .pbw import enumerate_basis
from .report import Check, make_check

if TYPE_CHECKING:
    from numpy.typing import NDArray

    from .catalog import AlgebraSpec
    from .ncalg import Word
    from .scalars import Scalar

__all__ = [
    "DrinfeldDouble",
    "StructureConstants",
    "build_drinfeld_double",
    "check_antipode_antimultiplicative",
    "compare_with_presentation",
    "structure_constants",
    "verify_structure",
]


@dataclass(eq=False)
class StructureConstants:
    """Finite-dimensional Hopf algebra over ``F_p`` on a fixed basis.

    Attributes
    ----------
    basis: list of Word
        PBW words of the source algebra.
    mult: NDArray
        ``mult[i, j, k]`` is the coefficient of ``e_k`` in ``e_i e_j``.
    comult: NDArray
        ``comult[i, j, k]`` is the coefficient of ``e_j ⊗ e_k`` in
        ``Δ(e_i)``.
    unit, counit: NDArray
        Coordinates of ``1`` and the values ``ε(e_i)``.
    antipode: NDArray
        ``antipode[i, j]`` is the coefficient of ``e_j`` in ``S(e_i)``.

    """

    basis: list[Word]
    mult: NDArray[np.int64]
    comult: NDArray[np.int64]
    unit: NDArray[np.int64]
    counit: NDArray[np.int64]
    antipode: NDArray[np.int64]
    p: int
    index: dict[Word, int] = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vector(self, terms: Mapping[Word, Scalar]) -> NDArray[np.int64]:
        out = np.zeros(self.dim, dtype=np.int64)
        for w, c in terms.items():
            out[self.index[w]] = (out[self.index[w]] + int(c)) % self.p
        return out


def structure_constants(alg: AlgebraSpec) -> StructureConstants:
    """Tabulate the Hopf structure of a finite ordinary algebra over F_p."""
    if alg.hopf is None or alg.braided:
        errmsg = f"{alg.name!r} is not an ordinary Hopf algebra."
        raise ValueError(errmsg)
    if not alg.cfg.is_prime:
        errmsg = "Structure constants are tabulated over F_p only."
        raise ValueError(errmsg)
    p = alg.cfg.p
    basis = enumerate_basis(alg.system, "all").words
    index = {w: i for i, w in enumerate(basis)}
    n = len(basis)
    mult = np.zeros((n, n, n), dtype=np.int64)
    comult = np.zeros((n, n, n), dtype=np.int64)
    anti = np.zeros((n, n), dtype=np.int64)
    eps = np.zeros(n, dtype=np.int64)
    for i, wi in enumerate(basis):
        for j, wj in enumerate(basis):
            for w, c in alg.system.multiply(wi, wj).items():
                mult[i, j, index[w]] = int(c) % p
        for (w1, w2), c in word_coproduct(alg, wi).items():
            comult[i, index[w1], index[w2]] = int(c) % p
        for w, c in antipode(alg, {wi: 1}).terms.items():
            anti[i, index[w]] = int(c) % p
        eps[i] = int(counit(alg, {wi: 1})) % p
    unit = np.zeros(n, dtype=np.int64)
    unit[index[()]] = 1
    return StructureConstants(basis, mult, comult, unit, eps, anti, p, index)


def verify_structure(sc: StructureConstants) -> list[str]:
    """Names of the Hopf axioms the tables violate; empty when all hold.

    Multiplicativity of ``Δ`` is checked on products ``e_i e_j`` with
    ``e_i`` a generator, which together with associativity covers all
    products.
    """
    p = sc.p
    mult, comult, n = sc.mult, sc.comult, sc.dim
    failures = []
    left = np.einsum("ijm,mkl->ijkl", mult, mult) % p
    right = np.einsum("jkm,iml->ijkl", mult, mult) % p
    if (left != right).any():
        failures.append("associativity")
    left = np.einsum("iml,mjk->ijkl", comult, comult) % p
    right = np.einsum("ijm,mkl->ijkl", comult, comult) % p
    if (left != right).any():
        failures.append("coassociativity")
    eye = np.eye(n, dtype=np.int64)
    if (np.einsum("j,jik->ik", sc.unit, mult) % p != eye).any() or (
        np.einsum("j,ijk->ik", sc.unit, mult) % p != eye
    ).any():
        failures.append("unit")
    if (np.einsum("ijk,j->ik", comult, sc.counit) % p != eye).any() or (
        np.einsum("ijk,k->ij", comult, sc.counit) % p != eye
    ).any():
        failures.append("counit")
    unit_eps = np.outer(sc.counit, sc.unit) % p
    s_left = np.einsum("ijk,jl,lkm->im", comult, sc.antipode, mult) % p
    s_right = np.einsum("ijk,kl,jlm->im", comult, sc.antipode, mult) % p
    if (s_left != unit_eps).any() or (s_right != unit_eps).any():
        failures.append("antipode")
    generators = [i for i, w in enumerate(sc.basis) if len(w) == 1]
    for i in generators:
        for j in range(n):
            if not _multiplicative(sc, i, j):
                failures.append("multiplicativity")
                return failures
    return failures


def _multiplicative(sc: StructureConstants, i: int, j: int) -> bool:
    p = sc.p
    want = np.einsum("k,kab->ab", sc.mult[i, j], sc.comult) % p
    got = np.zeros_like(want)
    for a, b in zip(*np.nonzero(sc.comult[i]), strict=True):
        for c, d in zip(*np.nonzero(sc.comult[j]), strict=True):
            coeff = sc.comult[i, a, b] * sc.comult[j, c, d]
            got = (got + coeff * np.outer(sc.mult[a, c], sc.mult[b, d])) % p
    return bool((got == want).all())


class DrinfeldDouble:
    """``D(L) = L ⋈ L*`` on the basis ``e_i ⋈ f_a``.

    Elements are ``dim L × dim L`` arrays indexed by ``(i, a)``. The
    product ``(h ⋈ f)(h' ⋈ f') = ⟨f₁, h'₁⟩⟨f₃, S(h'₃)⟩ h h'₂ ⋈ f' f₂``
    is contracted once into ``weights[j, a, j2, a2]``; a basis product is
    then two small matrix products.
    """

    def __init__(self, base: StructureConstants) -> None:
        self.base = base
        p, n = base.p, base.dim
        mult, comult = base.mult, base.comult
        # three-fold coproducts of L and three-fold products for L*
        co3 = np.einsum("jam,mbc->jabc", comult, comult) % p
        mu3 = np.einsum("abm,mcx->abcx", mult, mult) % p
        staged = np.einsum("jabc,cd->jabd", co3, base.antipode) % p
        # rows (j, j2), columns (j1, a3)
        lhs = staged.transpose(0, 2, 1, 3).reshape(n * n, n * n)
        # rows (j1, a3), columns (a2, a)
        rhs = mu3.transpose(0, 2, 1, 3).reshape(n * n, n * n)
        weights = matmul_mod(lhs, rhs, p).reshape(n, n, n, n)
        self.weights = weights.transpose(0, 3, 1, 2).copy()
        self.epsilon = base.counit.copy()
        self._right: dict[str, NDArray[np.int64]] = {}
        self._inverse: NDArray[np.int64] | None = None
        self._antipodes: dict[tuple[int, int], NDArray[np.int64]] = {}

    @property
    def dim(self) -> int:
        return self.base.dim**2

    @property
    def p(self) -> int:
        return self.base.p

    def element(
        self, h: NDArray[np.int64], f: NDArray[np.int64] | None = None
    ) -> NDArray[np.int64]:
        """``h ⋈ f``; ``f`` defaults to the counit, the unit of ``L*``."""
        f = self.epsilon if f is None else f
        return np.outer(h, f) % self.p

    def one(self) -> NDArray[np.int64]:
        return self.element(self.base.unit)

    def basis_product(self, i: int, a: int, j: int, b: int
                      ) -> NDArray[np.int64]:
        base = self.base
        left = base.mult[i].T
        right = base.comult[:, b, :].T
        return matmul_mod(
            matmul_mod(left, self.weights[j, a], self.p), right, self.p
        )

    def multiply(self, x: NDArray[np.int64], y: NDArray[np.int64]
                 ) -> NDArray[np.int64]:
        p = self.p
        out = np.zeros_like(x)
        for i, a in zip(*np.nonzero(x), strict=True):
            for j, b in zip(*np.nonzero(y), strict=True):
                coeff = int(x[i, a]) * int(y[j, b]) % p
                out = (out + coeff * self.basis_product(i, a, j, b)) % p
        return out

    def right_multiplication(self, y: NDArray[np.int64]
                             ) -> NDArray[np.int64]:
        """Matrix of ``z ↦ z y`` acting on flattened row vectors."""
        n = self.base.dim
        out = np.zeros((n * n, n * n), dtype=np.int64)
        for i in range(n):
            for a in range(n):
                e = np.zeros((n, n), dtype=np.int64)
                e[i, a] = 1
                out[i * n + a] = self.multiply(e, y).ravel()
        return out

    def coproduct(self, x: NDArray[np.int64]) -> NDArray[np.int64]:
        """``Δ(h ⋈ f) = (h₁ ⋈ f₁) ⊗ (h₂ ⋈ f₂)`` as a flattened matrix."""
        base, p, n = self.base, self.p, self.base.dim
        out = np.zeros((n, n, n, n), dtype=np.int64)
        for i, a in zip(*np.nonzero(x), strict=True):
            part = np.einsum("jk,bc->jbkc", base.comult[i],
                             base.mult[:, :, a])
            out = (out + int(x[i, a]) * part) % p
        return out.reshape(n * n, n * n)

    def basis_element(self, i: int, a: int) -> NDArray[np.int64]:
        out = np.zeros((self.base.dim, self.base.dim), dtype=np.int64)
        out[i, a] = 1
        return out

    def basis_antipode(self, i: int, a: int) -> NDArray[np.int64]:
        """``S(e_i ⋈ f_a) = (1 ⋈ S⁻¹(f_a))(S(e_i) ⋈ ε)``, memoized."""
        hit = self._antipodes.get((i, a))
        if hit is None:
            base = self.base
            if self._inverse is None:
                self._inverse = inverse_mod(base.antipode, self.p)
            left = self.element(base.unit, self._inverse[:, a])
            right = self.element(base.antipode[i])
            hit = self.multiply(left, right)
            self._antipodes[(i, a)] = hit
        return hit

    def antipode(self, x: NDArray[np.int64]) -> NDArray[np.int64]:
        p = self.p
        out = np.zeros_like(x)
        for i, a in zip(*np.nonzero(x), strict=True):
            out = (out + int(x[i, a]) * self.basis_antipode(i, a)) % p
        return out


def build_drinfeld_double(base: StructureConstants) -> DrinfeldDouble:
    """Double of a verified structure-constant Hopf algebra.

    Raises
    ------
    ValueError
        If the input tables violate a Hopf axiom.

    """
    failures = verify_structure(base)
    if failures:
        errmsg = f"Input is not a Hopf algebra: {', '.join(failures)}."
        raise ValueError(errmsg)
    return DrinfeldDouble(base)


def check_antipode_antimultiplicative(
    double: DrinfeldDouble, rng: np.random.Generator, pairs: int = 100
) -> Check:
    """Check ``S(xy) = S(y) S(x)`` on random pairs of basis elements."""
    n = double.base.dim
    params = {"p": double.p, "pairs": pairs}
    for row in rng.integers(0, n, size=(pairs, 4)):
        i, a, j, b = (int(v) for v in row)
        got = double.antipode(double.basis_product(i, a, j, b))
        want = double.multiply(double.basis_antipode(j, b),
                               double.basis_antipode(i, a))
        if (got != want).any():
            detail = f"fails for x = e{i}⋈f{a}, y = e{j}⋈f{b}"
            return make_check("double/antipode-anti", "S(xy) = S(y)S(x)",
                              params, False, detail)
    return make_check("double/antipode-anti", "S(xy) = S(y)S(x)", params)


def _dual_sum(base: StructureConstants, words: Sequence[Word],
              weights: Sequence[int]) -> NDArray[np.int64]:
    f = np.zeros(base.dim, dtype=np.int64)
    for w, c in zip(words, weights, strict=True):
        f[base.index[w]] = c % base.p
    return f


def generator_images(
    double: DrinfeldDouble, h_alg: AlgebraSpec
) -> dict[str, NDArray[np.int64]]:
    """Elements of the double named like the generators of ``D(H)``.

    ``x, y, g`` are ``h ⋈ ε``; ``ζ``, ``u`` and ``v`` pair with the
    ``g``-graded components ``g^k``, ``y g^k`` and ``x g^k``.
    """
    base, p = double.base, double.p
    x, y, g = (h_alg.letter(n) for n in ("x", "y", "g"))
    out = {}
    for name, letter in (("x", x), ("y", y), ("g", g)):
        out[name] = double.element(base.vector({(letter,): 1}))
    powers = [(g,) * k for k in range(p)]
    one = base.unit
    out["zeta"] = double.element(
        one, _dual_sum(base, powers, list(range(p)))
    )
    out["u"] = double.element(
        one, _dual_sum(base, [(y,) + w for w in powers], [1] * p)
    )
    out["v"] = double.element(
        one, _dual_sum(base, [(x,) + w for w in powers], [1] * p)
    )
    return out


def compare_with_presentation(
    double: DrinfeldDouble,
    h_alg: AlgebraSpec,
    dh: AlgebraSpec,
    rng: np.random.Generator,
    sample: int = 10_000,
) -> list[Check]:
    """Match the double built from tables with the presented ``D(H)``.

    Checks the defining relations among the generator images, that the
    images of the PBW monomials form a basis, sampled products,
    coproducts and antipodes of the generators, and that the antipode
    reverses 100 random basis products.
    """
    p, n2 = double.p, double.dim
    params = {"p": p}
    checks = []
    gens = generator_images(double, h_alg)
    right = {dh.letter(k): double.right_multiplication(v)
             for k, v in gens.items()}
    unit = double.one().ravel()
    memo: dict[Word, NDArray[np.int64]] = {(): unit}

    def image(word: Word) -> NDArray[np.int64]:
        hit = memo.get(word)
        if hit is None:
            hit = matmul_mod(image(word[:-1])[None, :], right[word[-1]],
                             p)[0]
            memo[word] = hit
        return hit

    def image_terms(terms: Mapping[Word, Scalar]) -> NDArray[np.int64]:
        out = np.zeros(n2, dtype=np.int64)
        for w, c in terms.items():
            out = (out + int(c) * image(w)) % p
        return out

    checks.append(make_check(
        "double/dimension", "dim D(H) = p^6", params,
        n2 == p**6, f"{n2}",
    ))

    bad = ""
    for rule in dh.system.rules:
        if (image(rule.lhs) != image_terms(rule.rhs.terms)).any():
            bad = f"{dh.elem({rule.lhs: 1})} = {rule.rhs}"
            break
    checks.append(make_check("double/relations",
                             "generator images satisfy the relations",
                             params, not bad, bad))

    words = enumerate_basis(dh.system, "all").words
    space = SubspaceMod(n2, p)
    space.add(np.vstack([image(w) for w in words]))
    checks.append(make_check(
        "double/bijection", "PBW monomials map to a basis", params,
        space.dim == n2, f"rank {space.dim} of {n2}",
    ))

    bad = ""
    pairs = rng.integers(0, len(words), size=(sample, 2))
    for i, j in pairs:
        w1, w2 = words[int(i)], words[int(j)]
        got = image(w1)
        for a in w2:
            got = matmul_mod(got[None, :], right[a], p)[0]
        want = image_terms(dh.system.multiply(w1, w2))
        if (got != want).any():
            bad = f"{dh.elem({w1: 1})} · {dh.elem({w2: 1})}"
            break
    checks.append(make_check("double/products", "sampled products agree",
                             {**params, "sample": sample}, not bad, bad))

    bad = []
    for name, value in gens.items():
        want = np.zeros((n2, n2), dtype=np.int64)
        for (w1, w2), c in word_coproduct(dh, (dh.letter(name),)).items():
            want = (want + int(c) * np.outer(image(w1), image(w2))) % p
        if (double.coproduct(value) != want).any():
            bad.append(f"Δ({name})")
        presented = antipode(dh, {(dh.letter(name),): 1}).terms
        got = double.antipode(value).ravel()
        if (got != image_terms(presented)).any():
            bad.append(f"S({name})")
    checks.append(make_check(
        "double/hopf", "coproducts and antipodes of the generators",
        params, not bad, ", ".join(bad),
    ))
    checks.append(check_antipode_antimultiplicative(double, rng))
    return checks
