"""Graded dual of the Jordan plane, as functionals on its PBW basis."""

from __future__ import annotations

import functools
import itertools
from collections.abc import Mapping
from dataclasses import dataclass, field
from math import factorial
from typing import TYPE_CHECKING, Literal

from .catalog import build_algebra
from .hopfstr import coproduct_terms, word_coproduct
from .linalg import coordinates, rank
from .ncalg import NCPoly, Terms, Word, add_into, format_word
from .pbw import enumerate_basis
from .report import Check, make_check
from .scalars import binomial, raising_factorial

if TYPE_CHECKING:
    from collections.abc import Callable

    import numpy as np

    from .pbw import RewriteSystem
    from .scalars import FieldCfg, Scalar

__all__ = [
    "DualElem",
    "GDual",
    "JordanDual",
    "build_G_dual",
    "dual_pairing",
    "dual_multiply",
    "jordan_dual",
    "verify_dual_presentation",
]

# (m, n) stands for α_{m,n} = y^{[m]} x^{[n]}, dual to y^n x^m
Label = tuple[int, int]
LabelPairs = dict[tuple[Label, Label], "Scalar"]


def _fmt_label(label: Label) -> str:
    m, n = label
    parts = [f"y[{m}]" if m else "", f"x[{n}]" if n else ""]
    return "".join(parts) or "1"


def _fmt_pairs(pairs: Mapping[tuple[Label, Label], Scalar],
               cfg: FieldCfg) -> str:
    if not pairs:
        return "0"
    return " + ".join(
        f"{cfg.fmt(c)} {_fmt_label(a)}⊗{_fmt_label(b)}"
        for (a, b), c in sorted(pairs.items())
    )


class DualElem:
    """Finite combination of the dual basis functionals ``α_{m,n}``.

    ``α_{m,n}`` is dual to ``y^n x^m`` in the basis of monomials with
    every ``y`` on the left, so ``x^{[n]} = α_{0,n}`` pairs with ``y^n``
    and ``y^{[m]} = α_{m,0}`` pairs with ``x^m``.
    """

    __slots__ = ("cfg", "terms")

    def __init__(self, terms: Mapping[Label, Scalar], cfg: FieldCfg) -> None:
        self.cfg = cfg
        self.terms: dict[Label, Scalar] = {}
        for label, c in terms.items():
            value = cfg.reduce(c)
            if value:
                self.terms[tuple(label)] = value

    @classmethod
    def unit(cls, cfg: FieldCfg) -> DualElem:
        return cls({(0, 0): 1}, cfg)

    @classmethod
    def divided(cls, letter: Literal["x", "y"], n: int, cfg: FieldCfg
                ) -> DualElem:
        """``x^{[n]}`` or ``y^{[n]}``."""
        return cls({(0, n) if letter == "x" else (n, 0): 1}, cfg)

    @classmethod
    def basis(cls, label: Label, cfg: FieldCfg) -> DualElem:
        return cls({label: 1}, cfg)

    @property
    def degrees(self) -> set[int]:
        return {m + n for m, n in self.terms}

    def part(self, degree: int) -> dict[Label, Scalar]:
        return {lb: c for lb, c in self.terms.items() if sum(lb) == degree}

    def __add__(self, other: DualElem) -> DualElem:
        terms = dict(self.terms)
        for label, c in other.terms.items():
            terms[label] = self.cfg.add(terms.get(label, 0), c)
        return DualElem(terms, self.cfg)

    def __sub__(self, other: DualElem) -> DualElem:
        return self + other.scale(-1)

    def scale(self, c: Scalar) -> DualElem:
        return DualElem(
            {lb: self.cfg.mul(a, c) for lb, a in self.terms.items()},
            self.cfg,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DualElem):
            return NotImplemented
        return self.cfg == other.cfg and self.terms == other.terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"{self.cfg.fmt(c)} {_fmt_label(lb)}"
            for lb, c in sorted(self.terms.items(), key=lambda kv: _label_key(kv[0]))
        )

    def __repr__(self) -> str:
        return f"DualElem({self})"


def _label_key(label: Label) -> tuple[int, int]:
    return (sum(label), label[0])


class JordanDual:
    """Dual side of the Jordan plane ``B̃``, computed degree by degree.

    Products are dual to the braided coproduct of ``B̃`` with legs
    exchanged, ``⟨f f', b⟩ = Σ ⟨f, b₂⟩⟨f', b₁⟩``, and the coproduct is
    dual to the multiplication, ``Δ(f) = Σ f(b_{λ'} b_λ) α_λ ⊗ α_{λ'}``.
    """

    def __init__(self, cfg: FieldCfg) -> None:
        self.cfg = cfg
        self.btilde = build_algebra("Btilde", cfg)
        self.x = self.btilde.letter("x")
        self.y = self.btilde.letter("y")
        self._inverse: dict[int, list[list[Scalar]]] = {}
        self._coproducts: dict[Label, LabelPairs] = {}
        self._dual_coproducts: dict[Label, LabelPairs] = {}

    @staticmethod
    def labels(degree: int) -> list[Label]:
        return [(m, degree - m) for m in range(degree + 1)]

    def word(self, label: Label) -> Word:
        m, n = label
        return (self.y,) * n + (self.x,) * m

    def _monomial(self, word: Word) -> tuple[int, int]:
        """Degree and ``x``-exponent of a normal word ``x^i y^j``."""
        return len(word), sum(1 for a in word if a == self.x)

    def _table(self, degree: int) -> list[list[Scalar]]:
        """Row ``i``: coordinates of ``x^i y^{d-i}`` on ``labels(d)``."""
        hit = self._inverse.get(degree)
        if hit is not None:
            return hit
        cfg = self.cfg
        rows = []
        for label in self.labels(degree):
            row: list[Scalar] = [0] * (degree + 1)
            for w, c in self.btilde.system.nf(self.word(label)).items():
                row[self._monomial(w)[1]] = c
            rows.append(row)
        table = []
        for i in range(degree + 1):
            unit = [1 if j == i else 0 for j in range(degree + 1)]
            coords = coordinates(rows, unit, cfg)
            if coords is None:
                errmsg = f"Monomials of degree {degree} are not a basis."
                raise RuntimeError(errmsg)
            table.append(coords)
        self._inverse[degree] = table
        return table

    def coordinates(self, terms: Mapping[Word, Scalar]
                    ) -> dict[Label, Scalar]:
        """Coordinates of a normalized element on the ``y^n x^m`` basis."""
        cfg = self.cfg
        out: dict[Label, Scalar] = {}
        for w, c in terms.items():
            degree, i = self._monomial(w)
            for label, a in zip(self.labels(degree), self._table(degree)[i],
                                strict=True):
                if a:
                    out[label] = cfg.add(out.get(label, 0), cfg.mul(a, c))
        return {lb: c for lb, c in out.items() if c}

    def pair(self, e: DualElem, b: NCPoly | Mapping[Word, Scalar]
             ) -> Scalar:
        terms = b.terms if isinstance(b, NCPoly) else b
        terms = self.btilde.system.normalize_terms(terms)
        cfg = self.cfg
        out: Scalar = 0
        for label, c in self.coordinates(terms).items():
            a = e.terms.get(label)
            if a:
                out = cfg.add(out, cfg.mul(a, c))
        return out

    def basis_coproduct(self, label: Label) -> LabelPairs:
        """``Δ(y^n x^m)`` in ``B̃`` with both legs on the dual basis."""
        hit = self._coproducts.get(label)
        if hit is not None:
            return hit
        cfg = self.cfg
        out: LabelPairs = {}
        for (w1, w2), c in word_coproduct(self.btilde,
                                          self.word(label)).items():
            left = self.coordinates({w1: 1})
            right = self.coordinates({w2: 1})
            for l1, a in left.items():
                for l2, b in right.items():
                    key = (l1, l2)
                    out[key] = cfg.add(out.get(key, 0),
                                       cfg.mul(c, cfg.mul(a, b)))
        out = {k: c for k, c in out.items() if c}
        self._coproducts[label] = out
        return out

    def multiply(self, e1: DualElem, e2: DualElem) -> DualElem:
        cfg = self.cfg
        out: dict[Label, Scalar] = {}
        for d in {a + b for a in e1.degrees for b in e2.degrees}:
            for label in self.labels(d):
                value: Scalar = 0
                for (l1, l2), c in self.basis_coproduct(label).items():
                    a = e1.terms.get(l2)
                    b = e2.terms.get(l1)
                    if a and b:
                        value = cfg.add(value, cfg.mul(c, cfg.mul(a, b)))
                if value:
                    out[label] = value
        return DualElem(out, cfg)

    def power(self, e: DualElem, n: int) -> DualElem:
        out = DualElem.unit(self.cfg)
        for _ in range(n):
            out = self.multiply(out, e)
        return out

    def _basis_dual_coproduct(self, label: Label) -> LabelPairs:
        hit = self._dual_coproducts.get(label)
        if hit is not None:
            return hit
        f = DualElem.basis(label, self.cfg)
        out: LabelPairs = {}
        degree = sum(label)
        for d1 in range(degree + 1):
            for lam in self.labels(d1):
                for lam2 in self.labels(degree - d1):
                    product = self.btilde.system.multiply(
                        self.word(lam2), self.word(lam)
                    )
                    value = self.pair(f, product)
                    if value:
                        out[lam, lam2] = value
        self._dual_coproducts[label] = out
        return out

    def coproduct(self, f: DualElem) -> LabelPairs:
        """``Δ(f)``; the coefficient of ``α ⊗ α'`` is ``f(b_{α'} b_α)``."""
        out: LabelPairs = {}
        for label, c in f.terms.items():
            add_into(out, self._basis_dual_coproduct(label), c, self.cfg)
        return out

    def act(self, f: DualElem, s: int) -> DualElem:
        """``f ∘ g^s``, the functional ``b ↦ f(g^s ⇀ b)``."""
        yd = self.btilde.yd
        out: dict[Label, Scalar] = {}
        for d in f.degrees:
            for label in self.labels(d):
                value = self.pair(f, yd.act(self.word(label), s))
                if value:
                    out[label] = value
        return DualElem(out, self.cfg)

    def braiding(self, a: Label, b: Label) -> LabelPairs:
        """``c(α_a ⊗ α_b) = (α_b ∘ g^{|a|}) ⊗ α_a``."""
        moved = self.act(DualElem.basis(b, self.cfg), sum(a))
        return {(lb, a): c for lb, c in moved.terms.items()}

    def tensor_multiply(self, left: LabelPairs, right: LabelPairs
                        ) -> LabelPairs:
        """``(a ⊗ b)(c ⊗ d) = a (c ∘ g^{|b|}) ⊗ b d``."""
        cfg = self.cfg
        out: LabelPairs = {}
        for (a, b), s in left.items():
            for (c, d), t in right.items():
                moved = self.act(DualElem.basis(c, cfg), sum(b))
                first = self.multiply(DualElem.basis(a, cfg), moved)
                second = self.multiply(DualElem.basis(b, cfg),
                                       DualElem.basis(d, cfg))
                st = cfg.mul(s, t)
                for l1, u in first.terms.items():
                    for l2, w in second.terms.items():
                        key = (l1, l2)
                        out[key] = cfg.add(out.get(key, 0),
                                           cfg.mul(st, cfg.mul(u, w)))
        return {k: c for k, c in out.items() if c}


@functools.cache
def jordan_dual(cfg: FieldCfg) -> JordanDual:
    """Shared dual-side cache for one field."""
    return JordanDual(cfg)


def dual_pairing(e: DualElem, b: NCPoly | Mapping[Word, Scalar]) -> Scalar:
    """``⟨e, b⟩`` for ``b`` in the Jordan plane."""
    return jordan_dual(e.cfg).pair(e, b)


def dual_multiply(e1: DualElem, e2: DualElem, up_to: int) -> DualElem:
    """Product in the graded dual, refused beyond degree ``up_to``."""
    top = max(e1.degrees, default=0) + max(e2.degrees, default=0)
    if top > up_to:
        errmsg = f"Product reaches degree {top}, beyond {up_to}."
        raise ValueError(errmsg)
    return jordan_dual(e1.cfg).multiply(e1, e2)


# closed formulas as printed


def printed_mixed(n: int, m: int, cfg: FieldCfg) -> DualElem:
    """``x^{[n]} y^{[m]}`` with coefficients ``(-1)^k [-n]^{[k]} / 2^k``."""
    half = cfg.half()
    out: dict[Label, Scalar] = {}
    for k in range(m + 1):
        c = cfg.mul(binomial(n + k, k, cfg),
                    cfg.mul((-1) ** k, raising_factorial(-n, k, cfg)))
        out[m - k, n + k] = cfg.mul(c, cfg.power(half, k))
    return DualElem(out, cfg)


def mixed(n: int, m: int, cfg: FieldCfg) -> DualElem:
    """``x^{[n]} y^{[m]}`` with coefficients ``[n]^{[k]} / 2^k``."""
    half = cfg.half()
    out: dict[Label, Scalar] = {}
    for k in range(m + 1):
        c = cfg.mul(binomial(n + k, k, cfg), raising_factorial(n, k, cfg))
        out[m - k, n + k] = cfg.mul(c, cfg.power(half, k))
    return DualElem(out, cfg)


def printed_coproduct_y(n: int, cfg: FieldCfg) -> LabelPairs:
    half = cfg.half()
    out: LabelPairs = {}
    for k in range(n + 1):
        for i in range(k + 1):
            c = cfg.mul((-1) ** i, raising_factorial(n - k, i, cfg))
            c = cfg.mul(c, cfg.power(half, i))
            add_into(out, {((n - k, 0), (k - i, i)): c}, 1, cfg)
    return out


def printed_braiding(a: Label, b: Label, cfg: FieldCfg) -> LabelPairs:
    j, i = a
    m, n = b
    half = cfg.half()
    out: LabelPairs = {}
    for k in range(j + 1):
        c = cfg.mul(binomial(k + i, k, cfg),
                    cfg.mul((-1) ** k,
                            raising_factorial(2 * (n + m), k, cfg)))
        c = cfg.mul(c, cfg.power(half, k))
        add_into(out, {(b, (j - k, k + i)): c}, 1, cfg)
    return out


def _pairs_diff(got: LabelPairs, want: LabelPairs, cfg: FieldCfg
                ) -> LabelPairs:
    return add_into(dict(got), want, -1, cfg)


def _sample_labels(rng: np.random.Generator, top: int, samples: int
                   ) -> list[tuple[Label, Label]]:
    """Random pairs of basis labels with total degree at most ``top``."""
    pairs = []
    for _ in range(samples):
        total = int(rng.integers(0, top + 1))
        d1 = int(rng.integers(0, total + 1))
        m1 = int(rng.integers(0, d1 + 1))
        m2 = int(rng.integers(0, total - d1 + 1))
        pairs.append(((m1, d1 - m1), (m2, total - d1 - m2)))
    return pairs


def _presentation(dual: JordanDual, n: int) -> str:
    """First relation of the truncation ``E(n)`` that fails, if any."""
    cfg = dual.cfg
    e_alg = build_algebra("E", cfg, n=n)
    images = []
    for name in e_alg.alphabet:
        letter, index = name[0], int(name[1:])
        images.append(DualElem.divided(letter, index, cfg))

    def value(word: Word) -> DualElem:
        out = DualElem.unit(cfg)
        for a in word:
            out = dual.multiply(out, images[a])
        return out

    for rule in e_alg.system.rules:
        if sum(sum(images[a].degrees) for a in rule.lhs) > n:
            continue
        got = value(rule.lhs)
        want = DualElem({}, cfg)
        for w, c in rule.rhs.terms.items():
            want = want + value(w).scale(c)
        if got != want:
            lhs = "".join(e_alg.alphabet[a] for a in rule.lhs)
            return f"{lhs}: {got} vs {want}"
    return ""


def verify_dual_presentation(
    n: int,
    cfg: FieldCfg,
    rng: np.random.Generator,
    samples: int = 30,
) -> list[Check]:
    """Check the presentation, coproduct and braiding of the dual.

    Everything is tested in total degree at most ``n``; sampled checks
    draw ``samples`` pairs of basis functionals.
    """
    if n < 2:
        errmsg = f"The truncation degree must be at least 2, got {n}."
        raise ValueError(errmsg)
    dual = jordan_dual(cfg)
    params = {"p": cfg.p, "maxdeg": n}
    checks = []

    detail = _presentation(dual, n)
    checks.append(make_check("dual/presentation",
                             "divided power relations", params,
                             not detail, detail))

    def x(i: int) -> DualElem:
        return DualElem.divided("x", i, cfg)

    def y(i: int) -> DualElem:
        return DualElem.divided("y", i, cfg)

    detail = ""
    for i, j in itertools.product(range(1, n), repeat=2):
        if i + j > n:
            continue
        got = dual.multiply(x(i), y(j))
        want = printed_mixed(i, j, cfg)
        if got != want:
            detail = f"x[{i}]y[{j}] = {got}, printed {want}"
            break
    checks.append(make_check(
        "dual/mixed-printed", "x[n]y[m] with (-1)^k [-n]^{[k]}", params,
        not detail, detail, flagged=True,
    ))

    detail = ""
    for i, j in itertools.product(range(1, n), repeat=2):
        if i + j <= n and dual.multiply(x(i), y(j)) != mixed(i, j, cfg):
            detail = f"x[{i}]y[{j}] = {dual.multiply(x(i), y(j))}"
            break
    checks.append(make_check(
        "dual/mixed", "x[n]y[m] with [n]^{[k]}", params, not detail, detail,
    ))

    bad = [
        _fmt_label((m, d - m))
        for d in range(n + 1)
        for m in range(d + 1)
        if dual.multiply(y(m), x(d - m)) != DualElem.basis((m, d - m), cfg)
    ]
    checks.append(make_check("dual/basis", "y[m]x[n] = α(m,n)", params,
                             not bad, ", ".join(bad)))

    detail = ""
    for i in range(1, n + 1):
        want: LabelPairs = {((0, k), (0, i - k)): 1 for k in range(i + 1)}
        diff = _pairs_diff(dual.coproduct(x(i)), want, cfg)
        if diff:
            detail = f"Δ(x[{i}]) - printed = {_fmt_pairs(diff, cfg)}"
            break
    checks.append(make_check("dual/coproduct-x", "Δ(x[n])", params,
                             not detail, detail))

    detail = ""
    for i in range(1, n + 1):
        diff = _pairs_diff(dual.coproduct(y(i)),
                           printed_coproduct_y(i, cfg), cfg)
        if diff:
            detail = f"Δ(y[{i}]) - printed = {_fmt_pairs(diff, cfg)}"
            break
    checks.append(make_check("dual/coproduct-y", "Δ(y[n]) as printed",
                             params, not detail, detail, flagged=True))

    pairs = _sample_labels(rng, n, samples)
    detail = ""
    for a, b in pairs:
        diff = _pairs_diff(dual.braiding(a, b),
                           printed_braiding(a, b, cfg), cfg)
        if diff:
            detail = (f"c({_fmt_label(a)}⊗{_fmt_label(b)}) - printed = "
                      f"{_fmt_pairs(diff, cfg)}")
            break
    checks.append(make_check("dual/braiding-printed", "braiding as printed",
                             params, not detail, detail, flagged=True))

    detail = ""
    for a, b in pairs:
        back: LabelPairs = {}
        for (l1, l2), c in dual.braiding(a, b).items():
            add_into(back, printed_braiding(l1, l2, cfg), c, cfg)
        diff = _pairs_diff(back, {(a, b): 1}, cfg)
        if diff:
            detail = (f"on {_fmt_label(a)}⊗{_fmt_label(b)}: "
                      f"{_fmt_pairs(back, cfg)}")
            break
    checks.append(make_check(
        "dual/braiding-inverse", "printed braiding inverts the dual one",
        params, not detail, detail, flagged=True,
    ))

    detail = ""
    for a, b in pairs:
        fa, fb = DualElem.basis(a, cfg), DualElem.basis(b, cfg)
        got = dual.coproduct(dual.multiply(fa, fb))
        want = dual.tensor_multiply(dual.coproduct(fa), dual.coproduct(fb))
        diff = _pairs_diff(got, want, cfg)
        if diff:
            detail = (f"Δ({_fmt_label(a)}·{_fmt_label(b)}) off by "
                      f"{_fmt_pairs(diff, cfg)}")
            break
    checks.append(make_check("dual/braided-bialgebra",
                             "Δ is multiplicative for the dual braiding",
                             params, not detail, detail))

    detail = ""
    for (a, b), (c, _) in zip(pairs, pairs[1:], strict=False):
        if sum(a) + sum(b) + sum(c) > n:
            continue
        fa, fb, fc = (DualElem.basis(lb, cfg) for lb in (a, b, c))
        left = dual.multiply(dual.multiply(fa, fb), fc)
        right = dual.multiply(fa, dual.multiply(fb, fc))
        if left != right:
            detail = f"({fa})({fb})({fc}): {left} vs {right}"
            break
    checks.append(make_check("dual/associative", "associativity", params,
                             not detail, detail))

    detail = ""
    btilde = dual.btilde
    for a, b in pairs:
        degree = sum(a) + sum(b)
        i = int(rng.integers(0, degree + 1))
        word = (dual.x,) * i + (dual.y,) * (degree - i)
        fa, fb = DualElem.basis(a, cfg), DualElem.basis(b, cfg)
        got = dual.pair(dual.multiply(fa, fb), {word: 1})
        expected: Scalar = 0
        for (w1, w2), c in coproduct_terms(btilde, {word: 1}).items():
            expected = cfg.add(expected, cfg.mul(
                c, cfg.mul(dual.pair(fa, {w2: 1}), dual.pair(fb, {w1: 1}))
            ))
        if got != expected:
            detail = (f"⟨{fa}·{fb}, {btilde.elem({word: 1})}⟩ = {got}, "
                      f"coproduct gives {expected}")
            break
    checks.append(make_check("dual/pairing", "⟨ff', b⟩ = ⟨f⊗f', Δ(b)⟩",
                             params, not detail, detail))

    if not cfg.is_prime:
        checks.extend(_rational_checks(dual, n))
    return checks


def first_broken_relation(
    system: RewriteSystem, image: Callable[[Terms], object]
) -> str:
    """Describe the first rule whose two sides have different images."""
    for rule in system.rules:
        got, want = image({rule.lhs: 1}), image(rule.rhs.terms)
        if got != want:
            lhs = format_word(rule.lhs, system.alphabet)
            return f"relation {lhs} = {rule.rhs}: {got} vs {want}"
    return ""


def _rational_checks(dual: JordanDual, n: int) -> list[Check]:
    """Divided powers and the isomorphism with the ``u, v`` Jordan plane."""
    cfg = dual.cfg
    params = {"field": "rational", "maxdeg": n}
    gens = {"x": DualElem.divided("x", 1, cfg),
            "y": DualElem.divided("y", 1, cfg)}
    bad = []
    for i in range(2, n + 1):
        for letter, gen in gens.items():
            got = dual.power(gen, i).scale(cfg.inv(factorial(i)))
            if got != DualElem.divided(letter, i, cfg):
                bad.append(f"{letter}[{i}]")
    checks = [make_check("dual/divided-powers", "x[n] = x[1]^n / n!",
                         params, not bad, ", ".join(bad))]

    bhat = build_algebra("Bhat", cfg)
    images = {bhat.letter("u"): gens["x"],
              bhat.letter("v"): gens["y"].scale(-1)}

    def image(terms: Terms) -> DualElem:
        out = DualElem({}, cfg)
        for word, c in terms.items():
            value = DualElem.unit(cfg)
            for a in word:
                value = dual.multiply(value, images[a])
            out = out + value.scale(c)
        return out

    detail = first_broken_relation(bhat.system, image)
    words = enumerate_basis(bhat.system, up_to=n, weight="degree").words
    for d in range(n + 1):
        rows = [
            [image({w: 1}).terms.get(lb, 0) for lb in dual.labels(d)]
            for w in words if len(w) == d
        ]
        if len(rows) != d + 1 or rank(rows, cfg) != d + 1:
            detail = detail or f"degree {d}: rank {rank(rows, cfg)}"
    checks.append(make_check("dual/jordan-iso", "x[1] ↦ u, y[1] ↦ -v",
                             params, not detail, detail))
    return checks


@dataclass
class GDual:
    """Finite dual of ``G(k, ℓ)`` inside the graded dual.

    ``labels`` are the monomials ``y^{[m]} x^{[n]}`` with ``m < p^ℓ`` and
    ``n < p^k``; ``pairing[r][c]`` pairs label ``r`` with the ``c``-th
    PBW word of ``G(k, ℓ)``.
    """

    k: int
    ell: int
    p: int
    labels: list[Label]
    pairing: list[list[Scalar]] = field(repr=False)
    checks: list[Check] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def generators(self) -> list[str]:
        return ([f"x[{n}]" for n in range(1, self.p**self.k)]
                + [f"y[{m}]" for m in range(1, self.p**self.ell)])


def build_G_dual(k: int, ell: int, cfg: FieldCfg) -> GDual:
    """Dual of ``G(k, ℓ)``, with checks of its presentation."""
    g_alg = build_algebra("G", cfg, k=k, ell=ell, a=0)
    dual = jordan_dual(cfg)
    p = cfg.p
    top_x, top_y = p**k, p**ell
    labels = [(m, n) for m in range(top_y) for n in range(top_x)]
    box = set(labels)
    params = {"p": p, "k": k, "ell": ell}

    lift = [dual.btilde.letter(name) for name in g_alg.alphabet]
    words = enumerate_basis(g_alg.system).words
    columns = [dual.coordinates({tuple(lift[a] for a in w): 1})
               for w in words]
    pairing = [[col.get(lb, 0) for col in columns] for lb in labels]
    checks = [
        make_check("dual/G-dimension", "dim = p^{k+ℓ}", params,
                   len(labels) == len(words) == p ** (k + ell),
                   f"{len(labels)} labels, {len(words)} words"),
        make_check("dual/G-pairing", "nondegenerate pairing", params,
                   rank(pairing, cfg) == len(labels),
                   f"rank {rank(pairing, cfg)}"),
    ]

    bad = []
    for d in range(top_x + top_y - 1):
        for i in range(d + 1):
            if i < top_y and d - i < top_x:
                continue
            word = (dual.x,) * i + (dual.y,) * (d - i)
            if box & set(dual.coordinates({word: 1})):
                bad.append(f"x^{i} y^{d - i}")
    checks.append(make_check("dual/G-annihilates",
                             "vanishes on the kernel of B̃ → G(k, ℓ)",
                             params, not bad, ", ".join(bad[:5])))

    def x(i: int) -> DualElem:
        return DualElem.divided("x", i, cfg)

    def y(i: int) -> DualElem:
        return DualElem.divided("y", i, cfg)

    wrong, outside = [], []
    products = [
        (f"x[{a}]x[{b}]", x(a), x(b),
         x(a + b).scale(binomial(a + b, a, cfg)))
        for a in range(1, top_x) for b in range(1, top_x)
    ] + [
        (f"y[{a}]y[{b}]", y(a), y(b),
         y(a + b).scale(binomial(a + b, a, cfg)))
        for a in range(1, top_y) for b in range(1, top_y)
    ] + [
        (f"x[{a}]y[{b}]", x(a), y(b), mixed(a, b, cfg))
        for a in range(1, top_x) for b in range(1, top_y)
    ]
    for name, left, right, want in products:
        got = dual.multiply(left, right)
        if got != want:
            wrong.append(name)
        if set(got.terms) - box:
            outside.append(name)
    checks.append(make_check("dual/G-relations",
                             "divided power relations in index bounds",
                             params, not wrong, ", ".join(wrong[:5])))
    checks.append(make_check("dual/G-closed", "products stay in the box",
                             params, not outside, ", ".join(outside[:5])))
    return GDual(k, ell, p, labels, pairing, checks)
