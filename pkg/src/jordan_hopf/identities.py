"""Closed commutation and coproduct formulas, stated per algebra family."""

from __future__ import annotations

import itertools
import math
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Literal

from .catalog import AlgebraSpec, TensorTerms
from .ncalg import NCPoly, Terms, Word, add_into
from .scalars import Scalar, binomial, raising_factorial, stirling_unsigned

__all__ = ["COMMUTATIONS", "COPRODUCTS", "Identity", "family"]

Factors = Sequence[tuple[str, int]]

PRE_NICHOLS = frozenset({"BV", "Btilde", "K", "F", "G"})
BOSONIZED = frozenset({"H", "Htilde"})
DOUBLES = frozenset({"DH", "Dtilde"})
JORDAN = PRE_NICHOLS | BOSONIZED | DOUBLES


def family(alg: AlgebraSpec) -> str:
    """Catalog family of an algebra, ``"G"`` for ``G(1,2,0)`` and so on."""
    return alg.name.split("(")[0]


@dataclass(frozen=True)
class Identity:
    """A displayed formula instantiated over a parameter range.

    ``build`` returns ``(lhs, rhs)`` polynomials for ``kind="element"``,
    ``(element terms, stated tensor)`` for ``"coproduct"`` and two
    tensors for ``"tensor"``.
    """

    id: str
    ref: str
    families: frozenset[str]
    names: tuple[str, ...]
    build: Callable[..., tuple[Any, Any]]
    lower: int = 1
    kind: Literal["element", "coproduct", "tensor"] = "element"
    flagged: bool = False
    prime_only: bool = False
    upper: Callable[[int, AlgebraSpec], int] | None = None
    pairs: Literal["all", "triangle"] = "all"
    left_alphabet: tuple[str, ...] | None = None

    def applies(self, alg: AlgebraSpec) -> bool:
        return alg.cfg.is_prime or not self.prime_only

    def parameters(self, bound: int, alg: AlgebraSpec
                   ) -> Iterable[tuple[int, ...]]:
        top = bound if self.upper is None else self.upper(bound, alg)
        ranges = [range(self.lower, top + 1)] * len(self.names)
        for values in itertools.product(*ranges):
            if self.pairs == "triangle" and values[1] > values[0]:
                continue
            yield values


def _half_power(k: int) -> Fraction:
    return Fraction(1, 2**k)


def _word(alg: AlgebraSpec, factors: Factors) -> Word | None:
    out: list[int] = []
    for name, e in factors:
        if e < 0:
            return None
        out.extend([alg.letter(name)] * e)
    return tuple(out)


def _combo(
    alg: AlgebraSpec, parts: Iterable[tuple[Scalar, Factors]]
) -> NCPoly:
    """Normalized linear combination of monomials given by factor lists.

    Terms with a negative exponent must carry a zero coefficient.
    """
    cfg = alg.cfg
    terms: Terms = {}
    for c, factors in parts:
        c = cfg.reduce(c)
        word = _word(alg, factors)
        if not c or word is None:
            continue
        add_into(terms, alg.system.nf(word), c, cfg)
    return NCPoly(terms, cfg, alg.alphabet)


def _tensor(
    alg: AlgebraSpec, parts: Iterable[tuple[Scalar, Factors, Factors]]
) -> TensorTerms:
    cfg = alg.cfg
    out: TensorTerms = {}
    for c, left, right in parts:
        c = cfg.reduce(c)
        w1, w2 = _word(alg, left), _word(alg, right)
        if not c or w1 is None or w2 is None:
            continue
        for l1, a in alg.system.nf(w1).items():
            for r1, b in alg.system.nf(w2).items():
                add_into(out, {(l1, r1): a * b}, c, cfg)
    return out


def _bin(alg: AlgebraSpec, n: int, k: int) -> Scalar:
    return binomial(n, k, alg.cfg)


def _rf(alg: AlgebraSpec, t: int, k: int) -> Scalar:
    return raising_factorial(t, k, alg.cfg)


# commutation formulas


def _g_y(alg: AlgebraSpec, n: int, ell: int) -> tuple[NCPoly, NCPoly]:
    lhs = _combo(alg, [(1, [("g", n), ("y", ell)])])
    rhs = _combo(alg, [
        (_bin(alg, ell, k) * (-1) ** k * _rf(alg, -2 * n, k)
         * _half_power(k), [("x", k), ("y", ell - k), ("g", n)])
        for k in range(ell + 1)
    ])
    return lhs, rhs


def _y_x(alg: AlgebraSpec, ell: int, n: int) -> tuple[NCPoly, NCPoly]:
    lhs = _combo(alg, [(1, [("y", ell), ("x", n)])])
    rhs = _combo(alg, [
        (_bin(alg, ell, k) * (-1) ** k * _rf(alg, n, k) * _half_power(k),
         [("x", n + k), ("y", ell - k)])
        for k in range(ell + 1)
    ])
    return lhs, rhs


def _zeta_left(letter: str) -> Callable:
    def build(alg: AlgebraSpec, n: int, m: int) -> tuple[NCPoly, NCPoly]:
        lhs = _combo(alg, [(1, [("zeta", n), (letter, m)])])
        rhs = _combo(alg, [
            (_bin(alg, n, ell) * m ** (n - ell),
             [(letter, m), ("zeta", ell)])
            for ell in range(n + 1)
        ])
        return lhs, rhs

    return build


def _zeta_right(letter: str) -> Callable:
    def build(alg: AlgebraSpec, m: int, n: int) -> tuple[NCPoly, NCPoly]:
        lhs = _combo(alg, [(1, [(letter, m), ("zeta", n)])])
        rhs = _combo(alg, [
            (_bin(alg, n, ell) * m ** (n - ell),
             [("zeta", ell), (letter, m)])
            for ell in range(n + 1)
        ])
        return lhs, rhs

    return build


def _v_u(alg: AlgebraSpec, ell: int, n: int) -> tuple[NCPoly, NCPoly]:
    lhs = _combo(alg, [(1, [("v", ell), ("u", n)])])
    rhs = _combo(alg, [
        (_bin(alg, ell, k) * (-1) ** k * _rf(alg, n, k) * _half_power(k),
         [("u", n + k), ("v", ell - k)])
        for k in range(ell + 1)
    ])
    return lhs, rhs


def _v_g(alg: AlgebraSpec, ell: int, n: int) -> tuple[NCPoly, NCPoly]:
    lhs = _combo(alg, [(1, [("v", ell), ("g", n)])])
    rhs = _combo(alg, [
        (_bin(alg, ell, k) * (-1) ** k * _rf(alg, -2 * n, k)
         * _half_power(k), [("g", n), ("u", k), ("v", ell - k)])
        for k in range(ell + 1)
    ])
    return lhs, rhs


def _v_xn(alg: AlgebraSpec, n: int) -> tuple[NCPoly, NCPoly]:
    lhs = _combo(alg, [(1, [("v", 1), ("x", n)])])
    rhs = _combo(alg, [
        (1, [("x", n), ("v", 1)]),
        (n, [("x", n - 1)]),
        (-n, [("x", n - 1), ("g", 1)]),
        (n, [("x", n), ("u", 1)]),
    ])
    return lhs, rhs


def _vn_x(alg: AlgebraSpec, n: int) -> tuple[NCPoly, NCPoly]:
    q = n * (n - 1)
    lhs = _combo(alg, [(1, [("v", n), ("x", 1)])])
    rhs = _combo(alg, [
        (1, [("x", 1), ("v", n)]),
        (n, [("x", 1), ("u", 1), ("v", n - 1)]),
        (Fraction(q, 4), [("x", 1), ("u", 2), ("v", n - 2)]),
        (n, [("v", n - 1)]),
        (Fraction(q, 2), [("u", 1), ("v", n - 2)]),
        (-n, [("g", 1), ("v", n - 1)]),
        (-q, [("g", 1), ("u", 1), ("v", n - 2)]),
        (Fraction(-q * (n - 2), 4), [("g", 1), ("u", 2), ("v", n - 3)]),
    ])
    return lhs, rhs


def _vn_y(alg: AlgebraSpec, n: int) -> tuple[NCPoly, NCPoly]:
    q = n * (n - 1)
    lhs = _combo(alg, [(1, [("v", n), ("y", 1)])])
    rhs = _combo(alg, [
        (1, [("y", 1), ("v", n)]),
        (n, [("y", 1), ("u", 1), ("v", n - 1)]),
        (Fraction(-q, 4), [("y", 1), ("u", 1), ("v", n - 2)]),
        (-n, [("g", 1), ("zeta", 1), ("v", n - 1)]),
        (-q, [("g", 1), ("zeta", 1), ("u", 1), ("v", n - 2)]),
        (Fraction(-q * (n - 2), 4),
         [("g", 1), ("zeta", 1), ("u", 2), ("v", n - 3)]),
        (Fraction(-q, 2), [("g", 1), ("v", n - 1)]),
        (Fraction(-q * (n - 1), 2), [("g", 1), ("u", 1), ("v", n - 2)]),
        (Fraction(-q * (n - 1) * (n - 2), 8),
         [("g", 1), ("u", 2), ("v", n - 3)]),
    ])
    return lhs, rhs


def _falling_sum(
    alg: AlgebraSpec, n: int, scale: int, tail: Factors
) -> list[tuple[Scalar, Factors]]:
    return [
        (-_bin(alg, n, k + 1) * scale * math.factorial(k + 1)
         * _half_power(k), [("y", n - 1 - k), ("x", k), *tail])
        for k in range(n)
    ]


def _u_yn(alg: AlgebraSpec, n: int) -> tuple[NCPoly, NCPoly]:
    lhs = _combo(alg, [(1, [("u", 1), ("y", n)])])
    rhs = _combo(alg, [
        (1, [("y", n), ("u", 1)]),
        (n, [("y", n - 1)]),
        *_falling_sum(alg, n, 1, [("g", 1)]),
    ])
    return lhs, rhs


def _v_yn(alg: AlgebraSpec, n: int) -> tuple[NCPoly, NCPoly]:
    lhs = _combo(alg, [(1, [("v", 1), ("y", n)])])
    rhs = _combo(alg, [
        (1, [("y", n), ("v", 1)]),
        (n, [("y", n), ("u", 1)]),
        (Fraction(n * (n - 1), 2), [("y", n - 1)]),
        *_falling_sum(alg, n, 1, [("g", 1), ("zeta", 1)]),
        *_falling_sum(alg, n, n - 1, [("g", 1)]),
    ])
    return lhs, rhs


def _un_y(alg: AlgebraSpec, n: int) -> tuple[NCPoly, NCPoly]:
    lhs = _combo(alg, [(1, [("u", n), ("y", 1)])])
    rhs = _combo(alg, [
        (1, [("y", 1), ("u", n)]),
        (n, [("u", n - 1)]),
        (-n, [("g", 1), ("u", n - 1)]),
    ])
    return lhs, rhs


def _g_acts_yn(alg: AlgebraSpec, n: int) -> tuple[NCPoly, NCPoly]:
    word = _word(alg, [("y", n)])
    lhs = NCPoly(alg.yd.act(word, 1), alg.cfg, alg.alphabet)
    rhs = _combo(alg, [
        (1, [("y", n)]),
        (n, [("x", 1), ("y", n - 1)]),
        (Fraction(n * n - n, 4), [("x", 2), ("y", n - 2)]),
    ])
    return lhs, rhs


COMMUTATIONS: tuple[Identity, ...] = (
    Identity("commutation/g^n*y^l", "g^n y^l", BOSONIZED | DOUBLES,
             ("n", "l"), _g_y, lower=0),
    Identity("commutation/y^l*x^n", "y^l x^n", JORDAN, ("l", "n"), _y_x,
             lower=0),
    Identity("commutation/zeta^n*x^m", "ζ^n x^m", DOUBLES, ("n", "m"),
             _zeta_left("x")),
    Identity("commutation/zeta^n*y^m", "ζ^n y^m", DOUBLES, ("n", "m"),
             _zeta_left("y")),
    Identity("commutation/v^m*zeta^n", "v^m ζ^n", DOUBLES, ("m", "n"),
             _zeta_right("v")),
    Identity("commutation/u^m*zeta^n", "u^m ζ^n", DOUBLES, ("m", "n"),
             _zeta_right("u")),
    Identity("commutation/v^l*u^n", "v^l u^n", DOUBLES, ("l", "n"), _v_u),
    Identity("commutation/v^l*g^n", "v^l g^n", DOUBLES, ("l", "n"), _v_g),
    Identity("commutation/v*x^n", "v x^n", DOUBLES, ("n",), _v_xn),
    Identity("commutation/v^n*x", "v^n x", DOUBLES, ("n",), _vn_x),
    Identity("commutation/v^n*y", "v^n y as printed", DOUBLES, ("n",),
             _vn_y, flagged=True),
    Identity("commutation/u*y^n", "u y^n as printed", DOUBLES, ("n",),
             _u_yn, flagged=True),
    Identity("commutation/v*y^n", "v y^n as printed", DOUBLES, ("n",),
             _v_yn, flagged=True),
    Identity("commutation/u^n*y", "u^n y", DOUBLES, ("n",), _un_y),
    Identity("action/g*y^n", "g ⇀ y^n", PRE_NICHOLS, ("n",), _g_acts_yn,
             lower=0),
)


# coproduct formulas


def _power(alg: AlgebraSpec, name: str, n: int) -> Terms:
    return alg.system.nf(_word(alg, [(name, n)]))


def _delta_xn(alg: AlgebraSpec, n: int) -> tuple[Terms, TensorTerms]:
    want = _tensor(alg, [
        (_bin(alg, n, k), [("x", n - k)], [("x", k)]) for k in range(n + 1)
    ])
    return _power(alg, "x", n), want


def _delta_yn(alg: AlgebraSpec, n: int) -> tuple[Terms, TensorTerms]:
    want = _tensor(alg, [
        (_bin(alg, n, k) * _bin(alg, k, i) * (-1) ** i
         * _rf(alg, k - n, i) * _half_power(i),
         [("x", i), ("y", k - i)], [("y", n - k)])
        for k in range(n + 1) for i in range(k + 1)
    ])
    return _power(alg, "y", n), want


def _delta_xy(alg: AlgebraSpec, n: int, ell: int
              ) -> tuple[Terms, TensorTerms]:
    want = _tensor(alg, [
        (_bin(alg, n - ell, k) * _bin(alg, ell, t) * _bin(alg, t, i)
         * (-1) ** i * _half_power(i) * _rf(alg, t - ell - 2 * k, i),
         [("x", n + i - ell - k), ("y", t - i)],
         [("x", k), ("y", ell - t)])
        for k in range(n - ell + 1)
        for t in range(ell + 1)
        for i in range(t + 1)
    ])
    element = alg.system.nf(_word(alg, [("x", n - ell), ("y", ell)]))
    return element, want


def _delta_ypl(alg: AlgebraSpec, ell: int) -> tuple[Terms, TensorTerms]:
    p = alg.cfg.p
    want = _tensor(alg, [
        (1, [("y", p * ell)], []),
        (1, [], [("y", p * ell)]),
        *[
            (_bin(alg, ell, t), [("y", p * t)], [("y", p * (ell - t))])
            for t in range(1, ell)
        ],
    ])
    return _power(alg, "y", p * ell), want


def _delta_xn_bosonized(alg: AlgebraSpec, n: int
                        ) -> tuple[Terms, TensorTerms]:
    want = _tensor(alg, [
        (_bin(alg, n, k), [("x", n - k), ("g", k)], [("x", k)])
        for k in range(n + 1)
    ])
    return _power(alg, "x", n), want


def _delta_yn_bosonized(alg: AlgebraSpec, n: int
                        ) -> tuple[Terms, TensorTerms]:
    want = _tensor(alg, [
        (_bin(alg, n, k) * _bin(alg, k, i) * (-1) ** i
         * _rf(alg, n - k, i) * _half_power(i),
         [("g", n - k), ("x", i), ("y", k - i)], [("y", n - k)])
        for k in range(n + 1) for i in range(k + 1)
    ])
    return _power(alg, "y", n), want


def _delta_vp(alg: AlgebraSpec) -> tuple[Terms, TensorTerms]:
    p = alg.cfg.p
    want = _tensor(alg, [
        (1, [("v", p)], []),
        (1, [], [("v", p)]),
        (1, [("zeta", p)], [("u", p)]),
        (-1, [("zeta", 1)], [("u", p)]),
    ])
    return _power(alg, "v", p), want


def _delta_vn_braided(alg: AlgebraSpec, n: int
                      ) -> tuple[Terms, TensorTerms]:
    want = _tensor(alg, [
        (1, [("v", n)], []),
        (1, [], [("v", n)]),
        *[
            (_bin(alg, n, k) * _bin(alg, k, i) * _rf(alg, n - k, i)
             * _half_power(i), [("v", n - k)], [("u", i), ("v", k - i)])
            for k in range(1, n) for i in range(k + 1)
        ],
    ])
    return _power(alg, "v", n), want


def _coaction_vn(alg: AlgebraSpec, n: int
                 ) -> tuple[TensorTerms, TensorTerms]:
    cfg = alg.cfg
    got: TensorTerms = {}
    for k, part in alg.yd.coaction(_word(alg, [("v", n)])).items():
        for w, c in part.items():
            add_into(got, {((0,) * k, w): c}, 1, cfg)
    want: TensorTerms = {}
    parts: list[tuple[Scalar, int, Factors]] = [
        (1, 0, [("v", n)]),
        (1, n, [("u", n)]),
    ]
    for k in range(1, n):
        for t in range(k, n + 1):
            c = (_bin(alg, n, t) * stirling_unsigned(t, k)
                 * _half_power(t - k))
            parts.append((c, k, [("u", t), ("v", n - t)]))
    for c, k, factors in parts:
        for w, d in alg.system.nf(_word(alg, factors)).items():
            add_into(want, {((0,) * k, w): d}, c, cfg)
    return got, want


def _primitive(text: str, grouplike: bool = False) -> Callable:
    def build(alg: AlgebraSpec) -> tuple[Terms, TensorTerms]:
        cfg = alg.cfg
        p = cfg.p
        element = alg.poly(text.format(p=p)).terms
        want: TensorTerms = {}
        for w1, a in element.items():
            if not grouplike:
                add_into(want, {(w1, ()): a, ((), w1): a}, 1, cfg)
                continue
            for w2, b in element.items():
                add_into(want, {(w1, w2): a * b}, 1, cfg)
        return element, want

    return build


def _power_range(bound: int, alg: AlgebraSpec) -> int:
    return max(1, bound // alg.cfg.p)


COPRODUCTS: tuple[Identity, ...] = (
    Identity("coproduct/x^n", "Δ(x^n) braided", PRE_NICHOLS, ("n",),
             _delta_xn, lower=0, kind="coproduct"),
    Identity("coproduct/y^n", "Δ(y^n) braided", PRE_NICHOLS, ("n",),
             _delta_yn, lower=0, kind="coproduct"),
    Identity("coproduct/x^(n-l)*y^l", "Δ(x^{n-l} y^l) braided",
             PRE_NICHOLS, ("n", "l"), _delta_xy, lower=0,
             kind="coproduct", pairs="triangle"),
    Identity("coproduct/y^(p*l)", "Δ(y^{pl}) braided", PRE_NICHOLS,
             ("l",), _delta_ypl, kind="coproduct", prime_only=True,
             upper=_power_range),
    Identity("primitive/x^p", "x^p primitive", PRE_NICHOLS, (),
             _primitive("x^{p}"), kind="coproduct", prime_only=True),
    Identity("primitive/y^p", "y^p primitive", PRE_NICHOLS, (),
             _primitive("y^{p}"), kind="coproduct", prime_only=True),
    Identity("coproduct/x^n-bosonized", "Δ(x^n) with g", BOSONIZED | DOUBLES,
             ("n",), _delta_xn_bosonized, lower=0, kind="coproduct"),
    Identity("coproduct/y^n-bosonized", "Δ(y^n) with g as printed",
             BOSONIZED | DOUBLES, ("n",), _delta_yn_bosonized, lower=0,
             kind="coproduct", flagged=True),
    Identity("coproduct/v^p", "Δ(v^p)", DOUBLES, (), _delta_vp,
             kind="coproduct", prime_only=True),
    Identity("primitive/u", "u primitive", DOUBLES, (), _primitive("u"),
             kind="coproduct"),
    Identity("primitive/zeta", "ζ primitive", DOUBLES, (),
             _primitive("zeta"), kind="coproduct"),
    Identity("primitive/u^p", "u^p primitive", DOUBLES, (),
             _primitive("u^{p}"), kind="coproduct", prime_only=True),
    Identity("primitive/zeta^(p)", "ζ^p - ζ primitive", DOUBLES, (),
             _primitive("zeta^{p} - zeta"), kind="coproduct",
             prime_only=True),
    Identity("grouplike/g^p", "g^p group-like", DOUBLES, (),
             _primitive("g^{p}", grouplike=True), kind="coproduct",
             prime_only=True),
    Identity("coproduct/v^n", "Δ(v^n) braided", frozenset({"Bhat"}),
             ("n",), _delta_vn_braided, kind="coproduct"),
    Identity("coaction/v^n", "δ(v^n)", frozenset({"Bhat"}), ("n",),
             _coaction_vn, kind="tensor", left_alphabet=("zeta",)),
)
