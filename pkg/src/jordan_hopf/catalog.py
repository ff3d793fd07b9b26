"""Named algebras with their presentations, Hopf data and morphisms."""

from __future__ import annotations

import functools
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any, Literal

from .ncalg import (
    GroupLikeYD,
    NCPoly,
    PrimitiveYD,
    Terms,
    Word,
    add_into,
)
from .pbw import (
    GenSymbol,
    RewriteRule,
    RewriteSystem,
    enumerate_basis,
    parse_poly,
)
from .scalars import FieldCfg, Scalar, binomial, raising_factorial

__all__ = [
    "ALGEBRAS",
    "MORPHISMS",
    "MORPHISM_VARIANTS",
    "PRINTED_MORPHISMS",
    "AlgebraSpec",
    "HopfData",
    "MorphismSpec",
    "apply_morphism",
    "build_algebra",
    "build_morphism",
    "graded_dimension",
    "identity_morphism",
    "restrict",
    "restrict_morphism",
]

TensorTerms = dict[tuple[Word, Word], Scalar]


@dataclass(eq=False)
class HopfData:
    """Coproducts and counits of the generators.

    Antipode values are derived on demand; ``antipode`` only holds
    explicit overrides.
    """

    coproducts: dict[int, TensorTerms]
    counit: dict[int, Scalar]
    antipode: dict[int, Terms] = field(default_factory=dict)


@dataclass(eq=False)
class AlgebraSpec:
    name: str
    system: RewriteSystem
    hopf: HopfData | None = None
    braided: bool = False
    yd: GroupLikeYD | PrimitiveYD | None = None
    params: dict[str, Any] = field(default_factory=dict)
    cache: dict[str, Any] = field(default_factory=dict, repr=False)

    @property
    def cfg(self) -> FieldCfg:
        return self.system.cfg

    @property
    def alphabet(self) -> tuple[str, ...]:
        return self.system.alphabet

    def letter(self, name: str) -> int:
        return self.system.index(name)

    def poly(self, text: str) -> NCPoly:
        return self.system.poly(text)

    def elem(self, terms: Mapping[Word, Scalar]) -> NCPoly:
        return NCPoly(self.system.normalize_terms(terms), self.cfg,
                      self.alphabet)

    def is_finite(self) -> bool:
        return all(
            self.system.bound(a) is not None
            for a in range(len(self.alphabet))
        )


@dataclass(eq=False)
class MorphismSpec:
    """Algebra map given by the images of the source generators."""

    name: str
    source: AlgebraSpec
    target: AlgebraSpec
    images: dict[int, NCPoly]
    hopf: bool = False
    graded: bool = False
    cache: dict[Word, Terms] = field(default_factory=dict, repr=False)


class _Builder:
    def __init__(self, cfg: FieldCfg, name: str) -> None:
        self.cfg = cfg
        self.name = name
        self.gens: list[GenSymbol] = []
        self.rules: list[tuple[str | Word, str | Terms]] = []

    def gen(self, name: str, domain: str = "free", bound: int | None = None,
            degree: int = 0, codegree: int = 0,
            inverse: str | None = None) -> None:
        self.gens.append(
            GenSymbol(name, domain, bound, degree, codegree, inverse)
        )

    def rule(self, lhs: str | Word, rhs: str | Terms) -> None:
        self.rules.append((lhs, rhs))

    def system(self) -> RewriteSystem:
        alphabet = tuple(g.name for g in self.gens)
        rules = []
        for lhs, rhs in self.rules:
            if isinstance(lhs, str):
                (lhs,) = parse_poly(lhs, alphabet, self.cfg).terms
            if isinstance(rhs, str):
                rhs_poly = parse_poly(rhs, alphabet, self.cfg)
            else:
                rhs_poly = NCPoly(rhs, self.cfg, alphabet)
            rules.append(RewriteRule(tuple(lhs), rhs_poly))
        return RewriteSystem(self.cfg, self.gens, rules, name=self.name)


def _tensor(
    system: RewriteSystem, pairs: Sequence[tuple[str, str]]
) -> TensorTerms:
    out: TensorTerms = {}
    for left, right in pairs:
        lp = system.poly(left)
        rp = system.poly(right)
        for w1, a in lp.terms.items():
            for w2, b in rp.terms.items():
                add_into(out, {(w1, w2): a}, b, system.cfg)
    return out


def _hopf(
    system: RewriteSystem,
    coproducts: Mapping[str, Sequence[tuple[str, str]]],
    grouplikes: Sequence[str] = (),
) -> HopfData:
    return HopfData(
        {system.index(n): _tensor(system, pairs)
         for n, pairs in coproducts.items()},
        {system.index(n): (1 if n in grouplikes else 0)
         for n in coproducts},
    )


def _primitive(*names: str) -> dict[str, list[tuple[str, str]]]:
    return {n: [(n, "1"), ("1", n)] for n in names}


def _skew(name: str, grouplike: str) -> list[tuple[str, str]]:
    return [(name, "1"), (grouplike, name)]


def _require_prime(cfg: FieldCfg, name: str) -> int:
    if not cfg.is_prime:
        errmsg = f"{name} is only defined in positive characteristic."
        raise ValueError(errmsg)
    return cfg.p


# Jordan plane and its pre-Nichols quotients


def _jordan_gens(
    b: _Builder,
    p: int,
    k: int | None,
    ell: int | None,
    a: int,
    degree: int,
    codegree: int,
) -> None:
    if ell is None:
        b.gen("x", degree=degree, codegree=codegree)
    else:
        b.gen("x", "nilpotent", p**ell, degree, codegree)
    if k is None:
        b.gen("y", degree=degree, codegree=codegree)
    elif a % p == 0:
        b.gen("y", "nilpotent", p**k, degree, codegree)
    else:
        b.gen("y", "restricted", p**k, degree, codegree)


def _jordan_rules(
    b: _Builder, p: int, k: int | None, ell: int | None, a: int
) -> None:
    b.rule("y x", "x y - 1/2 x^2")
    if k is not None:
        b.rule(f"y^{p**k}", f"{a % p} x^{p**k}" if a % p else "0")
    if ell is not None:
        b.rule(f"x^{p**ell}", "0")


def _jordan_yd(system: RewriteSystem) -> GroupLikeYD:
    x, y = system.index("x"), system.index("y")
    return GroupLikeYD(
        {x: {(x,): 1}, y: {(y,): 1, (x,): 1}},
        {x: 1, y: 1},
        system.multiply,
        system.cfg,
    )


def _pre_nichols(
    cfg: FieldCfg,
    name: str,
    k: int | None,
    ell: int | None,
    a: int,
) -> AlgebraSpec:
    p = 0
    if k is not None or ell is not None:
        p = _require_prime(cfg, name)
    if p and a % p and ell is not None and k >= ell:
        errmsg = f"{name}: a nonzero a needs k < ell."
        raise ValueError(errmsg)
    b = _Builder(cfg, name)
    _jordan_gens(b, p, k, ell, a, 1, 1)
    _jordan_rules(b, p, k, ell, a)
    system = b.system()
    return AlgebraSpec(
        name,
        system,
        _hopf(system, _primitive("x", "y")),
        braided=True,
        yd=_jordan_yd(system),
        params={"k": k, "ell": ell, "a": a},
    )


def _build_bv(cfg: FieldCfg) -> AlgebraSpec:
    return _pre_nichols(cfg, "BV", 1, 1, 0)


def _build_btilde(cfg: FieldCfg) -> AlgebraSpec:
    return _pre_nichols(cfg, "Btilde", None, None, 0)


def _build_k(cfg: FieldCfg, k: int, a: int) -> AlgebraSpec:
    return _pre_nichols(cfg, f"K({k},{a})", k, None, a)


def _build_f(cfg: FieldCfg, ell: int) -> AlgebraSpec:
    return _pre_nichols(cfg, f"F({ell})", None, ell, 0)


def _build_g(cfg: FieldCfg, k: int, ell: int, a: int) -> AlgebraSpec:
    return _pre_nichols(cfg, f"G({k},{ell},{a})", k, ell, a)


def _build_bhat(cfg: FieldCfg) -> AlgebraSpec:
    b = _Builder(cfg, "Bhat")
    b.gen("u", degree=1)
    b.gen("v", degree=1)
    b.rule("v u", "u v + 1/2 u^2")
    system = b.system()
    u, v = system.index("u"), system.index("v")
    yd = PrimitiveYD(
        {u: {(u,): 1}, v: {(v,): 1}},
        {u: {0: {(u,): 1}}, v: {0: {(v,): 1}, 1: {(u,): 1}}},
        system.multiply,
        cfg,
    )
    return AlgebraSpec(
        "Bhat", system, _hopf(system, _primitive("u", "v")),
        braided=True, yd=yd,
    )


# ordinary Hopf algebras


def _build_h(cfg: FieldCfg) -> AlgebraSpec:
    p = _require_prime(cfg, "H")
    b = _Builder(cfg, "H")
    b.gen("x", "nilpotent", p, degree=-1)
    b.gen("y", "nilpotent", p, degree=-1)
    b.gen("g", "grouplike", p)
    b.rule("y x", "x y - 1/2 x^2")
    b.rule("g x", "x g")
    b.rule("g y", "y g + x g")
    b.rule(f"x^{p}", "0")
    b.rule(f"y^{p}", "0")
    b.rule(f"g^{p}", "1")
    system = b.system()
    hopf = _hopf(
        system,
        {"x": _skew("x", "g"), "y": _skew("y", "g"), "g": [("g", "g")]},
        grouplikes=("g",),
    )
    return AlgebraSpec("H", system, hopf)


def _build_hkla(cfg: FieldCfg, k: int, ell: int, a: int) -> AlgebraSpec:
    p = _require_prime(cfg, "Hkla")
    name = f"H({k},{ell},{a})"
    if a % p and k >= ell:
        errmsg = f"{name}: a nonzero a needs k < ell."
        raise ValueError(errmsg)
    b = _Builder(cfg, name)
    _jordan_gens(b, p, k, ell, a, 1, 0)
    b.gen("g", "grouplike", p)
    _jordan_rules(b, p, k, ell, a)
    b.rule("g x", "x g")
    b.rule("g y", "y g + x g")
    b.rule(f"g^{p}", "1")
    system = b.system()
    hopf = _hopf(
        system,
        {"x": _skew("x", "g"), "y": _skew("y", "g"), "g": [("g", "g")]},
        grouplikes=("g",),
    )
    return AlgebraSpec(name, system, hopf,
                       params={"k": k, "ell": ell, "a": a})


def _build_dkg(cfg: FieldCfg) -> AlgebraSpec:
    p = _require_prime(cfg, "DkG")
    b = _Builder(cfg, "DkG")
    b.gen("g", "grouplike", p)
    b.gen("zeta", "restricted", p)
    b.rule("zeta g", "g zeta")
    b.rule(f"g^{p}", "1")
    b.rule(f"zeta^{p}", "zeta")
    system = b.system()
    hopf = _hopf(
        system, {"g": [("g", "g")], **_primitive("zeta")},
        grouplikes=("g",),
    )
    return AlgebraSpec("DkG", system, hopf)


_W_COPRODUCTS = {
    **_primitive("zeta", "u"),
    "v": [("v", "1"), ("1", "v"), ("zeta", "u")],
}


def _build_hstar(cfg: FieldCfg) -> AlgebraSpec:
    p = _require_prime(cfg, "Hstar")
    b = _Builder(cfg, "Hstar")
    b.gen("zeta", "restricted", p)
    b.gen("u", "nilpotent", p, degree=1)
    b.gen("v", "nilpotent", p, degree=1)
    b.rule("u zeta", "zeta u + u")
    b.rule("v zeta", "zeta v + v")
    b.rule("v u", "u v - 1/2 u^2")
    b.rule(f"zeta^{p}", "zeta")
    b.rule(f"u^{p}", "0")
    b.rule(f"v^{p}", "0")
    system = b.system()
    return AlgebraSpec("Hstar", system, _hopf(system, _W_COPRODUCTS))


def _build_ktilde(cfg: FieldCfg) -> AlgebraSpec:
    b = _Builder(cfg, "Ktilde")
    b.gen("zeta")
    b.gen("u", degree=1)
    b.gen("v", degree=1)
    b.rule("u zeta", "zeta u + u")
    b.rule("v zeta", "zeta v + v")
    b.rule("v u", "u v - 1/2 u^2")
    system = b.system()
    return AlgebraSpec("Ktilde", system, _hopf(system, _W_COPRODUCTS))


def _build_htilde(cfg: FieldCfg) -> AlgebraSpec:
    b = _Builder(cfg, "Htilde")
    b.gen("x", degree=-1)
    b.gen("y", degree=-1)
    b.gen("g", "grouplike-free", inverse="ginv")
    b.gen("ginv", "grouplike-free", inverse="g")
    b.rule("y x", "x y - 1/2 x^2")
    b.rule("g x", "x g")
    b.rule("g y", "y g + x g")
    b.rule("ginv x", "x ginv")
    b.rule("ginv y", "y ginv - x ginv")
    b.rule("g ginv", "1")
    b.rule("ginv g", "1")
    system = b.system()
    hopf = _hopf(
        system,
        {"x": _skew("x", "g"), "y": _skew("y", "g"), "g": [("g", "g")],
         "ginv": [("ginv", "ginv")]},
        grouplikes=("g", "ginv"),
    )
    return AlgebraSpec("Htilde", system, hopf)


_DOUBLE_RULES = [
    ("y x", "x y - 1/2 x^2"),
    ("g x", "x g"),
    ("g y", "y g + x g"),
    ("zeta x", "x zeta + x"),
    ("zeta y", "y zeta + y"),
    ("zeta g", "g zeta"),
    ("u x", "x u"),
    ("u y", "y u + 1 - g"),
    ("u g", "g u"),
    ("u zeta", "zeta u + u"),
    ("v x", "x v + 1 - g + x u"),
    ("v y", "y v - g zeta + y u"),
    ("v g", "g v + g u"),
    ("v zeta", "zeta v + v"),
    ("v u", "u v - 1/2 u^2"),
]

_DOUBLE_COPRODUCTS = {
    "x": _skew("x", "g"),
    "y": _skew("y", "g"),
    "g": [("g", "g")],
    **_W_COPRODUCTS,
}


def _build_dh(cfg: FieldCfg) -> AlgebraSpec:
    p = _require_prime(cfg, "DH")
    b = _Builder(cfg, "DH")
    b.gen("x", "nilpotent", p, degree=-1)
    b.gen("y", "nilpotent", p, degree=-1)
    b.gen("g", "grouplike", p)
    b.gen("zeta", "restricted", p)
    b.gen("u", "nilpotent", p, degree=1)
    b.gen("v", "nilpotent", p, degree=1)
    for lhs, rhs in _DOUBLE_RULES:
        b.rule(lhs, rhs)
    for name in ("x", "y", "u", "v"):
        b.rule(f"{name}^{p}", "0")
    b.rule(f"g^{p}", "1")
    b.rule(f"zeta^{p}", "zeta")
    system = b.system()
    return AlgebraSpec(
        "DH", system, _hopf(system, _DOUBLE_COPRODUCTS, grouplikes=("g",))
    )


def _build_dtilde(cfg: FieldCfg) -> AlgebraSpec:
    b = _Builder(cfg, "Dtilde")
    b.gen("x", degree=-1)
    b.gen("y", degree=-1)
    b.gen("g", "grouplike-free", inverse="ginv")
    b.gen("ginv", "grouplike-free", inverse="g")
    b.gen("zeta")
    b.gen("u", degree=1)
    b.gen("v", degree=1)
    for lhs, rhs in _DOUBLE_RULES:
        b.rule(lhs, rhs)
    b.rule("ginv x", "x ginv")
    b.rule("ginv y", "y ginv - x ginv")
    b.rule("g ginv", "1")
    b.rule("ginv g", "1")
    b.rule("zeta ginv", "ginv zeta")
    b.rule("u ginv", "ginv u")
    b.rule("v ginv", "ginv v - ginv u")
    system = b.system()
    coproducts = {**_DOUBLE_COPRODUCTS, "ginv": [("ginv", "ginv")]}
    return AlgebraSpec(
        "Dtilde", system,
        _hopf(system, coproducts, grouplikes=("g", "ginv")),
    )


def _build_sl2(cfg: FieldCfg, restricted: bool) -> AlgebraSpec:
    name = "usl2" if restricted else "Usl2"
    b = _Builder(cfg, name)
    if restricted:
        p = _require_prime(cfg, name)
        b.gen("e", "nilpotent", p, degree=-1)
        b.gen("h", "restricted", p)
        b.gen("f", "nilpotent", p, degree=1)
    else:
        b.gen("e", degree=-1)
        b.gen("h")
        b.gen("f", degree=1)
    b.rule("h e", "e h + 2 e")
    b.rule("f e", "e f - h")
    b.rule("f h", "h f + 2 f")
    if restricted:
        b.rule(f"e^{p}", "0")
        b.rule(f"h^{p}", "h")
        b.rule(f"f^{p}", "0")
    system = b.system()
    return AlgebraSpec(name, system, _hopf(system, _primitive("e", "h", "f")))


def _commuting_rules(b: _Builder) -> None:
    names = [g.name for g in b.gens]
    for j, later in enumerate(names):
        for earlier in names[:j]:
            pair = {earlier, later}
            if any(g.inverse in pair and g.name in pair for g in b.gens):
                continue
            b.rule(f"{later} {earlier}", f"{earlier} {later}")


def _build_r(cfg: FieldCfg) -> AlgebraSpec:
    p = _require_prime(cfg, "R")
    b = _Builder(cfg, "R")
    b.gen("x", "nilpotent", p, degree=-1)
    b.gen("g", "grouplike", p)
    b.gen("u", "nilpotent", p, degree=1)
    _commuting_rules(b)
    b.rule(f"x^{p}", "0")
    b.rule(f"g^{p}", "1")
    b.rule(f"u^{p}", "0")
    system = b.system()
    hopf = _hopf(
        system,
        {"x": _skew("x", "g"), "g": [("g", "g")], **_primitive("u")},
        grouplikes=("g",),
    )
    return AlgebraSpec("R", system, hopf)


def _build_og(cfg: FieldCfg) -> AlgebraSpec:
    b = _Builder(cfg, "OG")
    b.gen("x", degree=-1)
    b.gen("g", "grouplike-free", inverse="ginv")
    b.gen("ginv", "grouplike-free", inverse="g")
    b.gen("u", degree=1)
    _commuting_rules(b)
    b.rule("g ginv", "1")
    b.rule("ginv g", "1")
    system = b.system()
    hopf = _hopf(
        system,
        {"x": _skew("x", "g"), "g": [("g", "g")],
         "ginv": [("ginv", "ginv")], **_primitive("u")},
        grouplikes=("g", "ginv"),
    )
    return AlgebraSpec("OG", system, hopf)


def _build_z(cfg: FieldCfg) -> AlgebraSpec:
    p = _require_prime(cfg, "Z")
    b = _Builder(cfg, "Z")
    b.gen("X1", degree=-p)
    b.gen("X2", degree=-p)
    b.gen("T", "grouplike-free", inverse="Tinv")
    b.gen("Tinv", "grouplike-free", inverse="T")
    b.gen("X3")
    b.gen("X4", degree=p)
    b.gen("X5", degree=p)
    _commuting_rules(b)
    b.rule("T Tinv", "1")
    b.rule("Tinv T", "1")
    system = b.system()
    hopf = _hopf(
        system,
        {
            "X1": _skew("X1", "T"),
            "X2": _skew("X2", "T"),
            "T": [("T", "T")],
            "Tinv": [("Tinv", "Tinv")],
            **_primitive("X3", "X4"),
            "X5": [("X5", "1"), ("1", "X5"), ("X3", "X4")],
        },
        grouplikes=("T", "Tinv"),
    )
    return AlgebraSpec("Z", system, hopf)


def _build_e(cfg: FieldCfg, n: int) -> AlgebraSpec:
    """Degree truncation of the graded dual, generated by divided powers.

    Letters ``y1 .. yN`` precede ``x1 .. xN``; ``xi`` is ``x^{[i]}``.
    """
    name = f"E({n})"
    b = _Builder(cfg, name)
    half = cfg.half()

    def y(i: int) -> Word:
        return (i - 1,) if i else ()

    def x(i: int) -> Word:
        return (n + i - 1,) if i else ()

    def power_rhs(i: int, j: int, letter: Any) -> Terms:
        if i + j > n:
            return {}
        c = binomial(i + j, i, cfg)
        return {letter(i + j): c} if c else {}

    for letter, prefix in ((y, "y"), (x, "x")):
        for i in range(1, n + 1):
            rhs = power_rhs(i, i, letter)
            domain = "restricted" if rhs else "nilpotent"
            b.gen(f"{prefix}{i}", domain, 2, degree=i, codegree=i)
    for letter in (y, x):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                b.rule(letter(i) + letter(j), power_rhs(i, j, letter))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            rhs: Terms = {}
            if i + j <= n:
                for k in range(j + 1):
                    c = cfg.mul(
                        binomial(i + k, k, cfg),
                        raising_factorial(i, k, cfg),
                    )
                    c = cfg.mul(c, cfg.power(half, k))
                    add_into(rhs, {y(j - k) + x(i + k): c}, 1, cfg)
            b.rule(x(i) + y(j), rhs)
            if i + j > n:
                b.rule(y(j) + x(i), {})
    system = b.system()
    return AlgebraSpec(name, system, braided=True, params={"n": n})


ALGEBRAS = (
    "BV", "Btilde", "Bhat", "K", "F", "G", "H", "Hkla", "DkG", "Hstar",
    "DH", "Htilde", "Ktilde", "Dtilde", "usl2", "Usl2", "R", "OG", "Z",
    "E",
)


def _validate(cfg: FieldCfg, k: int, ell: int, a: int, n: int) -> None:
    if k < 1 or ell < 1:
        errmsg = f"k and ell must be positive, got k={k}, ell={ell}."
        raise ValueError(errmsg)
    if n < 1:
        errmsg = f"The truncation degree must be positive, got {n}."
        raise ValueError(errmsg)
    if cfg.is_prime and not 0 <= a < cfg.p:
        errmsg = f"a must be a field element in [0, {cfg.p}), got {a}."
        raise ValueError(errmsg)


@functools.cache
def build_algebra(
    name: str,
    cfg: FieldCfg,
    k: int = 1,
    ell: int = 1,
    a: int = 0,
    n: int = 6,
) -> AlgebraSpec:
    """Build a cataloged algebra; identical arguments share one instance.

    Parameters
    ----------
    name: str
        One of :data:`ALGEBRAS`.
    cfg: FieldCfg
        Coefficient field.
    k, ell, a: int
        Pre-Nichols parameters for ``K``, ``F``, ``G`` and ``Hkla``.
    n: int
        Truncation degree of ``E``.

    """
    _validate(cfg, k, ell, a, n)
    builders = {
        "BV": lambda: _build_bv(cfg),
        "Btilde": lambda: _build_btilde(cfg),
        "Bhat": lambda: _build_bhat(cfg),
        "K": lambda: _build_k(cfg, k, a),
        "F": lambda: _build_f(cfg, ell),
        "G": lambda: _build_g(cfg, k, ell, a),
        "H": lambda: _build_h(cfg),
        "Hkla": lambda: _build_hkla(cfg, k, ell, a),
        "DkG": lambda: _build_dkg(cfg),
        "Hstar": lambda: _build_hstar(cfg),
        "DH": lambda: _build_dh(cfg),
        "Htilde": lambda: _build_htilde(cfg),
        "Ktilde": lambda: _build_ktilde(cfg),
        "Dtilde": lambda: _build_dtilde(cfg),
        "usl2": lambda: _build_sl2(cfg, restricted=True),
        "Usl2": lambda: _build_sl2(cfg, restricted=False),
        "R": lambda: _build_r(cfg),
        "OG": lambda: _build_og(cfg),
        "Z": lambda: _build_z(cfg),
        "E": lambda: _build_e(cfg, n),
    }
    if name not in builders:
        errmsg = f"Unknown algebra {name!r}; choose from {ALGEBRAS}."
        raise ValueError(errmsg)
    return builders[name]()


def graded_dimension(
    alg: AlgebraSpec, n: int | Literal["total"] = "total"
) -> int:
    """Number of PBW monomials of degree ``n``, or of all of them."""
    system = alg.system
    if n == "total":
        return len(enumerate_basis(system, "all").words)
    if alg.is_finite():
        words = enumerate_basis(system, "all").words
        return sum(1 for w in words if system.degree(w) == n)
    basis = enumerate_basis(system, up_to=n, weight="degree")
    return basis.dims.get(n, 0)


def restrict(
    alg: AlgebraSpec, letters: Sequence[str], name: str | None = None
) -> AlgebraSpec:
    """Subalgebra spanned by a subset of generators closed under the rules.

    Coproducts of the kept generators must only involve kept letters.
    """
    keep = [alg.letter(n) for n in letters]
    keep.sort()
    remap = {old: new for new, old in enumerate(keep)}
    cfg = alg.cfg

    def move(word: Word) -> Word:
        if any(a not in remap for a in word):
            errmsg = f"Generators {letters} are not closed in {alg.name!r}."
            raise ValueError(errmsg)
        return tuple(remap[a] for a in word)

    gens = [alg.system.gens[a] for a in keep]
    alphabet = tuple(g.name for g in gens)
    rules = []
    for rule in alg.system.rules:
        if all(a in remap for a in rule.lhs):
            rhs = {move(w): c for w, c in rule.rhs.terms.items()}
            rules.append(
                RewriteRule(move(rule.lhs), NCPoly(rhs, cfg, alphabet))
            )
    new_name = name or f"{alg.name}|{','.join(letters)}"
    system = RewriteSystem(cfg, gens, rules, name=new_name)
    hopf = None
    if alg.hopf is not None:
        hopf = HopfData(
            {
                remap[a]: {(move(w1), move(w2)): c
                           for (w1, w2), c in alg.hopf.coproducts[a].items()}
                for a in keep
            },
            {remap[a]: alg.hopf.counit[a] for a in keep},
        )
    return AlgebraSpec(new_name, system, hopf, params=dict(alg.params))


# morphisms

MORPHISMS = (
    "Z->Dtilde", "Dtilde->DH", "R->DH", "DH->usl2", "OG->Dtilde",
    "Dtilde->Usl2", "OG->Z", "Z->Usl2", "OG->OG", "OG->R", "Usl2->usl2",
)
MORPHISM_VARIANTS = ("DH->usl2:y=e",)
# printed maps and the catalog map that corrects them
PRINTED_MORPHISMS = {"DH->usl2:printed": "DH->usl2"}
_ANY_FIELD = ("OG->Dtilde", "Dtilde->Usl2")


def _morphism(
    name: str,
    source: AlgebraSpec,
    target: AlgebraSpec,
    images: Mapping[str, str],
    hopf: bool = True,
) -> MorphismSpec:
    parsed = {}
    for letter in source.alphabet:
        text = images.get(letter, letter)
        parsed[source.letter(letter)] = target.poly(text)
    return MorphismSpec(name, source, target, parsed, hopf=hopf)


def _sl2_images(zeta: str = "1/2 h", y: str = "1/2 e") -> dict:
    return {
        "x": "0", "u": "0", "g": "1", "ginv": "1",
        "zeta": zeta, "y": y, "v": "f",
    }


def build_morphism(name: str, cfg: FieldCfg) -> MorphismSpec:
    """Build one of the maps of the quantum Frobenius diagram.

    ``DH->usl2`` sends ``ζ`` to ``h/2``. ``DH->usl2:printed`` is the
    displayed map with ``ζ ↦ h`` and ``DH->usl2:y=e`` rescales ``y``.
    """
    p = cfg.p
    if name not in _ANY_FIELD:
        _require_prime(cfg, name)

    def alg(n: str) -> AlgebraSpec:
        return build_algebra(n, cfg)

    if name == "Z->Dtilde":
        return _morphism(name, alg("Z"), alg("Dtilde"), {
            "X1": f"x^{p}", "X2": f"y^{p}", "T": f"g^{p}",
            "Tinv": f"ginv^{p}", "X3": f"zeta^{p} - zeta",
            "X4": f"u^{p}", "X5": f"v^{p}",
        })
    if name == "Dtilde->DH":
        return _morphism(name, alg("Dtilde"), alg("DH"),
                         {"ginv": f"g^{p - 1}"})
    if name == "R->DH":
        return _morphism(name, alg("R"), alg("DH"), {})
    if name == "DH->usl2":
        return _morphism(name, alg("DH"), alg("usl2"), _sl2_images())
    if name == "DH->usl2:printed":
        return _morphism(name, alg("DH"), alg("usl2"),
                         _sl2_images(zeta="h"))
    if name == "DH->usl2:y=e":
        return _morphism(name, alg("DH"), alg("usl2"),
                         _sl2_images(y="e"))
    if name == "OG->Dtilde":
        return _morphism(name, alg("OG"), alg("Dtilde"), {})
    if name == "Dtilde->Usl2":
        return _morphism(name, alg("Dtilde"), alg("Usl2"), _sl2_images())
    if name == "OG->Z":
        return _morphism(name, alg("OG"), alg("Z"), {
            "x": "X1", "g": "T", "ginv": "Tinv", "u": "X4",
        })
    if name == "Z->Usl2":
        return _morphism(name, alg("Z"), alg("Usl2"), {
            "X1": "0", "X2": f"1/2 e^{p}", "T": "1", "Tinv": "1",
            "X3": f"1/2 h^{p} - 1/2 h", "X4": "0", "X5": f"f^{p}",
        })
    if name == "OG->OG":
        return _morphism(name, alg("OG"), alg("OG"), {
            "x": f"x^{p}", "g": f"g^{p}", "ginv": f"ginv^{p}",
            "u": f"u^{p}",
        })
    if name == "OG->R":
        return _morphism(name, alg("OG"), alg("R"), {"ginv": f"g^{p - 1}"})
    if name == "Usl2->usl2":
        return _morphism(name, alg("Usl2"), alg("usl2"), {})
    errmsg = f"Unknown morphism {name!r}; choose from {MORPHISMS}."
    raise ValueError(errmsg)


def identity_morphism(
    name: str,
    source: AlgebraSpec,
    target: AlgebraSpec,
    images: Mapping[str, str] | None = None,
    hopf: bool = False,
) -> MorphismSpec:
    """Map sending each source letter to the same-named target letter."""
    return _morphism(name, source, target, images or {}, hopf=hopf)


def restrict_morphism(
    m: MorphismSpec, letters: Sequence[str]
) -> MorphismSpec:
    """Precompose ``m`` with the inclusion of a generator subset."""
    source = restrict(m.source, letters)
    images = {
        source.letter(n): m.images[m.source.letter(n)] for n in letters
    }
    return MorphismSpec(
        f"{m.name}|{','.join(letters)}", source, m.target, images, m.hopf
    )


def apply_morphism(m: MorphismSpec, poly: NCPoly | Mapping) -> NCPoly:
    """Image of a source element, normalized in the target."""
    terms = poly.terms if isinstance(poly, NCPoly) else poly
    target = m.target.system
    out: Terms = {}
    for word, c in terms.items():
        add_into(out, _word_image(m, tuple(word)), c, target.cfg)
    return NCPoly(out, target.cfg, target.alphabet)


def _word_image(m: MorphismSpec, word: Word) -> Terms:
    hit = m.cache.get(word)
    if hit is not None:
        return hit
    target = m.target.system
    if not word:
        out: Terms = {(): 1}
    else:
        head = _word_image(m, word[:-1])
        out = {}
        for w1, a in head.items():
            for w2, b in m.images[word[-1]].terms.items():
                add_into(out, target.multiply(w1, w2), a * b, target.cfg)
    m.cache[word] = out
    return out
