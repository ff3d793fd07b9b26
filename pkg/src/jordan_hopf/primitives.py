"""Invariants, primitives and the twists of the pre-Nichols algebras."""

from __future__ import annotations

from typing import TYPE_CHECKING

from .catalog import apply_morphism, build_algebra, identity_morphism
from .hopfstr import check_morphism, word_coproduct
from .linalg import kernel_basis, rank
from .ncalg import NCPoly, Terms, Word, add_into
from .pbw import enumerate_basis
from .report import Check, make_check
from .scalars import binomial, stirling_unsigned

if TYPE_CHECKING:
    from .catalog import AlgebraSpec, MorphismSpec
    from .scalars import FieldCfg, Scalar

__all__ = [
    "expected_invariants",
    "expected_primitives",
    "invariant_space",
    "power_of_p",
    "primitive_space",
    "psi_twist_identity",
    "twist",
    "verify_primitives",
]

PRE_NICHOLS = ("Btilde", "K", "F", "G")


def _require_pre_nichols(alg: AlgebraSpec) -> None:
    if alg.name == "Btilde" or alg.name[:2] in ("K(", "F(", "G("):
        return
    errmsg = (f"{alg.name} is not one of the pre-Nichols algebras "
              f"{PRE_NICHOLS}.")
    raise ValueError(errmsg)


def component(alg: AlgebraSpec, n: int) -> list[Word]:
    """PBW words of degree ``n``."""
    basis = enumerate_basis(alg.system, up_to=n, weight="degree")
    return [w for w in basis.words if len(w) == n]


def _vectors(terms_list: list[Terms], words: list[Word]
             ) -> list[list[Scalar]]:
    index = {w: i for i, w in enumerate(words)}
    rows = []
    for terms in terms_list:
        row: list[Scalar] = [0] * len(words)
        for w, c in terms.items():
            row[index[w]] = c
        rows.append(row)
    return rows


def _combination(alg: AlgebraSpec, words: list[Word],
                 coeffs: tuple[Scalar, ...]) -> NCPoly:
    return NCPoly(dict(zip(words, coeffs, strict=True)), alg.cfg,
                  alg.alphabet)


def invariant_space(alg: AlgebraSpec, n: int) -> list[NCPoly]:
    """Basis of ``{f : g ⇀ f = f}`` in degree ``n``."""
    _require_pre_nichols(alg)
    cfg = alg.cfg
    words = component(alg, n)
    images = [alg.yd.act(w) for w in words]
    columns = _vectors(images, words)
    rows = [
        [cfg.sub(columns[j][i], 1 if i == j else 0)
         for j in range(len(words))]
        for i in range(len(words))
    ]
    return [_combination(alg, words, v)
            for v in kernel_basis(rows, cfg, len(words))]


def _truncation(alg: AlgebraSpec) -> int | None:
    """``p^ℓ`` when ``x`` is nilpotent, else ``None``."""
    return alg.system.bound(alg.letter("x"))


def _invariant_set(alg: AlgebraSpec, n: int, extra: bool) -> list[NCPoly]:
    p = alg.cfg.p
    x, y = alg.letter("x"), alg.letter("y")
    if p:
        words = [(x,) * (n - p * j) + (y,) * (p * j)
                 for j in range(n // p + 1)]
    else:
        words = [(x,) * n]
    top = _truncation(alg)
    if extra and top is not None and n >= top - 1:
        words.append((x,) * (top - 1) + (y,) * (n + 1 - top))
    out = [alg.elem({w: 1}) for w in words]
    return [f for f in out if f]


def expected_invariants(alg: AlgebraSpec, n: int) -> list[NCPoly]:
    """Spanning set of the invariants of degree ``n``.

    The monomials ``x^{n-pj} y^{pj}``, together with ``x^{N-1} y^{n+1-N}``
    whenever ``x^N = 0`` and ``n ≥ N - 1``.
    """
    _require_pre_nichols(alg)
    return _invariant_set(alg, n, extra=True)


def printed_invariants(alg: AlgebraSpec, n: int) -> list[NCPoly]:
    """The spanning set with the extra element only when ``k > ℓ``."""
    k, ell = alg.params.get("k"), alg.params.get("ell")
    extra = ell is not None and (k is None or k > ell)
    return _invariant_set(alg, n, extra)


def primitive_space(alg: AlgebraSpec, n: int) -> list[NCPoly]:
    """Basis of the primitives ``Δ(f) = f ⊗ 1 + 1 ⊗ f`` in degree ``n``."""
    _require_pre_nichols(alg)
    cfg = alg.cfg
    words = component(alg, n)
    defects = []
    for w in words:
        d = dict(word_coproduct(alg, w))
        add_into(d, {(w, ()): 1, ((), w): 1}, -1, cfg)
        defects.append(d)
    keys = sorted({key for d in defects for key in d})
    rows = [[d.get(key, 0) for d in defects] for key in keys]
    return [_combination(alg, words, v)
            for v in kernel_basis(rows, cfg, len(words))]


def power_of_p(n: int, p: int) -> bool:
    if not p:
        return n == 1
    while n % p == 0:
        n //= p
    return n == 1


def expected_primitives(alg: AlgebraSpec, n: int) -> list[NCPoly]:
    """``x^n`` and ``y^n`` when ``n`` is a power of ``p``, else nothing."""
    if not power_of_p(n, alg.cfg.p):
        return []
    x, y = alg.letter("x"), alg.letter("y")
    out = [alg.elem({(x,) * n: 1}), alg.elem({(y,) * n: 1})]
    return [f for f in out if f]


def span_rank(alg: AlgebraSpec, n: int, *families: list[NCPoly]) -> int:
    words = component(alg, n)
    rows = _vectors([f.terms for fam in families for f in fam], words)
    return rank(rows, alg.cfg)


def same_span(alg: AlgebraSpec, n: int, a: list[NCPoly],
              b: list[NCPoly]) -> bool:
    ra, rb = span_rank(alg, n, a), span_rank(alg, n, b)
    return ra == rb == span_rank(alg, n, a, b)


def _fmt_span(fs: list[NCPoly]) -> str:
    return "{" + ", ".join(str(f) for f in fs) + "}"


def verify_primitives(alg: AlgebraSpec, max_degree: int) -> list[Check]:
    """Compare invariants and primitives with their spanning sets."""
    checks = []
    for n in range(1, max_degree + 1):
        params = {"algebra": alg.name, "n": n}
        inv = invariant_space(alg, n)
        want = expected_invariants(alg, n)
        checks.append(make_check(
            "invariants/span", "invariants of degree n", params,
            same_span(alg, n, inv, want),
            f"computed {_fmt_span(inv)}, expected {_fmt_span(want)}",
        ))
        printed = printed_invariants(alg, n)
        checks.append(make_check(
            "invariants/clause-split", "extra invariant only for k > ℓ",
            params, same_span(alg, n, inv, printed),
            f"computed {_fmt_span(inv)}, printed {_fmt_span(printed)}",
            flagged=True,
        ))
        prim = primitive_space(alg, n)
        want = expected_primitives(alg, n)
        checks.append(make_check(
            "primitives/span", "primitives of degree n", params,
            same_span(alg, n, prim, want),
            f"computed {_fmt_span(prim)}, expected {_fmt_span(want)}",
        ))
        meets = (not prim or span_rank(alg, n, prim) + span_rank(alg, n, inv)
                 > span_rank(alg, n, prim, inv))
        checks.append(make_check(
            "primitives/invariant", "nonzero primitives contain invariants",
            params, meets,
        ))
    return checks


# twists


def twist(alg: AlgebraSpec, t: Scalar) -> MorphismSpec:
    """``Ψ_t``: ``x ↦ x``, ``y ↦ y + t x`` as an endomorphism of ``alg``."""
    t = alg.cfg.reduce(t)
    m = identity_morphism(f"Psi[{alg.cfg.fmt(t)}]:{alg.name}", alg, alg,
                          hopf=True)
    m.images[alg.letter("y")] = alg.poly("y") + alg.poly("x").scale(t)
    return m


def _power(alg: AlgebraSpec, f: NCPoly, n: int) -> NCPoly:
    out = alg.elem({(): 1})
    for _ in range(n):
        out = alg.elem((out * f).terms)
    return out


def twisted_power(alg: AlgebraSpec, t: Scalar, n: int) -> NCPoly:
    """``y^n + tⁿ xⁿ + Σ C(n,j) [j i] (-2)^{i-j} t^i x^j y^{n-j}``."""
    cfg = alg.cfg
    x, y = alg.letter("x"), alg.letter("y")
    minus_half = cfg.inv(-2)
    terms: Terms = {}
    add_into(terms, {(y,) * n: 1, (x,) * n: cfg.power(t, n)}, 1, cfg)
    for i in range(1, n):
        for j in range(i, n + 1):
            c = cfg.mul(binomial(n, j, cfg), stirling_unsigned(j, i))
            c = cfg.mul(c, cfg.mul(cfg.power(minus_half, j - i),
                                   cfg.power(t, i)))
            add_into(terms, {(x,) * j + (y,) * (n - j): c}, 1, cfg)
    return alg.elem(terms)


def psi_twist_identity(
    t: Scalar,
    k: int,
    cfg: FieldCfg,
    bound: int | None = None,
    ell: int | None = None,
    a: int = 0,
    s: Scalar = 1,
) -> list[Check]:
    """Powers of ``y + tx`` and the twists ``Ψ_t`` of the Jordan plane.

    Parameters
    ----------
    t: Scalar
        Twist parameter.
    k: int
        Exponent of the Frobenius power ``(y + tx)^{p^k}``.
    bound: int, optional
        Largest ``n`` for the expansion of ``(y + tx)^n``; ``2p`` by default.
    ell, a: int
        Parameters of ``F(ℓ)``, ``K(k, a)`` and ``G(k, ℓ, a)`` whose
        relations the twist must preserve; ``ℓ = k + 1`` by default.
    s: Scalar
        Second parameter for the group law ``Ψ_s Ψ_t = Ψ_{s+t}``.

    """
    if k < 1:
        errmsg = f"k must be positive, got {k}."
        raise ValueError(errmsg)
    btilde = build_algebra("Btilde", cfg)
    p = cfg.p
    t = cfg.reduce(t)
    bound = bound if bound is not None else 2 * max(p, 3)
    params = {"p": p, "t": cfg.fmt(t), "k": k}
    x, y = btilde.poly("x"), btilde.poly("y")
    shifted = y + x.scale(t)
    checks = []

    detail = ""
    power = btilde.elem({(): 1})
    for n in range(1, bound + 1):
        power = btilde.elem((power * shifted).terms)
        want = twisted_power(btilde, t, n)
        if power != want:
            detail = f"n={n}: {power - want}"
            break
    checks.append(make_check("twist/expansion", "(y + tx)^n expansion",
                             {**params, "bound": bound}, not detail, detail))

    if cfg.is_prime:
        got = _power(btilde, shifted, p)
        want = btilde.elem({(btilde.letter("y"),) * p: 1,
                            (btilde.letter("x"),) * p:
                            cfg.sub(cfg.power(t, p), t)})
        checks.append(make_check("twist/p-power",
                                 "(y + tx)^p = y^p + (t^p - t)x^p", params,
                                 got == want, f"{got - want}"))
        q = p**k
        got = _power(btilde, shifted, q)
        c = cfg.power(cfg.sub(cfg.power(t, p), t), p ** (k - 1))
        want = btilde.elem({(btilde.letter("y"),) * q: 1,
                            (btilde.letter("x"),) * q: c})
        checks.append(make_check("twist/frobenius",
                                 "(y + tx)^{p^k} in closed form", params,
                                 got == want, f"{got - want}"))

        ell = k + 1 if ell is None else ell
        targets = [build_algebra("K", cfg, k=k, a=a),
                   build_algebra("F", cfg, ell=ell)]
        if not a or k < ell:
            targets.append(build_algebra("G", cfg, k=k, ell=ell, a=a))
        for alg in targets:
            check = check_morphism(twist(alg, t))
            checks.append(make_check(
                "twist/relations", "Ψ_t is a braided Hopf endomorphism",
                {**params, "algebra": alg.name},
                check.status == "pass", check.detail,
            ))

    psi_t = twist(btilde, t)
    words = [w for n in range(4) for w in component(btilde, n)]
    bad = []
    for w in words:
        moved = apply_morphism(psi_t, btilde.yd.act(w))
        want = btilde.elem(btilde.yd.act_terms(apply_morphism(psi_t,
                                                              {w: 1}).terms))
        if moved != want:
            bad.append(str(btilde.elem({w: 1})))
    checks.append(make_check("twist/yd", "Ψ_t commutes with g", params,
                             not bad, ", ".join(bad)))

    s = cfg.reduce(s)
    psi_s, psi_st = twist(btilde, s), twist(btilde, cfg.add(s, t))
    bad = [
        str(btilde.elem({w: 1}))
        for w in words
        if apply_morphism(psi_s, apply_morphism(psi_t, {w: 1}))
        != apply_morphism(psi_st, {w: 1})
    ]
    checks.append(make_check("twist/group-law", "Ψ_s Ψ_t = Ψ_{s+t}",
                             {**params, "s": cfg.fmt(s)}, not bad,
                             ", ".join(bad)))
    return checks
