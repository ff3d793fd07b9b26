"""Pre-Nichols poset decisions and exact sequences of Hopf algebras."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .catalog import (
    AlgebraSpec,
    MorphismSpec,
    apply_morphism,
    build_algebra,
    identity_morphism,
)
from .hopfstr import antipode, check_morphism, word_coproduct
from .linalg import SubspaceMod, matmul_mod, rank
from .ncalg import Terms, Word, add_into
from .pbw import enumerate_basis
from .report import Check, make_check

if TYPE_CHECKING:
    from .scalars import FieldCfg, Scalar

__all__ = [
    "PosetDecision",
    "poset_brute_force",
    "poset_compare",
    "verify_quotient_sequence",
]

Params = tuple[int, int, int]

# A-words this long span enough of the image to test adjoint stability
_SPAN_LENGTH = 3


# poset of the G(k, ell, a)


@dataclass
class PosetDecision:
    """Outcome of comparing two finite pre-Nichols algebras.

    Attributes
    ----------
    geq: bool
        Whether the source maps onto the target by the identity on x, y.
    clause: str
        Name of the comparison rule that decided, e.g. ``"both-zero"``.
    condition: str
        The rule's condition instantiated with the parameters.
    certificate: MorphismSpec or None
        The epimorphism when ``geq`` holds.

    """

    geq: bool
    clause: str
    condition: str
    certificate: MorphismSpec | None = None


def _check_params(params: Params, cfg: FieldCfg) -> None:
    k, ell, a = params
    if k < 1 or ell < 1:
        errmsg = f"k and ell must be positive, got {params}."
        raise ValueError(errmsg)
    if not 0 <= a < cfg.p:
        errmsg = f"a must be a field element in [0, {cfg.p}), got {a}."
        raise ValueError(errmsg)
    if a and k >= ell:
        errmsg = f"G(k, ell, a) with a != 0 needs k < ell, got {params}."
        raise ValueError(errmsg)


def poset_compare(
    src: Params, dst: Params, cfg: FieldCfg
) -> PosetDecision:
    """Decide ``G(src) ≥ G(dst)`` in the poset of pre-Nichols algebras.

    The Frobenius twist ``b^(p^(k-k'))`` of the parameter is trivial on
    the prime field, so the twisted equality reduces to ``a = b``.
    """
    if not cfg.is_prime:
        errmsg = "The pre-Nichols poset is only defined over F_p."
        raise ValueError(errmsg)
    _check_params(src, cfg)
    _check_params(dst, cfg)
    k, ell, a = src
    k2, ell2, b = dst
    if a and b:
        twisted = k >= k2 and a == cfg.power(b, cfg.p ** (k - k2))
        if ell >= ell2 and ell2 > k and twisted:
            clause, ok = "nonzero-nonzero/twisted", True
        else:
            clause = "nonzero-nonzero/split"
            ok = ell >= ell2 and k >= ell2 > k2
        condition = (
            f"{ell}>={ell2} and ({ell2}>{k}>={k2} and a=b^p^{k - k2}"
            f" or {k}>={ell2}>{k2})"
        )
    elif a:
        clause = "nonzero-zero"
        ok = ell >= ell2 and k >= ell2 and k >= k2
        condition = f"{ell}>={ell2}, {k}>={ell2}, {k}>={k2}"
    elif b:
        clause = "zero-nonzero"
        ok = ell >= ell2 and k >= ell2 > k2
        condition = f"{ell}>={ell2} and {k}>={ell2}>{k2}"
    else:
        clause = "zero-zero"
        ok = ell >= ell2 and k >= k2
        condition = f"{ell}>={ell2} and {k}>={k2}"
    certificate = _identity_on_v(src, dst, cfg) if ok else None
    return PosetDecision(ok, clause, condition, certificate)


def _identity_on_v(src: Params, dst: Params, cfg: FieldCfg) -> MorphismSpec:
    source = build_algebra("G", cfg, k=src[0], ell=src[1], a=src[2])
    target = build_algebra("G", cfg, k=dst[0], ell=dst[1], a=dst[2])
    return identity_morphism(
        f"{source.name}->{target.name}", source, target, hopf=True
    )


def poset_brute_force(src: Params, dst: Params, cfg: FieldCfg) -> bool:
    """Whether the identity on x, y respects the relations of ``G(src)``."""
    _check_params(src, cfg)
    _check_params(dst, cfg)
    m = _identity_on_v(src, dst, cfg)
    return check_morphism(m, hopf=False).status == "pass"


# exact sequences


def _mul_terms(alg: AlgebraSpec, *parts: Mapping[Word, Scalar]) -> Terms:
    out: Terms = {(): 1}
    for part in parts:
        acc: Terms = {}
        for w1, c1 in out.items():
            for w2, c2 in part.items():
                add_into(acc, alg.system.multiply(w1, w2), c1 * c2, alg.cfg)
        out = acc
    return out


def _adjoint(alg: AlgebraSpec, c: int, e: Terms, side: str) -> Terms:
    """``Σ c1 e S(c2)`` on the left, ``Σ S(c1) e c2`` on the right."""
    out: Terms = {}
    for (w1, w2), coeff in word_coproduct(alg, (c,)).items():
        if side == "left":
            parts = ({w1: 1}, e, antipode(alg, {w2: 1}).terms)
        else:
            parts = (antipode(alg, {w1: 1}).terms, e, {w2: 1})
        add_into(out, _mul_terms(alg, *parts), coeff, alg.cfg)
    return out


def _generator_minus_counit(m: MorphismSpec) -> dict[int, Terms]:
    source = m.source
    if source.hopf is None:
        errmsg = f"{source.name!r} carries no Hopf data."
        raise ValueError(errmsg)
    out = {}
    for a, image in m.images.items():
        terms = dict(image.terms)
        add_into(terms, {(): 1}, -source.hopf.counit[a], source.cfg)
        out[a] = terms
    return out


def _rank_of(rows: Iterable[Mapping[Word, Scalar]], cfg: FieldCfg) -> int:
    rows = list(rows)
    columns = sorted({w for r in rows for w in r})
    index = {w: i for i, w in enumerate(columns)}
    dense = []
    for r in rows:
        v: list[Scalar] = [0] * len(columns)
        for w, c in r.items():
            v[index[w]] = c
        dense.append(v)
    return rank(dense, cfg) if columns else 0


def _in_span(
    vectors: list[Mapping[Word, Scalar]],
    target: Mapping[Word, Scalar],
    cfg: FieldCfg,
) -> bool:
    if not target:
        return True
    return _rank_of(vectors, cfg) == _rank_of([*vectors, target], cfg)


def _label(iota: MorphismSpec, pi: MorphismSpec) -> str:
    return f"{iota.source.name} -> {iota.target.name} -> {pi.target.name}"


def verify_quotient_sequence(
    iota: MorphismSpec,
    pi: MorphismSpec,
    truncation: int | None = None,
    central: bool = False,
) -> list[Check]:
    """Verify that ``A -ι-> C -π-> B`` is an exact sequence.

    Checks injectivity of ``ι``, surjectivity of ``π``, that ``ker π`` is
    the ideal generated by ``ι(A⁺)`` and that ``ι(A)`` is stable under
    both adjoint actions of ``C``. Finite ``C`` is handled exactly over
    ``F_p``; otherwise words of ``C`` up to length ``truncation`` are
    checked.

    Parameters
    ----------
    iota, pi: MorphismSpec
        The inclusion and the projection; ``iota.target`` must be
        ``pi.source``.
    truncation: int, optional
        Word length bound, required when ``C`` is infinite-dimensional.
    central: bool
        Additionally require ``ι(A)`` to be central in ``C``.

    """
    if iota.target is not pi.source:
        errmsg = (
            f"{iota.name} lands in {iota.target.name!r} but {pi.name} "
            f"starts from {pi.source.name!r}."
        )
        raise ValueError(errmsg)
    middle = iota.target
    if middle.is_finite():
        checks = _finite_sequence(iota, pi)
    else:
        if truncation is None:
            errmsg = (
                f"{middle.name!r} is infinite-dimensional; a truncation "
                f"length is required."
            )
            raise ValueError(errmsg)
        checks = _truncated_sequence(iota, pi, truncation)
    params = {"sequence": _label(iota, pi), "truncation": truncation}
    checks.append(_normality(iota, params))
    if central:
        checks.append(_centrality(iota, params))
    return checks


def _vectors(
    rows: Iterable[Mapping[Word, Scalar]], index: dict[Word, int], p: int
) -> np.ndarray:
    rows = list(rows)
    out = np.zeros((len(rows), len(index)), dtype=np.int64)
    for i, r in enumerate(rows):
        for w, c in r.items():
            out[i, index[w]] = int(c) % p
    return out


def _multiplication(
    alg: AlgebraSpec, words: list[Word], index: dict[Word, int], side: str
) -> list[np.ndarray]:
    p = alg.cfg.p
    out = []
    for c in range(len(alg.alphabet)):
        if side == "left":
            rows = [alg.system.multiply((c,), w) for w in words]
        else:
            rows = [alg.system.multiply(w, (c,)) for w in words]
        out.append(_vectors(rows, index, p))
    return out


def _finite_sequence(iota: MorphismSpec, pi: MorphismSpec) -> list[Check]:
    source, middle, quotient = iota.source, iota.target, pi.target
    cfg = middle.cfg
    if not cfg.is_prime:
        errmsg = "Finite exact sequences are checked over F_p only."
        raise ValueError(errmsg)
    p = cfg.p
    params = {"sequence": _label(iota, pi), "truncation": None}
    checks = []

    words_a = enumerate_basis(source.system, "all").words
    words_c = enumerate_basis(middle.system, "all").words
    words_b = enumerate_basis(quotient.system, "all").words
    index_c = {w: i for i, w in enumerate(words_c)}
    index_b = {w: i for i, w in enumerate(words_b)}

    images = _vectors(
        (apply_morphism(iota, {w: 1}).terms for w in words_a), index_c, p
    )
    image_space = SubspaceMod(len(words_c), p)
    image_space.add(images)
    checks.append(make_check(
        "exact/injective", "ι maps a basis to independent vectors", params,
        image_space.dim == len(words_a),
        f"rank {image_space.dim} of {len(words_a)}",
    ))

    projection = _vectors(
        (apply_morphism(pi, {w: 1}).terms for w in words_c), index_b, p
    )
    pi_space = SubspaceMod(len(words_b), p)
    pi_space.add(projection)
    checks.append(make_check(
        "exact/surjective", "π hits a basis of the quotient", params,
        pi_space.dim == len(words_b),
        f"rank {pi_space.dim} of {len(words_b)}",
    ))

    start = _vectors(_generator_minus_counit(iota).values(), index_c, p)
    left = _multiplication(middle, words_c, index_c, "left")
    right = _multiplication(middle, words_c, index_c, "right")
    ideals = {}
    for side, maps in (("two", left + right), ("left", left),
                       ("right", right)):
        space = SubspaceMod(len(words_c), p)
        space.add(start)
        space.close(maps)
        ideals[side] = space
    ideal = ideals["two"]
    kernel_dim = len(words_c) - pi_space.dim
    inside = not matmul_mod(ideal.basis, projection, p).any()
    ok = inside and ideal.dim == kernel_dim
    checks.append(make_check(
        "exact/kernel", "ker π is generated by ι(A⁺)", params, ok,
        f"dim ideal {ideal.dim}, dim ker π {kernel_dim}, "
        f"dim quotient {len(words_c) - ideal.dim}"
        + ("" if inside else ", ideal not killed by π"),
    ))
    sides = ideals["left"].dim == ideals["right"].dim == ideal.dim
    checks.append(make_check(
        "exact/one-sided", "C ι(A⁺) = ι(A⁺) C", params, sides,
        f"left {ideals['left'].dim}, right {ideals['right'].dim}, "
        f"two-sided {ideal.dim}",
    ))
    return checks


@dataclass(frozen=True)
class _Reducer:
    """``a^power ≡ Σ lower[e] a^e`` modulo the ideal."""

    letter: int
    power: int
    lower: dict[int, Scalar]


def _reducers(iota: MorphismSpec) -> dict[int, _Reducer]:
    middle = iota.target
    cfg = middle.cfg
    out: dict[int, _Reducer] = {}
    for a, terms in _generator_minus_counit(iota).items():
        letters = {w[0] for w in terms if w}
        powers = [w for w in terms if any(c != w[0] for c in w)]
        if len(letters) != 1 or powers:
            name = iota.source.alphabet[a]
            errmsg = (
                f"ι({name}) - ε({name}) is not a polynomial in one "
                f"generator of {middle.name!r}."
            )
            raise ValueError(errmsg)
        (letter,) = letters
        top = max(len(w) for w in terms)
        lead = terms[(letter,) * top]
        lower = {
            len(w): cfg.neg(cfg.div(c, lead))
            for w, c in terms.items() if len(w) < top
        }
        known = out.get(letter)
        if known is None or top < known.power:
            out[letter] = _Reducer(letter, top, lower)
    return out


def _conversions(
    middle: AlgebraSpec, reducers: dict[int, _Reducer]
) -> dict[int, tuple[int, int]]:
    """Inverse letters rewritten as powers of the earlier partner."""
    out = {}
    for a, gen in enumerate(middle.system.gens):
        if gen.inverse is None:
            continue
        partner = middle.letter(gen.inverse)
        if partner > a:
            continue
        red = reducers.get(partner)
        if red is not None and red.lower == {0: 1}:
            out[a] = (partner, red.power - 1)
    return out


def _runs(word: Word) -> Iterable[tuple[int, int, int]]:
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        yield i, word[i], j - i
        i = j


class _RunReducer:
    """Rewrite normal words modulo the ideal generated by ι(A⁺)."""

    def __init__(self, middle: AlgebraSpec, iota: MorphismSpec) -> None:
        self.alg = middle
        self.reducers = _reducers(iota)
        self.conversions = _conversions(middle, self.reducers)
        self.memo: dict[Word, Terms] = {}

    def step(self, word: Word) -> Terms | None:
        system = self.alg.system
        cfg = self.alg.cfg
        for i, a, m in _runs(word):
            pre, post = word[:i], word[i + m:]
            if a in self.conversions:
                b, e = self.conversions[a]
                return system.nf(pre + (b,) * (m * e) + post)
            red = self.reducers.get(a)
            if red is not None and m >= red.power:
                out: Terms = {}
                for e, c in red.lower.items():
                    run = (a,) * (m - red.power + e)
                    add_into(out, system.nf(pre + run + post), c, cfg)
                return out
        return None

    def reduce(self, word: Word) -> Terms:
        hit = self.memo.get(word)
        if hit is not None:
            return hit
        nxt = self.step(word)
        if nxt is None:
            out: Terms = {word: 1}
        else:
            out = {}
            for w, c in nxt.items():
                add_into(out, self.reduce(w), c, self.alg.cfg)
        self.memo[word] = out
        return out


def _truncated_sequence(
    iota: MorphismSpec, pi: MorphismSpec, truncation: int
) -> list[Check]:
    source, middle, quotient = iota.source, iota.target, pi.target
    cfg = middle.cfg
    params = {"sequence": _label(iota, pi), "truncation": truncation}
    checks = []

    longest = max((img.max_length() for img in iota.images.values()),
                  default=1)
    short = max(1, truncation // max(1, longest))
    words_a = enumerate_basis(source.system, short).words
    rank_a = _rank_of(
        (apply_morphism(iota, {w: 1}).terms for w in words_a), cfg
    )
    checks.append(make_check(
        "exact/injective", "ι maps a basis to independent vectors",
        {**params, "source length": short}, rank_a == len(words_a),
        f"rank {rank_a} of {len(words_a)}",
    ))

    images = [apply_morphism(pi, {w: 1}).terms
              for w in enumerate_basis(middle.system, 2).words]
    missing = [
        name for a, name in enumerate(quotient.alphabet)
        if not _in_span(images, {(a,): 1}, cfg)
    ]
    checks.append(make_check(
        "exact/surjective", "π hits every generator of the quotient",
        params, not missing,
        f"not reached: {', '.join(missing)}" if missing else "",
    ))

    bad = [
        source.alphabet[a]
        for a, terms in _generator_minus_counit(iota).items()
        if apply_morphism(pi, terms)
    ]
    checks.append(make_check(
        "exact/composite", "π ι = ε", params, not bad,
        f"π ι - ε nonzero on {', '.join(bad)}" if bad else "",
    ))

    try:
        reducer = _RunReducer(middle, iota)
    except ValueError as exc:
        checks.append(make_check("exact/kernel", "ker π = (ι(A⁺))", params,
                                 False, str(exc)))
        return checks
    remainders: set[Word] = set()
    words_c = enumerate_basis(middle.system, truncation).words
    for w in words_c:
        remainders.update(reducer.reduce(w))
    remainders_sorted = sorted(remainders, key=lambda w: (len(w), w))
    rank_r = _rank_of(
        (apply_morphism(pi, {w: 1}).terms for w in remainders_sorted), cfg
    )
    ok = rank_r == len(remainders_sorted)
    detail = (
        f"{len(words_c)} words reduce to {len(remainders_sorted)} "
        f"remainders, π has rank {rank_r} on them"
    )
    checks.append(make_check("exact/kernel", "ker π = (ι(A⁺))", params, ok,
                             detail))
    return checks


def _span_of_image(iota: MorphismSpec) -> list[Terms]:
    source = iota.source
    if source.is_finite():
        words = enumerate_basis(source.system, "all").words
    else:
        words = enumerate_basis(source.system, _SPAN_LENGTH).words
    return [apply_morphism(iota, {w: 1}).terms for w in words]


def _normality(iota: MorphismSpec, params: dict) -> Check:
    middle = iota.target
    span = _span_of_image(iota)
    for a, image in iota.images.items():
        for c in range(len(middle.alphabet)):
            for side in ("left", "right"):
                moved = _adjoint(middle, c, image.terms, side)
                if not _in_span(span, moved, middle.cfg):
                    name = iota.source.alphabet[a]
                    detail = (
                        f"{side} adjoint action of {middle.alphabet[c]} "
                        f"moves ι({name}) out of the image: "
                        f"{middle.elem(moved)}"
                    )
                    return make_check("exact/normal", "ι(A) is normal",
                                      params, False, detail)
    return make_check("exact/normal", "ι(A) is normal", params)


def _centrality(iota: MorphismSpec, params: dict) -> Check:
    middle = iota.target
    for a, image in iota.images.items():
        for c in range(len(middle.alphabet)):
            diff = dict(_mul_terms(middle, {(c,): 1}, image.terms))
            add_into(diff, _mul_terms(middle, image.terms, {(c,): 1}), -1,
                     middle.cfg)
            if diff:
                name = iota.source.alphabet[a]
                detail = (f"[{middle.alphabet[c]}, ι({name})] = "
                          f"{middle.elem(diff)}")
                return make_check("exact/central", "ι(A) is central",
                                  params, False, detail)
    return make_check("exact/central", "ι(A) is central", params)
