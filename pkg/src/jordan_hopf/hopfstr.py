"""Coproducts, counits and antipodes of cataloged Hopf algebras."""

from __future__ import annotations

from collections.abc import Mapping
from typing import TYPE_CHECKING, Literal

from .catalog import AlgebraSpec, MorphismSpec, TensorTerms, apply_morphism
from .identities import COMMUTATIONS, COPRODUCTS, family
from .ncalg import NCPoly, TensorElem, Terms, Word, add_into, tensor_multiply
from .pbw import RewriteSystem, enumerate_basis
from .report import Check, make_check
from .scalars import Scalar

if TYPE_CHECKING:
    import numpy as np

__all__ = [
    "antipode",
    "check_hopf_axioms",
    "check_morphism",
    "check_printed_morphism",
    "coproduct",
    "counit",
    "derive_antipode",
    "sample_words",
    "verify_commutation_formulas",
    "verify_coproduct_formulas",
]


def _require_hopf(alg: AlgebraSpec) -> None:
    if alg.hopf is None:
        errmsg = f"{alg.name!r} carries no Hopf data."
        raise ValueError(errmsg)


def _terms_of(alg: AlgebraSpec, e: NCPoly | str | Mapping) -> Terms:
    if isinstance(e, str):
        return alg.poly(e).terms
    if isinstance(e, NCPoly):
        return e.terms
    return dict(e)


def word_coproduct(alg: AlgebraSpec, word: Word) -> TensorTerms:
    """Coproduct of a word, both legs in normal form."""
    _require_hopf(alg)
    cache = alg.cache.setdefault("coproduct", {})
    word = tuple(word)
    hit = cache.get(word)
    if hit is not None:
        return hit
    if not word:
        out: TensorTerms = {((), ()): 1}
    elif len(word) == 1:
        out = dict(alg.hopf.coproducts[word[0]])
    else:
        out = tensor_multiply(
            word_coproduct(alg, word[:-1]),
            word_coproduct(alg, word[-1:]),
            alg.system.multiply,
            alg.cfg,
            mode="braided" if alg.braided else "plain",
            yd=alg.yd,
        )
    cache[word] = out
    return out


def coproduct_terms(alg: AlgebraSpec, terms: Mapping[Word, Scalar]
                    ) -> TensorTerms:
    out: TensorTerms = {}
    for word, c in terms.items():
        add_into(out, word_coproduct(alg, word), c, alg.cfg)
    return out


def coproduct(alg: AlgebraSpec, e: NCPoly | str) -> TensorElem:
    """Multiplicative extension of the generator coproducts.

    Braided specs multiply in the tensor square through their braiding.
    """
    terms = alg.system.normalize_terms(_terms_of(alg, e))
    return TensorElem(
        coproduct_terms(alg, terms), alg.cfg, (alg.alphabet, alg.alphabet)
    )


def counit(alg: AlgebraSpec, e: NCPoly | str | Mapping) -> Scalar:
    _require_hopf(alg)
    cfg = alg.cfg
    out: Scalar = 0
    for word, c in _terms_of(alg, e).items():
        value: Scalar = c
        for a in word:
            value = cfg.mul(value, alg.hopf.counit[a])
        out = cfg.add(out, value)
    return out


def _word_counit(alg: AlgebraSpec, word: Word) -> Scalar:
    return counit(alg, {word: 1})


def derive_antipode(alg: AlgebraSpec) -> dict[int, NCPoly]:
    """Solve ``m(S ⊗ id)Δ(a) = ε(a)`` for every generator ``a``.

    Each coproduct must contain ``a ⊗ 1`` once; the remaining left legs
    only involve generators whose antipode is already known.
    """
    _require_hopf(alg)
    if alg.braided:
        errmsg = f"{alg.name!r} is braided; no ordinary antipode."
        raise ValueError(errmsg)
    cached = alg.cache.get("antipode")
    if cached is not None:
        return cached
    cfg = alg.cfg
    system = alg.system
    solved: dict[int, Terms] = {
        a: dict(t) for a, t in alg.hopf.antipode.items()
    }
    for a, gen in enumerate(system.gens):
        if a in solved:
            continue
        if gen.domain == "grouplike":
            solved[a] = {(a,) * (gen.bound - 1): 1}
        elif gen.domain == "grouplike-free":
            solved[a] = {(system.index(gen.inverse),): 1}
    pending = [a for a in range(len(system.alphabet)) if a not in solved]
    while pending:
        progress = False
        for a in list(pending):
            delta = alg.hopf.coproducts[a]
            if delta.get(((a,), ())) != 1:
                errmsg = (
                    f"Coproduct of {system.alphabet[a]!r} lacks the term "
                    f"{system.alphabet[a]} ⊗ 1."
                )
                raise ValueError(errmsg)
            rest = {k: c for k, c in delta.items() if k != ((a,), ())}
            letters = {b for (left, _), _c in rest.items() for b in left}
            if a in letters:
                errmsg = f"Cannot solve the antipode of {system.alphabet[a]}."
                raise ValueError(errmsg)
            if not letters <= solved.keys():
                continue
            value: Terms = {}
            if alg.hopf.counit[a]:
                value[()] = alg.hopf.counit[a]
            for (left, right), c in rest.items():
                s_left = _antipode_word(system, solved, left)
                for w, d in s_left.items():
                    add_into(value, system.multiply(w, right), -d * c, cfg)
            solved[a] = value
            pending.remove(a)
            progress = True
        if not progress:
            names = [system.alphabet[a] for a in pending]
            errmsg = f"No antipode solution for {names} in {alg.name!r}."
            raise ValueError(errmsg)
    out = {
        a: NCPoly(system.normalize_terms(t), cfg, alg.alphabet)
        for a, t in solved.items()
    }
    alg.cache["antipode"] = out
    return out


def _antipode_word(
    system: RewriteSystem, solved: Mapping[int, Terms], word: Word
) -> Terms:
    out: Terms = {(): 1}
    for a in reversed(word):
        nxt: Terms = {}
        for w1, c1 in out.items():
            for w2, c2 in solved[a].items():
                add_into(nxt, system.multiply(w1, w2), c1 * c2, system.cfg)
        out = nxt
    return out


def antipode(alg: AlgebraSpec, e: NCPoly | str | Mapping) -> NCPoly:
    """Anti-multiplicative extension of the derived generator values."""
    gens = {a: p.terms for a, p in derive_antipode(alg).items()}
    cache = alg.cache.setdefault("antipode_words", {})
    out: Terms = {}
    for word, c in _terms_of(alg, e).items():
        hit = cache.get(word)
        if hit is None:
            hit = cache[word] = _antipode_word(alg.system, gens, word)
        add_into(out, hit, c, alg.cfg)
    return NCPoly(out, alg.cfg, alg.alphabet)


# axioms


def sample_words(
    alg: AlgebraSpec,
    n: int | Literal["full"],
    rng: np.random.Generator,
    max_length: int = 4,
) -> list[Word]:
    """Basis words, all of them or ``n`` drawn with replacement.

    Infinite specs draw from the words of length at most ``max_length``.
    """
    if alg.is_finite():
        words = enumerate_basis(alg.system, "all").words
    else:
        words = enumerate_basis(alg.system, max_length).words
    if n == "full":
        return list(words)
    picks = rng.integers(0, len(words), size=n)
    return [words[int(i)] for i in picks]


def _three_fold(alg: AlgebraSpec, terms: TensorTerms, side: str
                ) -> dict[tuple[Word, Word, Word], Scalar]:
    out: dict[tuple[Word, Word, Word], Scalar] = {}
    for (w1, w2), c in terms.items():
        if side == "left":
            for (a, b), d in word_coproduct(alg, w1).items():
                add_into(out, {(a, b, w2): d}, c, alg.cfg)
        else:
            for (a, b), d in word_coproduct(alg, w2).items():
                add_into(out, {(w1, a, b): d}, c, alg.cfg)
    return out


def _counit_sides(alg: AlgebraSpec, word: Word) -> tuple[Terms, Terms]:
    left: Terms = {}
    right: Terms = {}
    for (w1, w2), c in word_coproduct(alg, word).items():
        add_into(left, {w2: _word_counit(alg, w1)}, c, alg.cfg)
        add_into(right, {w1: _word_counit(alg, w2)}, c, alg.cfg)
    return (alg.system.normalize_terms(left),
            alg.system.normalize_terms(right))


def _convolution(alg: AlgebraSpec, word: Word, side: str) -> Terms:
    out: Terms = {}
    for (w1, w2), c in word_coproduct(alg, word).items():
        if side == "left":
            s = antipode(alg, {w1: 1}).terms
            for w, d in s.items():
                add_into(out, alg.system.multiply(w, w2), c * d, alg.cfg)
        else:
            s = antipode(alg, {w2: 1}).terms
            for w, d in s.items():
                add_into(out, alg.system.multiply(w1, w), c * d, alg.cfg)
    return out


def _fmt(alg: AlgebraSpec, terms: Mapping[Word, Scalar]) -> str:
    return str(NCPoly(terms, alg.cfg, alg.alphabet))


def _fmt_tensor(
    alg: AlgebraSpec,
    terms: Mapping[tuple[Word, ...], Scalar],
    left: tuple[str, ...] | None = None,
) -> str:
    rank = len(next(iter(terms))) if terms else 2
    alphabets = [alg.alphabet] * rank
    if left is not None:
        alphabets[0] = left
    return str(TensorElem(terms, alg.cfg, tuple(alphabets)))


def _word_text(alg: AlgebraSpec, word: Word) -> str:
    return str(NCPoly({word: 1}, alg.cfg, alg.alphabet))


def check_hopf_axioms(
    alg: AlgebraSpec,
    sample: int | Literal["full"],
    rng: np.random.Generator,
) -> list[Check]:
    """Verify the Hopf axioms on generators, relations and sampled words.

    Covers coassociativity, the counit, compatibility of ``Δ`` and ``ε``
    with the defining relations, multiplicativity on sampled pairs and,
    for ordinary specs, the antipode axiom.
    """
    _require_hopf(alg)
    cfg = alg.cfg
    system = alg.system
    base = {"algebra": alg.name}
    checks: list[Check] = []
    gens = [(a,) for a in range(len(alg.alphabet))]

    def first_failure(words, test) -> str:
        for word in words:
            detail = test(word)
            if detail:
                return f"{_word_text(alg, word)}: {detail}"
        return ""

    def coassoc(word: Word) -> str:
        delta = word_coproduct(alg, word)
        diff = add_into(_three_fold(alg, delta, "left"),
                        _three_fold(alg, delta, "right"), -1, cfg)
        return _fmt_tensor(alg, diff) if diff else ""

    def counit_axiom(word: Word) -> str:
        left, right = _counit_sides(alg, word)
        target = system.nf(word)
        if left != target or right != target:
            return (f"(ε⊗id)Δ = {_fmt(alg, left)}, "
                    f"(id⊗ε)Δ = {_fmt(alg, right)}")
        return ""

    words = sample_words(alg, sample, rng)
    for name, test, pool in (
        ("hopf/coassociativity", coassoc, gens + words),
        ("hopf/counit", counit_axiom, gens + words),
    ):
        detail = first_failure(pool, test)
        checks.append(make_check(name, name.split("/")[1], base,
                                 not detail, detail))

    bad = ""
    for rule in system.rules:
        lhs = word_coproduct(alg, rule.lhs)
        rhs = coproduct_terms(alg, rule.rhs.terms)
        diff = add_into(dict(lhs), rhs, -1, cfg)
        if diff:
            bad = (f"{_word_text(alg, rule.lhs)} -> {rule.rhs}: "
                   f"{_fmt_tensor(alg, diff)}")
            break
        if counit(alg, {rule.lhs: 1}) != counit(alg, rule.rhs):
            bad = f"counit of {_word_text(alg, rule.lhs)} -> {rule.rhs}"
            break
    checks.append(make_check("hopf/relations", "Δ and ε respect relations",
                             base, not bad, bad))

    n_pairs = len(words) if sample == "full" else sample
    pairs = [
        (words[int(i)], words[int(j)])
        for i, j in rng.integers(0, len(words), size=(n_pairs, 2))
    ]
    pairs = [(g1, g2) for g1 in gens for g2 in gens] + pairs
    bad = ""
    for w1, w2 in pairs:
        product = coproduct_terms(alg, system.multiply(w1, w2))
        expected = tensor_multiply(
            word_coproduct(alg, w1), word_coproduct(alg, w2),
            system.multiply, cfg,
            mode="braided" if alg.braided else "plain", yd=alg.yd,
        )
        diff = add_into(dict(product), expected, -1, cfg)
        if diff:
            bad = (f"{_word_text(alg, w1)} · {_word_text(alg, w2)}: "
                   f"{_fmt_tensor(alg, diff)}")
            break
    checks.append(make_check(
        "hopf/multiplicativity",
        "braided Δ(ab) = Δ(a)Δ(b)" if alg.braided
        else "Δ(ab) = Δ(a)Δ(b)",
        {**base, "pairs": len(pairs)}, not bad, bad,
    ))

    if not alg.braided:
        def antipode_axiom(word: Word) -> str:
            unit = {(): _word_counit(alg, word)} if _word_counit(
                alg, word) else {}
            for side in ("left", "right"):
                got = _convolution(alg, word, side)
                if got != unit:
                    return f"{side} convolution gives {_fmt(alg, got)}"
            return ""

        detail = first_failure(gens + words, antipode_axiom)
        checks.append(make_check("hopf/antipode",
                                 "m(S⊗id)Δ = ε = m(id⊗S)Δ",
                                 base, not detail, detail))
        bad = ""
        for rule in system.rules:
            lhs = antipode(alg, {rule.lhs: 1})
            diff = lhs - antipode(alg, rule.rhs.terms)
            if diff:
                bad = f"S({_word_text(alg, rule.lhs)} - {rule.rhs}) = {diff}"
                break
        checks.append(make_check("hopf/antipode-relations",
                                 "S is an anti-homomorphism", base,
                                 not bad, bad))
    return checks


def check_morphism(m: MorphismSpec, hopf: bool | None = None) -> Check:
    """Check that relations map to zero and, for Hopf maps, Δ and ε."""
    hopf = m.hopf if hopf is None else hopf
    source = m.source
    target = m.target
    params = {"map": m.name}
    for rule in source.system.rules:
        diff = apply_morphism(m, {rule.lhs: 1}) - apply_morphism(
            m, rule.rhs.terms
        )
        if diff:
            lhs = _word_text(source, rule.lhs)
            detail = f"{lhs} = {rule.rhs} maps to {diff} ≠ 0"
            return make_check(f"morphism/{m.name}", "relations preserved",
                              params, False, detail)
    if hopf:
        cfg = target.cfg
        for a, image in m.images.items():
            got = coproduct_terms(target, image.terms)
            want: TensorTerms = {}
            for (w1, w2), c in word_coproduct(source, (a,)).items():
                left = apply_morphism(m, {w1: 1}).terms
                right = apply_morphism(m, {w2: 1}).terms
                for l1, c1 in left.items():
                    for r1, c2 in right.items():
                        add_into(want, {(l1, r1): c1 * c2}, c, cfg)
            diff = add_into(dict(got), want, -1, cfg)
            name = source.alphabet[a]
            if diff:
                detail = f"Δ({name}) differs by {_fmt_tensor(target, diff)}"
                return make_check(f"morphism/{m.name}", "Hopf map", params,
                                  False, detail)
            if counit(target, image) != source.hopf.counit[a]:
                detail = f"ε({name}) not preserved"
                return make_check(f"morphism/{m.name}", "Hopf map", params,
                                  False, detail)
    ref = "Hopf map" if hopf else "relations preserved"
    return make_check(f"morphism/{m.name}", ref, params)


def check_printed_morphism(
    printed: MorphismSpec, corrected: MorphismSpec
) -> Check:
    """Check a displayed map; a failure becomes ``paper-discrepancy``.

    The detail carries the first relation the printed images break and
    the images of ``corrected`` that replace them.
    """
    check = check_morphism(printed)
    params = {"map": printed.name, "corrected": corrected.name}
    if check.status == "pass":
        return make_check(f"morphism/{printed.name}", "printed map", params)
    alpha = printed.source.alphabet
    changes = [
        f"{alpha[a]} -> {corrected.images[a]}"
        for a, image in printed.images.items()
        if image != corrected.images[a]
    ]
    detail = f"{check.detail}; corrected: {', '.join(changes)}"
    return make_check(f"morphism/{printed.name}", "printed map", params,
                      False, detail, flagged=True)


# closed formulas


def _instances(ident, alg: AlgebraSpec, bound: int):
    for values in ident.parameters(bound, alg):
        params = {"algebra": alg.name,
                  **dict(zip(ident.names, values, strict=True))}
        yield values, params


def verify_commutation_formulas(alg: AlgebraSpec, bound: int) -> list[Check]:
    """Compare closed commutation formulas with normal forms.

    Every formula registered for the algebra's family is instantiated for
    all parameter values up to ``bound``; one check per instance.
    """
    fam = family(alg)
    checks = []
    for ident in COMMUTATIONS:
        if fam not in ident.families or not ident.applies(alg):
            continue
        for values, params in _instances(ident, alg, bound):
            lhs, rhs = ident.build(alg, *values)
            diff = lhs - rhs
            detail = f"lhs - rhs = {diff}" if diff else ""
            checks.append(make_check(ident.id, ident.ref, params, not diff,
                                     detail, ident.flagged))
    return checks


def verify_coproduct_formulas(alg: AlgebraSpec, bound: int) -> list[Check]:
    """Compare closed coproduct and coaction formulas with computed ones."""
    fam = family(alg)
    checks = []
    for ident in COPRODUCTS:
        if fam not in ident.families or not ident.applies(alg):
            continue
        for values, params in _instances(ident, alg, bound):
            got, want = ident.build(alg, *values)
            if ident.kind == "coproduct":
                got = coproduct_terms(alg, got)
            diff = add_into(dict(got), want, -1, alg.cfg)
            detail = ""
            if diff:
                text = _fmt_tensor(alg, diff, ident.left_alphabet)
                detail = f"computed - stated = {text}"
            checks.append(make_check(ident.id, ident.ref, params, not diff,
                                     detail, ident.flagged))
    if fam == "Bhat" and alg.cfg.is_prime:
        checks.append(check_bosonized_vp(alg))
    return checks


def check_bosonized_vp(bhat: AlgebraSpec) -> Check:
    """Rebuild ``Δ(v^p)`` of the double from the braided data of ``B̂``.

    Each term ``b1 ⊗ b2`` of the braided coproduct contributes
    ``ζ^k b1 ⊗ b2'`` for ``δ(b2) = Σ ζ^k ⊗ b2'``; words are reversed
    because the double contains the opposite algebra.
    """
    # imported here: catalog.build_algebra is cached per field
    from .catalog import build_algebra

    cfg = bhat.cfg
    p = cfg.p
    dtilde = build_algebra("Dtilde", cfg)
    move = {a: dtilde.letter(n) for a, n in enumerate(bhat.alphabet)}
    zeta = dtilde.letter("zeta")

    def image(word: Word) -> Word:
        return tuple(move[a] for a in reversed(word))

    got: TensorTerms = {}
    vp = (bhat.letter("v"),) * p
    for (b1, b2), c in word_coproduct(bhat, vp).items():
        for k, part in bhat.yd.coaction(b2).items():
            left = dtilde.system.multiply((zeta,) * k, image(b1))
            for b3, d in part.items():
                right = dtilde.system.nf(image(b3))
                for w1, e1 in left.items():
                    for w2, e2 in right.items():
                        add_into(got, {(w1, w2): e1 * e2}, c * d, cfg)
    want = word_coproduct(dtilde, (dtilde.letter("v"),) * p)
    diff = add_into(dict(got), want, -1, cfg)
    detail = f"difference {_fmt_tensor(dtilde, diff)}" if diff else ""
    return make_check("coproduct/v^p-from-Bhat", "Δ(v^p) via bosonization",
                      {"algebra": bhat.name, "p": p}, not diff, detail)
