"""Skew-pairing between the two halves of the double and its twist."""

from __future__ import annotations

from collections.abc import Mapping
from typing import TYPE_CHECKING, Literal

from .catalog import AlgebraSpec, build_algebra
from .hopfstr import antipode, counit, word_coproduct
from .ncalg import NCPoly, Terms, Word, add_into
from .report import Check, make_check

if TYPE_CHECKING:
    import numpy as np

    from .scalars import FieldCfg, Scalar

__all__ = [
    "PairingOracle",
    "check_pairing_axioms",
    "pairing_eval",
    "twisted_cross_relation",
    "verify_twisted_relations",
]

Order = Literal["h-first", "k-first"]

# τ(h, k) on generators; every other letter pair pairs to zero
_TABLE = {
    ("y", "u"): 1,
    ("x", "v"): 1,
    ("g", "zeta"): 1,
    ("ginv", "zeta"): -1,
}


class PairingOracle:
    """Evaluate the skew-pairing ``τ`` between ``H̃`` and ``K̃``.

    Monomials are reduced to the generator table with
    ``τ(h h', k) = Σ τ(h, k₁) τ(h', k₂)`` and
    ``τ(h, k' k) = Σ τ(h₁, k) τ(h₂, k')``.
    """

    def __init__(self, cfg: FieldCfg) -> None:
        self.cfg = cfg
        self.source = build_algebra("Htilde", cfg)
        self.target = build_algebra("Ktilde", cfg)
        self.table: dict[tuple[int, int], Scalar] = {}
        for h in self.source.alphabet:
            for k in self.target.alphabet:
                value = cfg.reduce(_TABLE.get((h, k), 0))
                self.table[self.source.letter(h), self.target.letter(k)] = (
                    value
                )
        self.memo: dict[tuple[Order, Word, Word], Scalar] = {}

    def word_value(self, h: Word, k: Word, order: Order = "h-first"
                   ) -> Scalar:
        key = (order, h, k)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        cfg = self.cfg
        if not h:
            value = counit(self.target, {k: 1})
        elif not k:
            value = counit(self.source, {h: 1})
        elif len(h) == 1 and len(k) == 1:
            value = self.table[h[0], k[0]]
        elif len(h) > 1 and (order == "h-first" or len(k) == 1):
            value = 0
            for (k1, k2), c in word_coproduct(self.target, k).items():
                first = self.word_value(h[:1], k1, order)
                if first:
                    second = self.word_value(h[1:], k2, order)
                    value = cfg.add(value, c * first * second)
        else:
            value = 0
            for (h1, h2), c in word_coproduct(self.source, h).items():
                first = self.word_value(h1, k[1:], order)
                if first:
                    second = self.word_value(h2, k[:1], order)
                    value = cfg.add(value, c * first * second)
        value = cfg.reduce(value)
        self.memo[key] = value
        return value

    def inverse_value(self, h: Word, k: Word) -> Scalar:
        """``τ⁻¹(h, k) = τ(S(h), k)``."""
        return pairing_eval(self, antipode(self.source, {h: 1}).terms,
                            {k: 1})


def pairing_eval(
    tau: PairingOracle,
    h: NCPoly | Mapping[Word, Scalar],
    k: NCPoly | Mapping[Word, Scalar],
    order: Order = "h-first",
) -> Scalar:
    """Bilinear extension of the pairing to arbitrary elements."""
    h_terms = tau.source.system.normalize_terms(
        h.terms if isinstance(h, NCPoly) else h
    )
    k_terms = tau.target.system.normalize_terms(
        k.terms if isinstance(k, NCPoly) else k
    )
    cfg = tau.cfg
    out: Scalar = 0
    for hw, a in h_terms.items():
        for kw, b in k_terms.items():
            out = cfg.add(out, a * b * tau.word_value(hw, kw, order))
    return cfg.reduce(out)


def _words(alg: AlgebraSpec, rng: np.random.Generator, n: int,
           max_length: int) -> list[Word]:
    letters = len(alg.alphabet)
    out = []
    for _ in range(n):
        length = int(rng.integers(0, max_length + 1))
        word = tuple(int(a) for a in rng.integers(0, letters, size=length))
        out.append(word)
    return out


def check_pairing_axioms(
    tau: PairingOracle, rng: np.random.Generator, samples: int = 50
) -> list[Check]:
    """Check the generator table, both peeling orders and both axioms.

    Random words are drawn in the free algebras and normalized, so the
    axioms are also tested on the defining relations.
    """
    cfg = tau.cfg
    h_alg, k_alg = tau.source, tau.target
    checks = []

    bad = [
        f"τ({h}, {k})"
        for (h, k), want in _TABLE.items()
        if tau.word_value((h_alg.letter(h),), (k_alg.letter(k),))
        != cfg.reduce(want)
    ]
    checks.append(make_check("pairing/table", "generator values",
                             {"p": cfg.p}, not bad, ", ".join(bad)))

    hs = _words(h_alg, rng, 3 * samples, 3)
    ks = _words(k_alg, rng, 3 * samples, 3)
    triples = list(zip(hs[::3], hs[1::3], ks[::3], strict=True))

    detail = ""
    for h, h2, k in triples:
        h_norm = h_alg.system.nf(h + h2)
        k_norm = k_alg.system.nf(k)
        first = pairing_eval(tau, h_norm, k_norm, "h-first")
        second = pairing_eval(tau, h_norm, k_norm, "k-first")
        if first != second:
            detail = (f"τ({h_alg.elem(h_norm)}, {k_alg.elem(k_norm)}): "
                      f"{first} vs {second}")
            break
    checks.append(make_check("pairing/order", "peeling orders agree",
                             {"p": cfg.p, "samples": samples}, not detail,
                             detail))

    detail = ""
    for h, h2, k in triples:
        lhs = pairing_eval(tau, {h + h2: 1}, {k: 1})
        rhs: Scalar = 0
        for (k1, k2), c in _coproduct_items(k_alg, k):
            rhs = cfg.add(rhs, c * pairing_eval(tau, {h: 1}, {k1: 1})
                          * pairing_eval(tau, {h2: 1}, {k2: 1}))
        if lhs != cfg.reduce(rhs):
            detail = f"h={h}, h'={h2}, k={k}: {lhs} vs {rhs}"
            break
    checks.append(make_check("pairing/multiplicative-left",
                             "τ(hh', k) = τ(h, k₁)τ(h', k₂)",
                             {"p": cfg.p, "samples": samples}, not detail,
                             detail))

    detail = ""
    for (h, k2, k) in zip(hs[2::3], ks[1::3], ks[2::3], strict=True):
        lhs = pairing_eval(tau, {h: 1}, {k2 + k: 1})
        rhs = 0
        for (h1, h2), c in _coproduct_items(h_alg, h):
            rhs = cfg.add(rhs, c * pairing_eval(tau, {h1: 1}, {k: 1})
                          * pairing_eval(tau, {h2: 1}, {k2: 1}))
        if lhs != cfg.reduce(rhs):
            detail = f"h={h}, k'={k2}, k={k}: {lhs} vs {rhs}"
            break
    checks.append(make_check("pairing/multiplicative-right",
                             "τ(h, k'k) = τ(h₁, k)τ(h₂, k')",
                             {"p": cfg.p, "samples": samples}, not detail,
                             detail))
    return checks


def _coproduct_items(alg: AlgebraSpec, word: Word):
    """Coproduct of the normal form of an arbitrary word."""
    out: dict[tuple[Word, Word], Scalar] = {}
    for w, c in alg.system.nf(word).items():
        add_into(out, word_coproduct(alg, w), c, alg.cfg)
    return out.items()


def _three_fold(
    alg: AlgebraSpec, letter: int
) -> dict[tuple[Word, Word, Word], Scalar]:
    out: dict[tuple[Word, Word, Word], Scalar] = {}
    for (a, b), c in word_coproduct(alg, (letter,)).items():
        for (b1, b2), d in word_coproduct(alg, b).items():
            add_into(out, {(a, b1, b2): 1}, c * d, alg.cfg)
    return out


def twisted_cross_relation(tau: PairingOracle, k: str, h: str) -> NCPoly:
    """The product ``k · h`` in the cocycle twist, as an element of ``D̃``.

    Computed as ``Σ τ(h₁, k₁) τ⁻¹(h₃, k₃) h₂ k₂`` with the legs of
    ``h₂ k₂`` concatenated in the normal order of ``D̃``.
    """
    cfg = tau.cfg
    h_alg, k_alg = tau.source, tau.target
    dtilde = build_algebra("Dtilde", cfg)
    h_move = [dtilde.letter(n) for n in h_alg.alphabet]
    k_move = [dtilde.letter(n) for n in k_alg.alphabet]
    out: Terms = {}
    h_terms = _three_fold(h_alg, h_alg.letter(h))
    k_terms = _three_fold(k_alg, k_alg.letter(k))
    for (h1, h2, h3), a in h_terms.items():
        for (k1, k2, k3), b in k_terms.items():
            left = tau.word_value(h1, k1)
            if not left:
                continue
            right = tau.inverse_value(h3, k3)
            if not right:
                continue
            word = tuple(h_move[i] for i in h2) + tuple(k_move[i] for i in k2)
            add_into(out, dtilde.system.nf(word), a * b * left * right, cfg)
    return NCPoly(out, cfg, dtilde.alphabet)


def verify_twisted_relations(tau: PairingOracle) -> list[Check]:
    """Compare every twisted product ``k · h`` with the presented ``D̃``."""
    dtilde = build_algebra("Dtilde", tau.cfg)
    checks = []
    for k in tau.target.alphabet:
        for h in tau.source.alphabet:
            got = twisted_cross_relation(tau, k, h)
            want = dtilde.elem({(dtilde.letter(k), dtilde.letter(h)): 1})
            diff = got - want
            detail = f"{k}·{h} = {got}, presented {want}" if diff else ""
            checks.append(make_check(f"pairing/twist/{k}*{h}",
                                     f"{k}{h} from the cocycle twist",
                                     {"p": tau.cfg.p}, not diff, detail))
    return checks
