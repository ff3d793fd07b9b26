"""Noncommutative polynomials, tensors and Yetter-Drinfeld braidings."""

from __future__ import annotations

from collections.abc import Callable, Mapping
from fractions import Fraction
from typing import Literal

from .scalars import FieldCfg, Scalar

__all__ = [
    "GroupLikeYD",
    "NCPoly",
    "PrimitiveYD",
    "TensorElem",
    "Terms",
    "Word",
    "add_into",
    "format_terms",
    "format_word",
    "poly_arith",
    "tensor_multiply",
]

Word = tuple[int, ...]
Terms = dict[Word, Scalar]
Multiply = Callable[[Word, Word], Terms]


def add_into(
    acc: dict, terms: Mapping, scale: Scalar, cfg: FieldCfg
) -> dict:
    """Add ``scale * terms`` to ``acc`` in place, dropping zeros."""
    if not scale:
        return acc
    for key, c in terms.items():
        value = cfg.reduce(acc.get(key, 0) + scale * c)
        if value:
            acc[key] = value
        else:
            acc.pop(key, None)
    return acc


def format_word(word: Word, alphabet: tuple[str, ...]) -> str:
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = alphabet[word[i]]
        parts.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return " ".join(parts)


def _format_coeff(c: Scalar, cfg: FieldCfg) -> str:
    text = cfg.fmt(c)
    if isinstance(c, Fraction) and c.denominator != 1:
        text = f"{c.numerator}/{c.denominator}"
    return text


def format_terms(
    terms: Mapping[Word, Scalar], cfg: FieldCfg, alphabet: tuple[str, ...]
) -> str:
    """Render terms ordered by length, then lexicographically."""
    if not terms:
        return "0"
    out = []
    for word in sorted(terms, key=lambda w: (len(w), w)):
        coeff = _format_coeff(terms[word], cfg)
        body = format_word(word, alphabet)
        negative = coeff.startswith("-")
        magnitude = coeff.lstrip("-")
        if not word:
            text = magnitude
        elif magnitude == "1":
            text = body
        else:
            text = f"{magnitude} {body}"
        if not out:
            out.append(f"-{text}" if negative else text)
        else:
            out.append(f"- {text}" if negative else f"+ {text}")
    return " ".join(out)


class NCPoly:
    """Finite linear combination of words over a fixed alphabet."""

    __slots__ = ("alphabet", "cfg", "terms")

    def __init__(
        self,
        terms: Mapping[Word, Scalar],
        cfg: FieldCfg,
        alphabet: tuple[str, ...],
    ) -> None:
        self.cfg = cfg
        self.alphabet = tuple(alphabet)
        self.terms: Terms = {}
        for word, c in terms.items():
            value = cfg.reduce(c)
            if value:
                self.terms[tuple(word)] = value

    @classmethod
    def zero(cls, cfg: FieldCfg, alphabet: tuple[str, ...]) -> NCPoly:
        return cls({}, cfg, alphabet)

    @classmethod
    def one(cls, cfg: FieldCfg, alphabet: tuple[str, ...]) -> NCPoly:
        return cls({(): 1}, cfg, alphabet)

    @classmethod
    def word(
        cls,
        word: Word,
        cfg: FieldCfg,
        alphabet: tuple[str, ...],
        coeff: Scalar = 1,
    ) -> NCPoly:
        return cls({tuple(word): coeff}, cfg, alphabet)

    @classmethod
    def letter(
        cls, name: str, cfg: FieldCfg, alphabet: tuple[str, ...]
    ) -> NCPoly:
        if name not in alphabet:
            errmsg = f"Unknown letter {name!r}."
            raise KeyError(errmsg)
        return cls({(alphabet.index(name),): 1}, cfg, alphabet)

    def _check(self, other: NCPoly) -> None:
        if self.alphabet != other.alphabet or self.cfg != other.cfg:
            errmsg = "Polynomials over different alphabets or fields."
            raise ValueError(errmsg)

    def __add__(self, other: NCPoly) -> NCPoly:
        self._check(other)
        terms = add_into(dict(self.terms), other.terms, 1, self.cfg)
        return NCPoly(terms, self.cfg, self.alphabet)

    def __sub__(self, other: NCPoly) -> NCPoly:
        self._check(other)
        terms = add_into(dict(self.terms), other.terms, -1, self.cfg)
        return NCPoly(terms, self.cfg, self.alphabet)

    def __neg__(self) -> NCPoly:
        return self.scale(-1)

    def scale(self, c: Scalar) -> NCPoly:
        terms = {w: self.cfg.mul(a, c) for w, a in self.terms.items()}
        return NCPoly(terms, self.cfg, self.alphabet)

    def __mul__(self, other: NCPoly | int | Fraction) -> NCPoly:
        if isinstance(other, int | Fraction):
            return self.scale(other)
        self._check(other)
        terms: Terms = {}
        for w1, a in self.terms.items():
            for w2, b in other.terms.items():
                add_into(terms, {w1 + w2: b}, a, self.cfg)
        return NCPoly(terms, self.cfg, self.alphabet)

    def __rmul__(self, other: int | Fraction) -> NCPoly:
        return self.scale(other)

    def __pow__(self, n: int) -> NCPoly:
        out = NCPoly.one(self.cfg, self.alphabet)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCPoly):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.cfg == other.cfg
            and self.terms == other.terms
        )

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return format_terms(self.terms, self.cfg, self.alphabet)

    def __repr__(self) -> str:
        return f"NCPoly({self})"

    def coefficient(self, word: Word) -> Scalar:
        return self.terms.get(tuple(word), 0)

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)


def poly_arith(
    op: Literal["add", "scale", "concat"],
    a: NCPoly,
    b: NCPoly | Scalar,
) -> NCPoly:
    """Free-algebra arithmetic without any rewriting."""
    if op == "add":
        return a + b
    if op == "scale":
        return a.scale(b)
    if op == "concat":
        return a * b
    errmsg = f"Unknown operation {op!r}."
    raise ValueError(errmsg)


class TensorElem:
    """Element of a two- or three-fold tensor power, keyed by word tuples."""

    __slots__ = ("alphabets", "cfg", "terms")

    def __init__(
        self,
        terms: Mapping[tuple[Word, ...], Scalar],
        cfg: FieldCfg,
        alphabets: tuple[tuple[str, ...], ...],
    ) -> None:
        if len(alphabets) not in (2, 3):
            errmsg = f"Tensor rank must be 2 or 3, got {len(alphabets)}."
            raise ValueError(errmsg)
        self.cfg = cfg
        self.alphabets = alphabets
        self.terms: dict[tuple[Word, ...], Scalar] = {}
        add_into(self.terms, terms, 1, cfg)

    @property
    def rank(self) -> int:
        return len(self.alphabets)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElem):
            return NotImplemented
        return self.terms == other.terms and self.cfg == other.cfg

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __sub__(self, other: TensorElem) -> TensorElem:
        terms = add_into(dict(self.terms), other.terms, -1, self.cfg)
        return TensorElem(terms, self.cfg, self.alphabets)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(
            self.terms, key=lambda k: tuple((len(w), w) for w in k)
        ):
            legs = " ⊗ ".join(
                format_word(w, a)
                for w, a in zip(key, self.alphabets, strict=True)
            )
            c = _format_coeff(self.terms[key], self.cfg)
            parts.append(legs if c == "1" else f"({c}) {legs}")
        return " + ".join(parts)

    __repr__ = __str__


class GroupLikeYD:
    """Yetter-Drinfeld structure over a cyclic group generated by ``g``.

    Letters are homogeneous for the coaction, ``g`` acts by an algebra
    automorphism. The braiding is ``c(b ⊗ c) = (g^m ⇀ c) ⊗ b`` where
    ``m`` is the codegree of ``b``.
    """

    def __init__(
        self,
        images: Mapping[int, Terms],
        codegrees: Mapping[int, int],
        mul: Multiply,
        cfg: FieldCfg,
        order: int | None = None,
    ) -> None:
        self.images = {a: dict(t) for a, t in images.items()}
        self.codegrees = dict(codegrees)
        self.mul = mul
        self.cfg = cfg
        self.order = order
        self._word_cache: dict[tuple[Word, int], Terms] = {}

    def _exponent(self, m: int) -> int:
        if self.order is not None:
            return m % self.order
        if m < 0:
            errmsg = "Negative powers need a finite group order."
            raise ValueError(errmsg)
        return m

    def codegree(self, word: Word) -> int:
        return sum(self.codegrees[a] for a in word)

    def act(self, word: Word, m: int = 1) -> Terms:
        """Return ``g^m ⇀ word`` as normalized terms."""
        m = self._exponent(m)
        if m == 0 or not word:
            return {tuple(word): 1}
        key = (tuple(word), m)
        if key in self._word_cache:
            return self._word_cache[key]
        if len(word) == 1:
            if m == 1:
                out = dict(self.images[word[0]])
            else:
                out = self.act_terms(self.act(word, m - 1), 1)
        else:
            out = _product(
                self.act(word[:-1], m), self.act(word[-1:], m),
                self.mul, self.cfg,
            )
        self._word_cache[key] = out
        return out

    def act_terms(self, terms: Mapping[Word, Scalar], m: int = 1) -> Terms:
        out: Terms = {}
        for word, c in terms.items():
            add_into(out, self.act(word, m), c, self.cfg)
        return out

    def braid(self, b: Word, c: Word) -> dict[tuple[Word, Word], Scalar]:
        return {
            (w, tuple(b)): coeff
            for w, coeff in self.act(c, self.codegree(b)).items()
        }


class PrimitiveYD:
    """Yetter-Drinfeld structure over the polynomial algebra in ``ζ``.

    ``ζ`` acts by a derivation and the coaction is an algebra map into
    the tensor product with the commutative base. The braiding is
    ``c(b ⊗ c) = Σ_k (ζ^k ⇀ c) ⊗ b_k`` for
    ``δ(b) = Σ_k ζ^k ⊗ b_k``.
    """

    def __init__(
        self,
        action: Mapping[int, Terms],
        coaction: Mapping[int, Mapping[int, Terms]],
        mul: Multiply,
        cfg: FieldCfg,
    ) -> None:
        self.action = {a: dict(t) for a, t in action.items()}
        self.coaction_images = {
            a: {k: dict(t) for k, t in parts.items()}
            for a, parts in coaction.items()
        }
        self.mul = mul
        self.cfg = cfg
        self._act_cache: dict[tuple[Word, int], Terms] = {}
        self._coact_cache: dict[Word, dict[int, Terms]] = {}

    def act(self, word: Word, k: int = 1) -> Terms:
        """Return ``ζ^k ⇀ word``."""
        word = tuple(word)
        if k == 0:
            return {word: 1}
        key = (word, k)
        if key in self._act_cache:
            return self._act_cache[key]
        if k > 1:
            out = self.act_terms(self.act(word, k - 1), 1)
        elif not word:
            out = {}
        else:
            # Leibniz rule
            out = _product(
                self.act(word[:-1], 1), {word[-1:]: 1}, self.mul, self.cfg
            )
            add_into(
                out,
                _product({word[:-1]: 1}, self.action[word[-1]],
                         self.mul, self.cfg),
                1, self.cfg,
            )
        self._act_cache[key] = out
        return out

    def act_terms(self, terms: Mapping[Word, Scalar], k: int = 1) -> Terms:
        out: Terms = {}
        for word, c in terms.items():
            add_into(out, self.act(word, k), c, self.cfg)
        return out

    def coaction(self, word: Word) -> dict[int, Terms]:
        """Return ``δ(word)`` as a map from ``ζ``-exponent to terms."""
        word = tuple(word)
        if word in self._coact_cache:
            return self._coact_cache[word]
        if not word:
            out = {0: {(): 1}}
        else:
            head = self.coaction(word[:-1])
            tail = self.coaction_images[word[-1]]
            out: dict[int, Terms] = {}
            for i, left in head.items():
                for j, right in tail.items():
                    add_into(
                        out.setdefault(i + j, {}),
                        _product(left, right, self.mul, self.cfg),
                        1, self.cfg,
                    )
            out = {k: t for k, t in out.items() if t}
        self._coact_cache[word] = out
        return out

    def braid(self, b: Word, c: Word) -> dict[tuple[Word, Word], Scalar]:
        out: dict[tuple[Word, Word], Scalar] = {}
        for k, parts in self.coaction(b).items():
            moved = self.act(c, k)
            for bk, coeff in parts.items():
                for w, a in moved.items():
                    add_into(out, {(w, bk): a}, coeff, self.cfg)
        return out


def _product(
    left: Mapping[Word, Scalar],
    right: Mapping[Word, Scalar],
    mul: Multiply,
    cfg: FieldCfg,
) -> Terms:
    out: Terms = {}
    for w1, a in left.items():
        for w2, b in right.items():
            add_into(out, mul(w1, w2), cfg.mul(a, b), cfg)
    return out


def tensor_multiply(
    a: Mapping[tuple[Word, Word], Scalar],
    b: Mapping[tuple[Word, Word], Scalar],
    mul: Multiply,
    cfg: FieldCfg,
    mode: Literal["plain", "braided"] = "plain",
    yd: GroupLikeYD | PrimitiveYD | None = None,
) -> dict[tuple[Word, Word], Scalar]:
    """Multiply two rank-2 tensors.

    In braided mode ``(a1 ⊗ a2)(b1 ⊗ b2) = Σ a1 c' ⊗ b' b2`` where
    ``c(a2 ⊗ b1) = Σ c' ⊗ b'``.
    """
    if mode == "braided" and yd is None:
        errmsg = "Braided multiplication needs Yetter-Drinfeld data."
        raise ValueError(errmsg)
    out: dict[tuple[Word, Word], Scalar] = {}
    for (a1, a2), ca in a.items():
        for (b1, b2), cb in b.items():
            scale = cfg.mul(ca, cb)
            if mode == "plain":
                swapped = {(b1, a2): 1}
            else:
                swapped = yd.braid(a2, b1)
            for (c1, c2), cc in swapped.items():
                left = mul(a1, c1)
                right = mul(c2, b2)
                coeff = cfg.mul(scale, cc)
                for w1, x in left.items():
                    for w2, y in right.items():
                        add_into(out, {(w1, w2): x * y}, coeff, cfg)
    return out
