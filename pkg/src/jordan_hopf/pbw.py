"""Rewriting systems, normal forms and PBW bases of finitely presented
algebras."""

from __future__ import annotations

import re
import warnings
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .ncalg import NCPoly, Terms, Word, add_into, format_word
from .scalars import FieldCfg, Scalar

__all__ = [
    "Ambiguity",
    "GenSymbol",
    "MissingRuleError",
    "NotFiniteError",
    "PBWBasis",
    "RewriteRule",
    "RewriteSystem",
    "ambiguities",
    "check_confluence",
    "check_termination",
    "dump_presentation",
    "enumerate_basis",
    "load_presentation",
    "parse_poly",
]

Domain = Literal[
    "free", "nilpotent", "restricted", "grouplike", "grouplike-free"
]
_BOUNDED = ("nilpotent", "restricted", "grouplike")


class MissingRuleError(ValueError):
    """An out-of-order pair of letters has no rewriting rule."""


class NotFiniteError(ValueError):
    """A basis enumeration without bound hit an unbounded letter."""


@dataclass(frozen=True)
class GenSymbol:
    """Generator of a presentation.

    Attributes
    ----------
    name: str
        Letter used when parsing and printing.
    domain: str
        ``"free"``, ``"nilpotent"`` (``a^N = 0``), ``"restricted"``
        (``a^N`` rewrites to anything), ``"grouplike"`` (``a^N = 1``) or
        ``"grouplike-free"`` (invertible of infinite order).
    bound: int, optional
        The exponent ``N`` of a bounded letter.
    degree: int
        Weight of the letter in the algebra grading.
    codegree: int
        Group-like coaction degree, used for braidings.
    inverse: str, optional
        Name of the inverse letter of a ``grouplike-free`` generator.

    """

    name: str
    domain: Domain = "free"
    bound: int | None = None
    degree: int = 0
    codegree: int = 0
    inverse: str | None = None


@dataclass(frozen=True)
class RewriteRule:
    lhs: Word
    rhs: NCPoly


@dataclass(frozen=True)
class Ambiguity:
    label: str
    word: Word
    left: NCPoly
    right: NCPoly


@dataclass
class PBWBasis:
    words: list[Word]
    dims: dict[int, int] = field(default_factory=dict)

    def index(self) -> dict[Word, int]:
        return {w: i for i, w in enumerate(self.words)}


class RewriteSystem:
    """Terminating rewriting system with memoized normal forms.

    Rules are either pair rules ``b a -> rhs`` on two distinct letters or
    power rules ``a^N -> rhs``. A word is normal when every adjacent pair
    is in order without a rule and no run reaches its power bound.
    """

    def __init__(
        self,
        cfg: FieldCfg,
        gens: Sequence[GenSymbol],
        rules: Sequence[RewriteRule],
        name: str = "",
        step_budget: int = 10**7,
    ) -> None:
        self.cfg = cfg
        self.gens = tuple(gens)
        self.name = name
        self.step_budget = step_budget
        self.alphabet = tuple(g.name for g in self.gens)
        if len(set(self.alphabet)) != len(self.alphabet):
            errmsg = f"Duplicate generator names in {name!r}."
            raise ValueError(errmsg)
        self.rules = tuple(rules)
        self.pair_rules: dict[tuple[int, int], Terms] = {}
        self.power_rules: dict[int, tuple[int, Terms]] = {}
        for rule in self.rules:
            self._register(rule)
        self._validate_domains()
        self._insert_cache: dict[tuple[Word, int], Terms] = {}
        self._nf_cache: dict[Word, Terms] = {}
        self._steps = 0

    def __repr__(self) -> str:
        return f"RewriteSystem({self.name!r}, {self.cfg.label()})"

    def index(self, name: str) -> int:
        try:
            return self.alphabet.index(name)
        except ValueError:
            errmsg = f"Unknown letter {name!r} in {self.name!r}."
            raise KeyError(errmsg) from None

    def _register(self, rule: RewriteRule) -> None:
        lhs = tuple(rule.lhs)
        if rule.rhs.alphabet != self.alphabet:
            errmsg = f"Rule {lhs} is over a different alphabet."
            raise ValueError(errmsg)
        if len(lhs) < 2:
            errmsg = f"Rule left-hand sides need two letters, got {lhs}."
            raise ValueError(errmsg)
        rhs = dict(rule.rhs.terms)
        if len(set(lhs)) == 1:
            a = lhs[0]
            if a in self.power_rules:
                errmsg = f"Two power rules for {self.alphabet[a]!r}."
                raise ValueError(errmsg)
            self.power_rules[a] = (len(lhs), rhs)
        elif len(lhs) == 2:
            if lhs in self.pair_rules:
                errmsg = f"Two rules for {format_word(lhs, self.alphabet)}."
                raise ValueError(errmsg)
            self.pair_rules[lhs] = rhs
        else:
            errmsg = f"Unsupported rule shape {lhs}."
            raise ValueError(errmsg)

    def _validate_domains(self) -> None:
        for a, gen in enumerate(self.gens):
            rule = self.power_rules.get(a)
            if gen.domain in _BOUNDED:
                if rule is None or rule[0] != gen.bound:
                    errmsg = (
                        f"{gen.name!r} is {gen.domain} with bound "
                        f"{gen.bound} but has no matching power rule."
                    )
                    raise ValueError(errmsg)
                rhs = rule[1]
                if gen.domain == "nilpotent" and rhs:
                    errmsg = f"Nilpotent {gen.name!r} must rewrite to 0."
                    raise ValueError(errmsg)
                if gen.domain == "grouplike" and rhs != {(): 1}:
                    errmsg = f"Group-like {gen.name!r} must rewrite to 1."
                    raise ValueError(errmsg)
            elif rule is not None:
                errmsg = f"{gen.domain} letter {gen.name!r} has a power rule."
                raise ValueError(errmsg)
            if gen.domain == "grouplike-free" and (
                gen.inverse not in self.alphabet
            ):
                errmsg = f"{gen.name!r} needs an inverse letter."
                raise ValueError(errmsg)

    def bound(self, a: int) -> int | None:
        rule = self.power_rules.get(a)
        return rule[0] if rule else None

    # normal forms

    def _insert(self, u: Word, a: int) -> Terms:
        key = (u, a)
        hit = self._insert_cache.get(key)
        if hit is not None:
            return hit
        self._steps += 1
        if self._steps > self.step_budget:
            errmsg = (
                f"Rewriting in {self.name!r} exceeded "
                f"{self.step_budget} steps."
            )
            raise RuntimeError(errmsg)
        out = self._insert_uncached(u, a)
        self._insert_cache[key] = out
        return out

    def _insert_uncached(self, u: Word, a: int) -> Terms:
        if u:
            b = u[-1]
            rhs = self.pair_rules.get((b, a))
            if rhs is not None:
                return self._extend_word(u[:-1], rhs)
            if b > a:
                errmsg = (
                    f"No rule for {self.alphabet[b]} "
                    f"{self.alphabet[a]} in {self.name!r}."
                )
                raise MissingRuleError(errmsg)
        power = self.power_rules.get(a)
        if power is not None:
            n, rhs = power
            run = 0
            while run < len(u) and u[-1 - run] == a:
                run += 1
            if run + 1 == n:
                return self._extend_word(u[: len(u) - run], rhs)
        return {(*u, a): 1}

    def _extend(self, terms: Mapping[Word, Scalar], a: int) -> Terms:
        out: Terms = {}
        for u, c in terms.items():
            add_into(out, self._insert(u, a), c, self.cfg)
        return out

    def _extend_word(self, prefix: Word, rhs: Mapping[Word, Scalar]) -> Terms:
        out: Terms = {}
        for word, c in rhs.items():
            terms: Terms = {prefix: 1}
            for letter in word:
                terms = self._extend(terms, letter)
            add_into(out, terms, c, self.cfg)
        return out

    def nf(self, word: Word) -> Terms:
        """Normal form of a single word."""
        word = tuple(word)
        hit = self._nf_cache.get(word)
        if hit is not None:
            return hit
        terms: Terms = {(): 1}
        for letter in word:
            terms = self._extend(terms, letter)
        self._nf_cache[word] = terms
        return terms

    def multiply(self, w1: Word, w2: Word) -> Terms:
        terms = self.nf(w1)
        for letter in w2:
            terms = self._extend(terms, letter)
        return terms

    def normalize_terms(self, terms: Mapping[Word, Scalar]) -> Terms:
        out: Terms = {}
        for word, c in terms.items():
            add_into(out, self.nf(word), c, self.cfg)
        return out

    def normalize(self, poly: NCPoly) -> NCPoly:
        return NCPoly(self.normalize_terms(poly.terms), self.cfg,
                      self.alphabet)

    def poly(self, text: str) -> NCPoly:
        """Parse ``text`` over this alphabet and normalize it."""
        return self.normalize(parse_poly(text, self.alphabet, self.cfg))

    def is_normal(self, word: Word) -> bool:
        return self.nf(word) == {tuple(word): 1}

    def degree(self, word: Word) -> int:
        return sum(self.gens[a].degree for a in word)


def _key(word: Word) -> tuple[int, Word]:
    return (len(word), word)


def check_termination(system: RewriteSystem) -> list[str]:
    """Violations of the length-lexicographic order and missing rules."""
    out = []
    alpha = system.alphabet
    for rule in system.rules:
        for word in rule.rhs.terms:
            if _key(word) >= _key(tuple(rule.lhs)):
                out.append(
                    f"{format_word(word, alpha)} does not precede "
                    f"{format_word(rule.lhs, alpha)}"
                )
    for b in range(len(alpha)):
        for a in range(b):
            if (b, a) not in system.pair_rules:
                out.append(f"no rule for {alpha[b]} {alpha[a]}")
    return out


def _reduce_to(system: RewriteSystem, terms: Mapping[Word, Scalar]) -> NCPoly:
    return NCPoly(system.normalize_terms(terms), system.cfg, system.alphabet)


def _concat(*parts: Mapping[Word, Scalar], cfg: FieldCfg) -> Terms:
    out: Terms = {(): 1}
    for part in parts:
        nxt: Terms = {}
        for w1, a in out.items():
            for w2, b in part.items():
                add_into(nxt, {w1 + w2: b}, a, cfg)
        out = nxt
    return out


def ambiguities(system: RewriteSystem) -> list[Ambiguity]:
    """All overlap ambiguities with both one-step reducts normalized."""
    cfg = system.cfg
    name = system.alphabet
    out = []

    def add(label: str, word: Word, left: Terms, right: Terms) -> None:
        out.append(
            Ambiguity(label, word, _reduce_to(system, left),
                      _reduce_to(system, right))
        )

    for (c, b), r1 in system.pair_rules.items():
        for (b2, a), r2 in system.pair_rules.items():
            if b2 != b:
                continue
            add(
                f"{name[c]} · {name[b]} · {name[a]}",
                (c, b, a),
                _concat(r1, {(a,): 1}, cfg=cfg),
                _concat({(c,): 1}, r2, cfg=cfg),
            )
    for a, (n, rp) in system.power_rules.items():
        power = (a,) * (n - 1)
        for (c, b), r2 in system.pair_rules.items():
            if c == a:
                add(
                    f"{name[a]}^{n - 1} · {name[a]} · {name[b]}",
                    (*power, a, b),
                    _concat(rp, {(b,): 1}, cfg=cfg),
                    _concat({power: 1}, r2, cfg=cfg),
                )
            if b == a:
                add(
                    f"{name[c]} · {name[a]} · {name[a]}^{n - 1}",
                    (c, a, *power),
                    _concat(r2, {power: 1}, cfg=cfg),
                    _concat({(c,): 1}, rp, cfg=cfg),
                )
        for j in range(1, n):
            extra = (a,) * j
            add(
                f"{name[a]}^{n + j} overlap {j}",
                (a,) * (n + j),
                _concat(rp, {extra: 1}, cfg=cfg),
                _concat({extra: 1}, rp, cfg=cfg),
            )
    return out


def check_confluence(system: RewriteSystem) -> list[Ambiguity]:
    """Ambiguities whose two reducts have different normal forms."""
    return [amb for amb in ambiguities(system) if amb.left != amb.right]


def _letter_budget(system: RewriteSystem, a: int) -> int | None:
    n = system.bound(a)
    return None if n is None else n - 1


def enumerate_basis(
    system: RewriteSystem,
    up_to: int | Literal["all"] = "all",
    weight: Literal["length", "degree"] = "length",
) -> PBWBasis:
    """Enumerate the normal words, ordered by weight then lexicographically.

    Normal words are nondecreasing in letter order with bounded runs and
    no adjacent in-order pair carrying a rule.
    """
    n_letters = len(system.alphabet)
    caps = [_letter_budget(system, a) for a in range(n_letters)]
    if weight == "degree":
        weights = [g.degree for g in system.gens]
    else:
        weights = [1] * n_letters
    if up_to == "all":
        unbounded = [system.alphabet[a] for a, c in enumerate(caps)
                     if c is None]
        if unbounded:
            errmsg = (
                f"{system.name!r} is infinite-dimensional; unbounded "
                f"letters {unbounded}."
            )
            raise NotFiniteError(errmsg)
    else:
        for a, c in enumerate(caps):
            if c is None and weights[a] <= 0:
                errmsg = (
                    f"Letter {system.alphabet[a]!r} has non-positive "
                    f"weight and no bound."
                )
                raise NotFiniteError(errmsg)

    words: list[Word] = []

    def dfs(a: int, prefix: Word, last: int | None, total: int) -> None:
        if a == n_letters:
            words.append(prefix)
            return
        dfs(a + 1, prefix, last, total)
        if last is not None and (last, a) in system.pair_rules:
            return
        cap = caps[a]
        e = 1
        while cap is None or e <= cap:
            new_total = total + e * weights[a]
            if up_to != "all" and weights[a] > 0 and new_total > up_to:
                break
            dfs(a + 1, prefix + (a,) * e, a, new_total)
            e += 1

    dfs(0, (), None, 0)

    def w_of(word: Word) -> int:
        return sum(weights[a] for a in word)

    if up_to != "all":
        words = [w for w in words if w_of(w) <= up_to]
    words.sort(key=lambda w: (w_of(w), w))
    dims: dict[int, int] = {}
    for w in words:
        dims[w_of(w)] = dims.get(w_of(w), 0) + 1
    return PBWBasis(words, dims)


_TOKEN = re.compile(
    r"\s*(?:(?P<op>[+-])|(?P<num>\d+(?:/\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)(?:\^(?P<exp>\d+))?|(?P<star>\*))"
)


def parse_poly(
    text: str, alphabet: tuple[str, ...], cfg: FieldCfg
) -> NCPoly:
    """Parse expressions like ``x y - 1/2 x^2 + 3 g^2``."""
    terms: Terms = {}
    sign = 1
    coeff: Fraction = Fraction(1)
    word: list[int] = []
    seen = False
    pos = 0
    text = text.strip()

    def flush() -> None:
        add_into(terms, {tuple(word): cfg.reduce(sign * coeff)}, 1, cfg)

    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            errmsg = f"Cannot parse {text[pos:]!r}."
            raise ValueError(errmsg)
        pos = match.end()
        if match["op"]:
            if seen:
                flush()
            elif match["op"] == "-":
                sign = -sign
                continue
            sign = -1 if match["op"] == "-" else 1
            coeff, word, seen = Fraction(1), [], False
        elif match["num"]:
            coeff *= Fraction(match["num"])
            seen = True
        elif match["name"]:
            name = match["name"]
            if name not in alphabet:
                errmsg = f"Unknown letter {name!r}."
                raise KeyError(errmsg)
            exp = int(match["exp"]) if match["exp"] else 1
            word.extend([alphabet.index(name)] * exp)
            seen = True
    if seen:
        flush()
    return NCPoly(terms, cfg, alphabet)


def _gen_line(gen: GenSymbol) -> str:
    parts = [f"gen {gen.name}"]
    parts.append(
        gen.domain if gen.bound is None else f"{gen.domain}={gen.bound}"
    )
    if gen.degree:
        parts.append(f"degree={gen.degree}")
    if gen.codegree:
        parts.append(f"codegree={gen.codegree}")
    if gen.inverse:
        parts.append(f"inverse={gen.inverse}")
    return " ".join(parts)


def dump_presentation(system: RewriteSystem) -> str:
    lines = [f"name {system.name}"]
    lines.append(
        f"field p={system.cfg.p}" if system.cfg.is_prime
        else "field rational"
    )
    lines.extend(_gen_line(g) for g in system.gens)
    lines.append("order " + " ".join(system.alphabet))
    for rule in system.rules:
        lhs = format_word(rule.lhs, system.alphabet)
        lines.append(f"rule {lhs} -> {rule.rhs}")
    return "\n".join(lines) + "\n"


def _iter_lines(text: str) -> Iterator[list[str]]:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line.split(None, 1)


def load_presentation(text: str) -> RewriteSystem:
    """Inverse of :func:`dump_presentation`."""
    name = ""
    cfg: FieldCfg | None = None
    gens: list[GenSymbol] = []
    order: list[str] | None = None
    raw_rules: list[tuple[str, str]] = []
    for key, *rest in _iter_lines(text):
        body = rest[0] if rest else ""
        if key == "name":
            name = body
        elif key == "field":
            if body == "rational":
                cfg = FieldCfg.rational()
            elif body.startswith("p="):
                cfg = FieldCfg.prime(int(body[2:]))
            else:
                errmsg = f"Bad field line {body!r}."
                raise ValueError(errmsg)
        elif key == "gen":
            gens.append(_parse_gen(body))
        elif key == "order":
            order = body.split()
        elif key == "rule":
            lhs, sep, rhs = body.partition("->")
            if not sep:
                errmsg = f"Rule without '->': {body!r}."
                raise ValueError(errmsg)
            raw_rules.append((lhs.strip(), rhs.strip()))
        else:
            errmsg = f"Unknown presentation keyword {key!r}."
            raise ValueError(errmsg)
    if cfg is None:
        errmsg = "Presentation has no field line."
        raise ValueError(errmsg)
    alphabet = tuple(g.name for g in gens)
    if order is not None and tuple(order) != alphabet:
        errmsg = "The order line disagrees with the generator list."
        raise ValueError(errmsg)
    rules = []
    for lhs, rhs in raw_rules:
        lhs_poly = parse_poly(lhs, alphabet, cfg)
        if list(lhs_poly.terms.values()) != [1]:
            errmsg = f"Left-hand side {lhs!r} is not a word."
            raise ValueError(errmsg)
        (word,) = lhs_poly.terms
        rules.append(RewriteRule(word, parse_poly(rhs, alphabet, cfg)))
    system = RewriteSystem(cfg, gens, rules, name=name)
    violations = check_termination(system)
    if violations:
        wrnmsg = (
            f"Presentation {name!r} may not terminate: "
            f"{'; '.join(violations[:3])}"
        )
        warnings.warn(wrnmsg, UserWarning, stacklevel=2)
    return system


def _parse_gen(body: str) -> GenSymbol:
    name, domain_field, *options = body.split()
    domain, _, bound = domain_field.partition("=")
    kwargs: dict[str, int | str] = {}
    for option in options:
        key, _, value = option.partition("=")
        if key in ("degree", "codegree"):
            kwargs[key] = int(value)
        elif key == "inverse":
            kwargs[key] = value
        else:
            errmsg = f"Unknown generator option {key!r}."
            raise ValueError(errmsg)
    return GenSymbol(
        name, domain, int(bound) if bound else None, **kwargs
    )
