"""Exact sparse polynomial arithmetic over the coefficient symbols.

A monomial is a sorted tuple of (CoeffSymbol, positive exponent) pairs; a
polynomial maps monomials to nonzero Fractions.  Everything is exact: no
floats ever enter, and every operation returns a canonical form (no zero
coefficients, no zero exponents).  Values are immutable after construction
and safe to share between threads.

Term order is graded lexicographic over the fixed symbol order, which makes
the exact-division loop below a genuine multivariate long division (the
leading monomial strictly decreases, and an exact quotient is found whenever
one exists).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple

from .errors import DivisionByZero, NotDivisible, UnassignedSymbol
from .symbols import CoeffSymbol, parse_symbol

# Monomial: ((symbol, exponent), ...) sorted by symbol key, exponents > 0.
Monomial = Tuple[Tuple[CoeffSymbol, int], ...]

MONO_ONE: Monomial = ()


def mono_make(pairs: Mapping[CoeffSymbol, int]) -> Monomial:
    items = [(s, e) for s, e in pairs.items() if e != 0]
    for s, e in items:
        if e < 0:
            raise ValueError(f"negative exponent on {s}")
    items.sort(key=lambda se: se[0].key())
    return tuple(items)


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    acc = dict(m1)
    for s, e in m2:
        acc[s] = acc.get(s, 0) + e
    return tuple(sorted(acc.items(), key=lambda se: se[0].key()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_divides(m1: Monomial, m2: Monomial) -> bool:
    """True when m1 divides m2 componentwise."""
    d2 = dict(m2)
    return all(d2.get(s, 0) >= e for s, e in m1)


def mono_div(m2: Monomial, m1: Monomial) -> Monomial:
    """m2 / m1; caller guarantees divisibility."""
    acc = dict(m2)
    for s, e in m1:
        acc[s] -= e
    return tuple(sorted(((s, e) for s, e in acc.items() if e),
                        key=lambda se: se[0].key()))


def mono_cmp(m1: Monomial, m2: Monomial) -> int:
    """Graded lex: degree first, then exponents along the symbol order.

    Within one degree the monomial with the larger exponent on the earliest
    differing symbol is the larger one.  This is a proper monomial order
    (multiplicative and a well-order), which exact division relies on.
    """
    d1, d2 = mono_degree(m1), mono_degree(m2)
    if d1 != d2:
        return -1 if d1 < d2 else 1
    i = j = 0
    while i < len(m1) and j < len(m2):
        s1, e1 = m1[i]
        s2, e2 = m2[j]
        k1, k2 = s1.key(), s2.key()
        if k1 == k2:
            if e1 != e2:
                return 1 if e1 > e2 else -1
            i += 1
            j += 1
        elif k1 < k2:
            # m1 has positive exponent on an earlier symbol that m2 lacks.
            return 1
        else:
            return -1
    if i < len(m1):
        return 1
    if j < len(m2):
        return -1
    return 0


def mono_render(m: Monomial) -> str:
    parts = []
    for s, e in m:
        parts.append(s.render() if e == 1 else f"{s.render()}^{e}")
    return "*".join(parts)


def _leading(terms: Dict[Monomial, Fraction]) -> Monomial:
    it = iter(terms)
    best = next(it)
    for m in it:
        if mono_cmp(m, best) > 0:
            best = m
    return best


class SymPoly:
    """Sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Dict[Monomial, Fraction] | None = None):
        self._terms = {m: c for m, c in (terms or {}).items() if c != 0}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "SymPoly":
        return SymPoly()

    @staticmethod
    def one() -> "SymPoly":
        return SymPoly({MONO_ONE: Fraction(1)})

    @staticmethod
    def const(value) -> "SymPoly":
        return SymPoly({MONO_ONE: Fraction(value)})

    @staticmethod
    def symbol(sym: CoeffSymbol, coeff=1) -> "SymPoly":
        return SymPoly({((sym, 1),): Fraction(coeff)})

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def total_degree(self) -> int:
        if not self._terms:
            return 0
        return max(mono_degree(m) for m in self._terms)

    def symbols(self) -> set:
        out = set()
        for m in self._terms:
            for s, _ in m:
                out.add(s)
        return out

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; raises if symbols remain."""
        if not self._terms:
            return Fraction(0)
        if set(self._terms) != {MONO_ONE}:
            raise ValueError("polynomial is not constant")
        return self._terms[MONO_ONE]

    # -- ring operations ------------------------------------------------

    def __add__(self, other) -> "SymPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, Fraction(0)) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return SymPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "SymPoly":
        return SymPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "SymPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "SymPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "SymPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                v = out.get(m, Fraction(0)) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return SymPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "SymPoly":
        if n < 0:
            raise ValueError("negative power")
        result = SymPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- evaluation and substitution -------------------------------------

    def evaluate(self, assignment: "Specialization | Mapping[CoeffSymbol, Fraction]") -> Fraction:
        """Exact value under a total assignment of the polynomial's symbols."""
        get = assignment.value_of if isinstance(assignment, Specialization) else None
        total = Fraction(0)
        for m, c in self._terms.items():
            v = c
            for s, e in m:
                if get is not None:
                    x = get(s)
                else:
                    if s not in assignment:
                        raise UnassignedSymbol(f"symbol {s} has no assigned value")
                    x = assignment[s]
                v *= Fraction(x) ** e
            total += v
        return total

    def substitute(self, mapping: Mapping[CoeffSymbol, "SymPoly | Fraction | int"]) -> "SymPoly":
        """Replace symbols by polynomials; untouched symbols pass through."""
        out = SymPoly.zero()
        for m, c in self._terms.items():
            factor = SymPoly.const(c)
            rest: Dict[CoeffSymbol, int] = {}
            for s, e in m:
                if s in mapping:
                    factor = factor * (_coerce(mapping[s]) ** e)
                else:
                    rest[s] = e
            out = out + factor * SymPoly({mono_make(rest): Fraction(1)})
        return out

    def derivative(self) -> "SymPoly":
        """Formal derivation: each symbol's derivative bumps its order."""
        out = SymPoly.zero()
        for m, c in self._terms.items():
            for idx, (s, e) in enumerate(m):
                rest = dict(m)
                if e == 1:
                    del rest[s]
                else:
                    rest[s] = e - 1
                rest[s.differentiate()] = rest.get(s.differentiate(), 0) + 1
                out = out + SymPoly({mono_make(rest): c * e})
        return out

    # -- exact division ---------------------------------------------------

    def exact_div(self, divisor: "SymPoly") -> "SymPoly":
        """Quotient q with q * divisor == self; NotDivisible otherwise."""
        divisor = _coerce(divisor)
        if divisor.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        if self.is_zero():
            return SymPoly.zero()
        lead_d = _leading(divisor._terms)
        coeff_d = divisor._terms[lead_d]
        quotient: Dict[Monomial, Fraction] = {}
        remainder = dict(self._terms)
        while remainder:
            lead_r = _leading(remainder)
            if not mono_divides(lead_d, lead_r):
                raise NotDivisible("no exact quotient")
            qm = mono_div(lead_r, lead_d)
            qc = remainder[lead_r] / coeff_d
            quotient[qm] = quotient.get(qm, Fraction(0)) + qc
            for m, c in divisor._terms.items():
                t = mono_mul(m, qm)
                v = remainder.get(t, Fraction(0)) - qc * c
                if v:
                    remainder[t] = v
                else:
                    remainder.pop(t, None)
        return SymPoly(quotient)

    # -- text form ----------------------------------------------------------

    def render(self) -> str:
        if not self._terms:
            return "0"
        import functools
        ordered = sorted(self._terms, key=functools.cmp_to_key(mono_cmp),
                         reverse=True)
        pieces = []
        for m in ordered:
            c = self._terms[m]
            mono = mono_render(m)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SymPoly({self.render()})"


def _coerce(value) -> SymPoly:
    if isinstance(value, SymPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return SymPoly.const(value)
    return NotImplemented


_RATIONAL_RE = None


def parse_sympoly(text: str) -> SymPoly:
    """Inverse of SymPoly.render (serialize -> parse -> serialize is stable)."""
    import re
    text = text.strip()
    if text == "0":
        return SymPoly.zero()
    # Normalise into signed term strings.
    text = text.replace(" - ", " + -")
    if text.startswith("- "):
        text = "-" + text[2:]
    rational = re.compile(r"^-?\d+(/\d+)?$")
    factor = re.compile(r"^([abc]\(\d+,\d+\)'*)(?:\^(\d+))?$")
    total = SymPoly.zero()
    for raw in text.split(" + "):
        raw = raw.strip()
        negative = raw.startswith("-")
        if negative:
            raw = raw[1:]
        coeff = Fraction(1)
        powers: Dict[CoeffSymbol, int] = {}
        for part in raw.split("*"):
            part = part.strip()
            if rational.match(part):
                coeff *= Fraction(part)
                continue
            m = factor.match(part)
            if m is None:
                raise ValueError(f"cannot parse factor {part!r}")
            sym = parse_symbol(m.group(1))
            exp = int(m.group(2)) if m.group(2) else 1
            powers[sym] = powers.get(sym, 0) + exp
        if negative:
            coeff = -coeff
        total = total + SymPoly({mono_make(powers): coeff})
    return total


# -- the spec'd operation surface -------------------------------------------

def poly_add(p: SymPoly, q: SymPoly) -> SymPoly:
    return p + q


def poly_mul(p: SymPoly, q: SymPoly) -> SymPoly:
    return p * q


def poly_eval(p: SymPoly, s: "Specialization") -> Fraction:
    return p.evaluate(s)


def poly_exact_div(p: SymPoly, q: SymPoly) -> SymPoly:
    return p.exact_div(q)


class Specialization:
    """Total assignment of exact rationals over a declared symbol universe."""

    __slots__ = ("_values", "universe")

    def __init__(self, assignment: Mapping[CoeffSymbol, Fraction],
                 universe: Iterable[CoeffSymbol] | None = None):
        self._values = {s: Fraction(v) for s, v in assignment.items()}
        self.universe = frozenset(universe) if universe is not None \
            else frozenset(self._values)
        missing = self.universe - set(self._values)
        if missing:
            sym = sorted(missing, key=lambda s: s.key())[0]
            raise UnassignedSymbol(f"universe symbol {sym} is unassigned")

    def value_of(self, sym: CoeffSymbol) -> Fraction:
        try:
            return self._values[sym]
        except KeyError:
            raise UnassignedSymbol(f"symbol {sym} has no assigned value") from None

    def __contains__(self, sym: CoeffSymbol) -> bool:
        return sym in self._values

    def __getitem__(self, sym: CoeffSymbol) -> Fraction:
        return self.value_of(sym)

    def items(self):
        return self._values.items()

    def updated(self, changes: Mapping[CoeffSymbol, Fraction]) -> "Specialization":
        values = dict(self._values)
        values.update({s: Fraction(v) for s, v in changes.items()})
        return Specialization(values, self.universe | set(changes))

    def to_json(self) -> dict:
        return {s.render(): str(v) for s, v in sorted(
            self._values.items(), key=lambda kv: kv[0].key())}

    @staticmethod
    def from_json(data: Mapping[str, str],
                  universe: Iterable[CoeffSymbol] | None = None) -> "Specialization":
        values = {}
        for key, v in data.items():
            sym = parse_symbol(key)
            values[sym] = Fraction(v)
        if universe is not None:
            allowed = set(universe)
            unknown = set(values) - allowed
            if unknown:
                sym = sorted(unknown, key=lambda s: s.key())[0]
                raise ValueError(f"unknown symbol in specialization file: {sym}")
        return Specialization(values, universe)
