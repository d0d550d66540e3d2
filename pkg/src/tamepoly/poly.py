"""Sparse multivariate polynomials over the rationals.

A :class:`Polynomial` is an immutable map from exponent tuples to nonzero
rational coefficients, tagged with the :class:`VarSpace` it lives in.
Coefficients are stored as ``gmpy2.mpq`` (they compare and hash equal to
the matching :class:`~fractions.Fraction`); ``int`` and ``Fraction`` inputs
are converted.  Two spaces are used throughout the package: the coordinate
space ``x1..xn`` and the formal space ``X1..Xm`` in which abstract
polynomials (expressions in the generators of a system) are written.
Mixing the two raises :class:`~tamepoly.errors.VarspaceMismatch`.

Variable indices in the public API are 1-based, as in ``x1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from operator import add as _add
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

from gmpy2 import mpq

from .errors import InvalidIndex, ParseError, VarspaceMismatch

Monomial = Tuple[int, ...]
Rational = Union[int, Fraction, mpq]
_MPQ = type(mpq(0))
_SCALARS = (int, Fraction, _MPQ)

#: Degree of the zero polynomial.  Absorbing under ``+`` with integers and
#: below every integer.
NEG_INFINITY = float("-inf")


@dataclass(frozen=True)
class VarSpace:
    """A named family of variables ``<prefix>1 .. <prefix><size>``."""

    prefix: str
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("variable count must be non-negative")

    def name(self, index: int) -> str:
        return f"{self.prefix}{index}"

    def __str__(self):
        return f"{self.prefix}1..{self.prefix}{self.size}"


def xspace(n: int) -> VarSpace:
    return VarSpace("x", n)


def Xspace(m: int) -> VarSpace:
    return VarSpace("X", m)


def _coeff(c) -> mpq:
    if isinstance(c, _MPQ):
        return c
    if isinstance(c, Fraction):
        return mpq(c.numerator, c.denominator)
    if isinstance(c, int) and not isinstance(c, bool):
        return mpq(c)
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


class Polynomial:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("_terms", "_space", "_hash")

    def __init__(self, terms: Mapping[Monomial, Rational], space: VarSpace):
        n = space.size
        clean: Dict[Monomial, mpq] = {}
        for mono, c in terms.items():
            mono = tuple(mono)
            if len(mono) != n:
                raise ValueError(f"monomial {mono} has length {len(mono)}, expected {n}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = _coeff(c)
            if c:
                clean[mono] = clean.get(mono, mpq(0)) + c
                if not clean[mono]:
                    del clean[mono]
        self._terms = clean
        self._space = space
        self._hash = None

    @classmethod
    def _trusted(cls, terms: Dict[Monomial, mpq], space: VarSpace) -> "Polynomial":
        # terms already canonical: no zero coefficients, right lengths
        p = object.__new__(cls)
        p._terms = terms
        p._space = space
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, space: VarSpace) -> "Polynomial":
        return cls._trusted({}, space)

    @classmethod
    def constant(cls, c: Rational, space: VarSpace) -> "Polynomial":
        c = _coeff(c)
        if not c:
            return cls.zero(space)
        return cls._trusted({(0,) * space.size: c}, space)

    @classmethod
    def var(cls, index: int, space: VarSpace) -> "Polynomial":
        """The variable ``<prefix><index>`` (1-based)."""
        if not 1 <= index <= space.size:
            raise InvalidIndex(f"variable index {index} outside 1..{space.size}")
        mono = [0] * space.size
        mono[index - 1] = 1
        return cls._trusted({tuple(mono): mpq(1)}, space)

    @classmethod
    def monomial(cls, exponents: Sequence[int], space: VarSpace, coeff: Rational = 1) -> "Polynomial":
        return cls({tuple(exponents): coeff}, space)

    # -- basic accessors ------------------------------------------------------

    @property
    def space(self) -> VarSpace:
        return self._space

    @property
    def nvars(self) -> int:
        return self._space.size

    @property
    def terms(self) -> Mapping[Monomial, mpq]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, mpq]]:
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self) -> mpq:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0,) * self.nvars, mpq(0))

    def coefficient(self, mono: Sequence[int]) -> mpq:
        return self._terms.get(tuple(mono), mpq(0))

    def degree(self):
        """Total degree; ``NEG_INFINITY`` for the zero polynomial."""
        if not self._terms:
            return NEG_INFINITY
        return max(sum(m) for m in self._terms)

    def degree_in(self, index: int):
        """Degree in the single variable ``index`` (1-based)."""
        self._check_index(index)
        if not self._terms:
            return NEG_INFINITY
        return max(m[index - 1] for m in self._terms)

    def homogeneous_component(self, d: int) -> "Polynomial":
        return Polynomial._trusted({m: c for m, c in self._terms.items() if sum(m) == d}, self._space)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def leading_monomial(self) -> Monomial:
        """Largest monomial in graded lexicographic order."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=_grlex_key)

    # -- arithmetic -----------------------------------------------------------

    def _check_space(self, other: "Polynomial"):
        if self._space != other._space:
            raise VarspaceMismatch(f"cannot combine polynomials over {self._space} and {other._space}")

    def _check_index(self, index: int):
        if not 1 <= index <= self.nvars:
            raise InvalidIndex(f"variable index {index} outside 1..{self.nvars}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_space(other)
            return other
        if isinstance(other, _SCALARS):
            return Polynomial.constant(other, self._space)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v += c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial._trusted(out, self._space)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._trusted({m: -c for m, c in self._terms.items()}, self._space)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, mpq] = {}
        get = out.get
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(map(_add, m1, m2))
                out[m] = get(m, 0) + c1 * c2
        return Polynomial._trusted({m: c for m, c in out.items() if c}, self._space)

    __rmul__ = __mul__

    def scale(self, c: Rational) -> "Polynomial":
        c = _coeff(c)
        if not c:
            return Polynomial.zero(self._space)
        return Polynomial._trusted({m: v * c for m, v in self._terms.items()}, self._space)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1, self._space)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """Quotient ``self / other``; raises ``ValueError`` if the division is not exact."""
        self._check_space(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = other.leading_monomial()
        lead_c = other._terms[lead]
        remainder = dict(self._terms)
        quotient: Dict[Monomial, mpq] = {}
        while remainder:
            m = max(remainder, key=_grlex_key)
            shift = tuple(a - b for a, b in zip(m, lead))
            if any(e < 0 for e in shift):
                raise ValueError("polynomial division is not exact")
            q = remainder[m] / lead_c
            quotient[shift] = q
            for mo, co in other._terms.items():
                t = tuple(map(_add, mo, shift))
                v = remainder.get(t, 0) - q * co
                if v:
                    remainder[t] = v
                else:
                    remainder.pop(t, None)
        return Polynomial._trusted(quotient, self._space)

    def partial(self, index: int) -> "Polynomial":
        """Formal partial derivative with respect to variable ``index`` (1-based)."""
        self._check_index(index)
        j = index - 1
        out: Dict[Monomial, mpq] = {}
        for m, c in self._terms.items():
            e = m[j]
            if e:
                out[m[:j] + (e - 1,) + m[j + 1:]] = c * e
        return Polynomial._trusted(out, self._space)

    def embed(self, space: VarSpace) -> "Polynomial":
        """Reinterpret in a space with at least as many variables (padding exponents with 0)."""
        if space.size < self.nvars:
            raise ValueError("target space is smaller")
        pad = (0,) * (space.size - self.nvars)
        return Polynomial._trusted({m + pad: c for m, c in self._terms.items()}, space)

    # -- comparison, hashing, printing ---------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._space == other._space and self._terms == other._terms
        if isinstance(other, _SCALARS):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._space, frozenset(self._terms.items())))
        return self._hash

    def sorted_terms(self) -> list:
        """Terms in descending graded lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r}, {self._space.prefix}{self._space.size})"


def _grlex_key(m: Monomial):
    return (sum(m), m)


# -- free-function ring API -------------------------------------------------


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def pow(p: Polynomial, k: int) -> Polynomial:  # noqa: A001 - mirrors the ring API
    return p ** k


def scale(p: Polynomial, c: Rational) -> Polynomial:
    return p.scale(c)


def degree(p: Polynomial):
    return p.degree()


def partial_derivative(p: Polynomial, index: int) -> Polynomial:
    return p.partial(index)


def substitute(g: Polynomial, fs: Sequence[Polynomial]) -> Polynomial:
    """Compose: replace the i-th variable of ``g`` by ``fs[i-1]``.

    ``fs`` must be nonempty and share one variable space, which is the
    space of the result.
    """
    if len(fs) != g.nvars:
        raise InvalidIndex(f"arity mismatch: {g.nvars} variables but {len(fs)} substitutes")
    if not fs:
        raise ValueError("nothing to substitute")
    target = fs[0].space
    for f in fs:
        if f.space != target:
            raise VarspaceMismatch("substituted polynomials must share a variable space")
    if g.is_zero():
        return Polynomial.zero(target)
    return _horner(dict(g.items()), len(fs), fs, target)


def _horner(terms: Dict[Monomial, mpq], k: int, fs: Sequence[Polynomial],
            target: VarSpace) -> Polynomial:
    """Evaluate the terms (only the first ``k`` exponents may be nonzero) at ``fs``.

    Nested Horner in the last live variable keeps every product of the
    form (partial result) * f_j, which is much cheaper than forming powers
    of several generators and multiplying them together.
    """
    while k and all(m[k - 1] == 0 for m in terms):
        k -= 1
    if k == 0:
        c = sum(terms.values(), mpq(0))
        return Polynomial.constant(c, target)
    j = k - 1
    by_exp: Dict[int, Dict[Monomial, mpq]] = {}
    for m, c in terms.items():
        by_exp.setdefault(m[j], {})[m[:j] + (0,) + m[j + 1:]] = c
    f = fs[j]
    acc = None
    for e in range(max(by_exp), -1, -1):
        if acc is not None:
            acc = acc * f
        part = by_exp.get(e)
        if part is not None:
            val = _horner(part, j, fs, target)
            acc = val if acc is None else acc + val
    return acc


# -- printing ---------------------------------------------------------------


def _format_coeff(c) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _format_monomial(m: Monomial, space: VarSpace) -> str:
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(space.name(i))
        elif e > 1:
            parts.append(f"{space.name(i)}^{e}")
    return "*".join(parts)


def format_poly(p: Polynomial) -> str:
    """Canonical text form, terms in descending graded-lex order.

    The output is accepted by :func:`parse` in the same space.
    """
    if p.is_zero():
        return "0"
    chunks = []
    for idx, (m, c) in enumerate(p.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        mono = _format_monomial(m, p.space)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if idx == 0:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)


# -- parsing ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break  # only trailing whitespace left
        num, name, sym = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(("num", int(num), start))
        elif name is not None:
            tokens.append(("name", name, start))
        else:
            if sym not in "+-*^/()":
                raise ParseError(f"unexpected character {sym!r}", start)
            tokens.append((sym, sym, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    """Recursive descent over::

        expr   := ['+'|'-'] term (('+'|'-') term)*
        term   := factor ('*' factor)*
        factor := ('+'|'-') factor | power
        power  := atom ['^' INT]
        atom   := INT ['/' INT] | VAR | '(' expr ')'
    """

    def __init__(self, text: str, space: VarSpace):
        self.text = text
        self.space = space
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                p = p * self.factor()
            elif kind == "/":
                raise ParseError("division is only allowed inside rational literals", self.peek()[2])
            elif kind in ("num", "name", "("):
                raise ParseError("implicit multiplication is not allowed", self.peek()[2])
            else:
                return p

    def factor(self) -> Polynomial:
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.factor()
        if kind == "+":
            self.take()
            return self.factor()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("num")
            return base ** tok[1]
        return base

    def atom(self) -> Polynomial:
        kind, value, pos = self.peek()
        if kind == "num":
            self.take()
            c = mpq(value)
            if self.peek()[0] == "/":
                slash = self.take()
                nxt = self.peek()
                if nxt[0] != "num":
                    raise ParseError("division is only allowed inside rational literals", slash[2])
                self.take()
                if nxt[1] == 0:
                    raise ParseError("zero denominator", nxt[2])
                c = mpq(value, nxt[1])
            return Polynomial.constant(c, self.space)
        if kind == "name":
            self.take()
            prefix = self.space.prefix
            if value.startswith(prefix) and value[len(prefix):].isdigit():
                idx = int(value[len(prefix):])
                if 1 <= idx <= self.space.size:
                    return Polynomial.var(idx, self.space)
            raise ParseError(f"unknown variable {value!r} (expected {self.space})", pos)
        if kind == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p
        what = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"unexpected {what}", pos)


def parse(text: str, space: VarSpace) -> Polynomial:
    """Parse ``text`` as a polynomial in ``space``.

    >>> str(parse("x1^2*x2 - 3/4*x3 + 1", xspace(3)))
    'x1^2*x2 - 3/4*x3 + 1'
    """
    return _Parser(text, space).parse()


def variables(space: VarSpace) -> Tuple[Polynomial, ...]:
    return tuple(Polynomial.var(i, space) for i in range(1, space.size + 1))


def from_terms(pairs: Iterable[Tuple[Sequence[int], Rational]], space: VarSpace) -> Polynomial:
    out: Dict[Monomial, mpq] = {}
    for m, c in pairs:
        m = tuple(m)
        out[m] = out.get(m, mpq(0)) + _coeff(c)
    return Polynomial(out, space)
