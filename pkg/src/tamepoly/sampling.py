"""Seeded generators of random systems and abstract polynomials.

Generation is biased toward small degrees, sparse supports and triangular
systems so that composed polynomials stay cheap to expand.  All functions
take an explicit :class:`random.Random`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Tuple

from .calculus import PolySystem, is_algebraically_independent
from .poly import Polynomial, VarSpace, Xspace, xspace


def random_coeff(rng: random.Random, bound: int = 3) -> Fraction:
    while True:
        num = rng.randint(-bound, bound)
        if num:
            den = 1 if rng.random() < 0.7 else rng.randint(2, bound + 1)
            return Fraction(num, den)


def random_monomial(rng: random.Random, nvars: int, degree: int) -> Tuple[int, ...]:
    exps = [0] * nvars
    for _ in range(degree):
        exps[rng.randrange(nvars)] += 1
    return tuple(exps)


def _small_degree(rng: random.Random, lo: int, hi: int) -> int:
    # favours low degrees
    if hi <= lo:
        return lo
    return min(rng.randint(lo, hi), rng.randint(lo, hi))


def random_poly(rng: random.Random, space: VarSpace, max_deg: int, max_terms: int = 3,
                min_deg: int = 1, coeff_bound: int = 3) -> Polynomial:
    """Sparse polynomial with degree in ``[min_deg, max_deg]``, never zero."""
    while True:
        top = _small_degree(rng, min_deg, max_deg)
        terms = {random_monomial(rng, space.size, top): random_coeff(rng, coeff_bound)}
        for _ in range(rng.randint(0, max_terms - 1)):
            d = rng.randint(0, top)
            terms[random_monomial(rng, space.size, d)] = random_coeff(rng, coeff_bound)
        p = Polynomial(terms, space)
        if not p.is_zero() and p.degree() >= min_deg:
            return p


def _triangular_poly(rng: random.Random, space: VarSpace, i: int, max_deg: int) -> Polynomial:
    """``c * x_i + h`` with h a sparse polynomial in the other variables."""
    p = Polynomial.var(i, space).scale(random_coeff(rng))
    if space.size > 1 and max_deg >= 1 and rng.random() < 0.9:
        others = [j for j in range(1, space.size + 1) if j != i]
        d = _small_degree(rng, 1, max_deg)
        mono = [0] * space.size
        for _ in range(d):
            mono[rng.choice(others) - 1] += 1
        p = p + Polynomial.monomial(mono, space, random_coeff(rng))
        if rng.random() < 0.4:
            p = p + random_poly(rng, space, max(1, d - 1), max_terms=2, min_deg=0)
    return p


def random_system(rng: random.Random, max_n: int = 4, max_m: int = 3, max_deg: int = 6,
                  n: Optional[int] = None, m: Optional[int] = None, tries: int = 200) -> PolySystem:
    """A random algebraically independent system (rejection sampling)."""
    for _ in range(tries):
        nn = n or rng.randint(min(m or 1, max_n), max_n)
        mm = m or rng.randint(1, min(nn, max_m))
        if mm > nn:
            raise ValueError("m cannot exceed n")
        space = xspace(nn)
        polys = []
        triangular = rng.random() < 0.5
        slots = rng.sample(range(1, nn + 1), mm)
        for slot in slots:
            if triangular:
                polys.append(_triangular_poly(rng, space, slot, max_deg))
            else:
                polys.append(random_poly(rng, space, max_deg, max_terms=3))
        polys = [p if not p.is_constant() else p + Polynomial.var(1, space) for p in polys]
        sys = PolySystem(tuple(polys))
        if max(sys.degrees) <= max_deg and is_algebraically_independent(sys):
            return sys
    raise RuntimeError("could not sample an independent system")


@dataclass(frozen=True)
class ResonantPair:
    """Two generators whose leading forms are powers of one homogeneous form.

    ``cancelling`` is an abstract polynomial whose hat vanishes.
    """

    system: PolySystem
    cancelling: Polynomial


def random_resonant_pair(rng: random.Random, max_n: int = 3, max_deg: int = 6) -> ResonantPair:
    """m = 2 system with ``fbar_1 = c1 u^a``, ``fbar_2 = c2 u^b`` plus lower terms."""
    for _ in range(200):
        n = rng.randint(2, max(2, max_n))
        space = xspace(n)
        t = _small_degree(rng, 1, max(1, max_deg // 2))
        u_terms = {random_monomial(rng, n, t): random_coeff(rng, 2)}
        if rng.random() < 0.4:
            u_terms[random_monomial(rng, n, t)] = random_coeff(rng, 2)
        u = Polynomial(u_terms, space)
        if u.is_zero():
            continue
        top = max_deg // t
        if top < 1:
            continue
        a, b = rng.randint(1, top), rng.randint(1, top)
        c1, c2 = random_coeff(rng, 2), random_coeff(rng, 2)
        low1 = random_poly(rng, space, max(0, a * t - 1), max_terms=2, min_deg=0)
        low2 = random_poly(rng, space, max(0, b * t - 1), max_terms=2, min_deg=0)
        f1 = (u ** a).scale(c1) + low1
        f2 = (u ** b).scale(c2) + low2
        if f1.is_constant() or f2.is_constant():
            continue
        sys = PolySystem((f1, f2))
        if not is_algebraically_independent(sys):
            continue
        g = gcd(a, b)
        ap, bp = a // g, b // g
        X = Xspace(2)
        cancelling = (Polynomial.monomial((0, ap), X, c1 ** bp)
                      - Polynomial.monomial((bp, 0), X, c2 ** ap))
        return ResonantPair(sys, cancelling)
    raise RuntimeError("could not sample a resonant pair")


def random_abstract(rng: random.Random, m: int, max_deg: int = 3, max_terms: int = 3) -> Polynomial:
    """Nonzero sparse polynomial in X1..Xm of degree at most ``max_deg``."""
    return random_poly(rng, Xspace(m), max_deg, max_terms=max_terms, min_deg=1)


def random_abstract_for(rng: random.Random, sys: PolySystem, max_deg: int = 3,
                        cancelling: Optional[Polynomial] = None) -> Polynomial:
    """Random abstract polynomial, sometimes built around a cancelling relation."""
    X = sys.abstract_space
    if cancelling is not None and rng.random() < 0.6:
        g = cancelling
        roll = rng.random()
        if roll < 0.3 and max_deg >= 2:
            g = g * (Polynomial.var(rng.randint(1, sys.m), X) + random_coeff(rng))
        elif roll < 0.6:
            g = g + random_poly(rng, X, max(1, g.degree() - 1), max_terms=2, min_deg=0)
        if not g.is_zero():
            return g
    return random_abstract(rng, sys.m, max_deg)
