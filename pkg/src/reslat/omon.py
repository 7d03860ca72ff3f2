"""Totally ordered monoid instances with residuals by bounded search.

For an integral total order on a finitely generated monoid the sets
{c : a*c <= b} always have greatest elements (the order satisfies the
ascending chain condition), so a residual can be found by streaming
candidates strictly descending from the unit and returning the first hit.
`residual_search` implements that first-hit search over a bounded box and
reports exhaustion explicitly; the closed forms (`m1_residual`,
`s2_residual`) are the production path and are tested against it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Callable, Iterator, Optional, Sequence

from .finite import FiniteResLat
from .nilpotent import (
    DYADIC_UNIT,
    DyadicPair,
    HEIS_UNIT,
    HeisTriple,
    dyadic_conjugate,
    dyadic_cmp,
    dyadic_mul,
    dyadic_pow,
    s2_box,
    s2_cmp,
    s2_member,
    heis_mul,
)

__all__ = [
    "ResidualExhausted",
    "OrderedMonoidInstance",
    "M1Instance",
    "S2Instance",
    "ChainInstance",
    "LexProductInstance",
    "residual_search",
    "default_bound",
    "m1_residual",
    "s2_residual",
    "m1_word",
    "m1_parse",
    "lex_product_order",
    "TruncatedProduct",
    "WitnessRow",
    "HamiltonianFailureReport",
    "hamvty_witness",
    "M1ChainAlgebra",
    "S2ChainAlgebra",
]


class ResidualExhausted(RuntimeError):
    """The candidate stream ran out before a hit; the bound was too small."""

    def __init__(self, bound: int):
        super().__init__(f"residual search exhausted within bound {bound}")
        self.bound = bound


@dataclass(frozen=True)
class OrderedMonoidInstance:
    """A totally ordered monoid given behaviourally.

    `cmp(a, b)` is the total order (negative means strictly below),
    `candidates(bound)` streams elements strictly descending from the unit
    within a finite box, and `size(a)` is the word-length proxy used to pick
    default search bounds.
    """

    name: str
    unit: object
    mul: Callable
    cmp: Callable
    candidates: Callable[[int], Iterator]
    size: Callable[[object], int]
    integral: bool = True
    closed_residual: Optional[Callable] = None

    def le(self, a, b) -> bool:
        return self.cmp(a, b) <= 0


def default_bound(inst: OrderedMonoidInstance, a, b) -> int:
    return inst.size(a) + inst.size(b) + 4


def residual_search(inst, a, b, side: str = "left", bound: Optional[int] = None):
    """Greatest c with a*c <= b (left) or c*a <= b (right), by first-hit
    scan of the descending candidate stream.  Raises ResidualExhausted when
    the bound is too small; never returns a wrong answer."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if bound is None:
        bound = default_bound(inst, a, b)
    if bound < 1:
        raise ValueError("bound must be >= 1")
    for c in inst.candidates(bound):
        prod = inst.mul(a, c) if side == "left" else inst.mul(c, a)
        if inst.cmp(prod, b) <= 0:
            return c
    raise ResidualExhausted(bound)


# ---------------------------------------------------------------------------
# the free commutative monoid on two generators with the dual shortlex order

M1Element = tuple[int, int]  # exponents of the two generators

M1_UNIT: M1Element = (0, 0)


def m1_mul(u: M1Element, v: M1Element) -> M1Element:
    return (u[0] + v[0], u[1] + v[1])


def m1_cmp(u: M1Element, v: M1Element) -> int:
    """Dual shortlex: longer words are smaller; at equal length the word
    with the larger first exponent is greater."""
    if u == v:
        return 0
    ka = (-(u[0] + u[1]), u[0])
    kb = (-(v[0] + v[1]), v[0])
    return -1 if ka < kb else 1


def m1_candidates(bound: int) -> Iterator[M1Element]:
    for d in range(bound + 1):
        for a in range(d, -1, -1):
            yield (a, d - a)


def m1_residual(w: M1Element, z: M1Element) -> M1Element:
    """Greatest c with z*c <= w (the monoid is commutative, so both
    residuals coincide).  Closed form by case analysis on total degree."""
    d = (w[0] + w[1]) - (z[0] + z[1])
    if d < 0:
        return M1_UNIT
    # candidates of degree d: need z+c == w, or first coordinate strictly low
    if w[0] - z[0] >= 0 and w[1] - z[1] >= 0:
        return (w[0] - z[0], w[1] - z[1])
    if w[0] - z[0] > d:
        # every degree-d candidate stays strictly below in the first slot
        return (d, 0)
    # no degree-d candidate; degree d+1 wins on length alone
    return (d + 1, 0)


def m1_word(u: M1Element) -> str:
    if u == (0, 0):
        return "e"
    parts = []
    for sym, k in zip("xy", u):
        if k == 1:
            parts.append(sym)
        elif k > 1:
            parts.append(f"{sym}{k}")
    return "".join(parts)


def m1_parse(text: str) -> M1Element:
    text = text.strip()
    if text.startswith("["):
        import json

        a, b = json.loads(text)
        return (int(a), int(b))
    if text == "e":
        return (0, 0)
    import re

    m = re.fullmatch(r"(?:x(\d*))?(?:y(\d*))?", text)
    if not m or not text:
        raise ValueError(f"cannot parse monoid word {text!r}")
    a = int(m.group(1)) if m.group(1) else (1 if "x" in text else 0)
    b = int(m.group(2)) if m.group(2) else (1 if "y" in text else 0)
    return (a, b)


M1Instance = OrderedMonoidInstance(
    name="m1",
    unit=M1_UNIT,
    mul=m1_mul,
    cmp=m1_cmp,
    candidates=m1_candidates,
    size=lambda u: u[0] + u[1],
    closed_residual=lambda a, b, side: m1_residual(b, a) if side == "left" else m1_residual(b, a),
)


# ---------------------------------------------------------------------------
# the positive 2-nilpotent monoid


def _s2_candidates(bound: int) -> Iterator[HeisTriple]:
    return s2_box(bound, bound)


def s2_residual(a: HeisTriple, b: HeisTriple, side: str = "left") -> HeisTriple:
    """Closed-form residual in the integral chain on the positive monoid:
    the lexicographically least exponent triple c (hence chain-greatest
    element) with a*c lex-above b (left) or c*a lex-above b (right)."""
    for g in (a, b):
        if not s2_member(g):
            raise ValueError(f"{g} is not in the positive monoid")
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    a1, b1, g1 = a.triple()
    a2, b2, g2 = b.triple()
    if a2 < a1:
        return HEIS_UNIT
    al = a2 - a1
    if b2 < b1:
        return HeisTriple(al, 0, 0)
    be = b2 - b1
    # with the first two coordinates matched, minimize the central exponent
    cross = b1 * al if side == "left" else be * a1
    lo = g2 - g1 - cross
    if lo <= al * be:
        return HeisTriple(al, be, max(0, lo))
    return HeisTriple(al, be + 1, 0)


S2Instance = OrderedMonoidInstance(
    name="s2",
    unit=HEIS_UNIT,
    mul=heis_mul,
    cmp=s2_cmp,
    candidates=_s2_candidates,
    size=lambda g: g.alpha + g.beta + g.gamma,
    closed_residual=lambda a, b, side: s2_residual(a, b, side),
)


# ---------------------------------------------------------------------------
# adapters and lexicographic products


def ChainInstance(s: FiniteResLat) -> OrderedMonoidInstance:
    """View a finite residuated chain as an ordered-monoid instance."""
    if not s.is_chain():
        raise ValueError("structure is not totally ordered")
    order = sorted(s.elements, key=lambda a: sum(s.leq[a]))  # descending

    def cmp(a, b):
        if a == b:
            return 0
        return -1 if s.le(a, b) else 1

    return OrderedMonoidInstance(
        name=s.name or f"chain{s.n}",
        unit=s.unit,
        mul=s.mul,
        cmp=cmp,
        candidates=lambda bound: iter(order),
        size=lambda a: 1,
        integral=all(s.le(a, s.unit) for a in s.elements),
        closed_residual=lambda a, b, side: s.ldiv(a, b) if side == "left" else s.rdiv(b, a),
    )


def lex_product_order(factors: Sequence[OrderedMonoidInstance]) -> OrderedMonoidInstance:
    """Lexicographic order on a finite product of chains: compare at the
    first index where the coordinates differ."""
    if not factors:
        raise ValueError("need at least one factor")

    def mul(u, v):
        return tuple(f.mul(a, b) for f, a, b in zip(factors, u, v))

    def cmp(u, v):
        for f, a, b in zip(factors, u, v):
            c = f.cmp(a, b)
            if c:
                return c
        return 0

    def candidates(bound):
        grids = [list(itertools.islice(f.candidates(bound), 0, None)) for f in factors]
        combos = list(itertools.product(*grids))
        combos.sort(key=cmp_to_key(cmp), reverse=True)
        return iter(combos)

    return OrderedMonoidInstance(
        name="lex(" + ",".join(f.name for f in factors) + ")",
        unit=tuple(f.unit for f in factors),
        mul=mul,
        cmp=cmp,
        candidates=candidates,
        size=lambda u: sum(f.size(a) for f, a in zip(factors, u)),
        integral=all(f.integral for f in factors),
    )


# ---------------------------------------------------------------------------
# the truncated-product Hamiltonian-failure witness


@dataclass(frozen=True)
class TruncatedProduct:
    """Finite truncation of a product of copies of the dyadic chain, with
    pointwise product and pointwise (partial) order."""

    length: int  # number of coordinates, indices 0..length-1

    def mul(self, u, v):
        return tuple(dyadic_mul(a, b) for a, b in zip(u, v))

    def le(self, u, v) -> bool:
        return all(dyadic_cmp(a, b) <= 0 for a, b in zip(u, v))

    def conjugate(self, u, by):
        return tuple(dyadic_conjugate(a, b) for a, b in zip(u, by))


@dataclass(frozen=True)
class WitnessRow:
    n: int
    coordinate: Optional[int]
    power: Optional[DyadicPair] = None
    conjugate: Optional[DyadicPair] = None


@dataclass(frozen=True)
class HamiltonianFailureReport:
    truncation: int
    base: DyadicPair
    conjugator: DyadicPair
    rows: tuple[WitnessRow, ...]

    @property
    def certified(self) -> list[int]:
        return [r.n for r in self.rows if r.coordinate is not None]

    def all_certified(self) -> bool:
        return all(r.coordinate is not None for r in self.rows if r.n >= 1)


def hamvty_witness(
    N: int,
    a: Optional[DyadicPair] = None,
    b: Optional[DyadicPair] = None,
) -> HamiltonianFailureReport:
    """Build the truncated product over coordinates 0..N with the constant
    tuple of `a` and the tuple of powers of `b`, and for each n <= N report
    a coordinate where the n-th power of the constant tuple fails to lie
    below the conjugate tuple.  A row for every n certifies the failure of
    the Hamiltonian property up to the truncation."""
    if N < 1:
        raise ValueError("truncation must be >= 1")
    a = a if a is not None else DyadicPair(Fraction(-1), 0)
    b = b if b is not None else DyadicPair(Fraction(0), -2)
    conj = [dyadic_conjugate(a, dyadic_pow(b, i)) for i in range(N + 1)]
    rows = []
    for n in range(0, N + 1):
        if n == 0:
            rows.append(WitnessRow(0, None))
            continue
        an = dyadic_pow(a, n)
        hit = next(
            (i for i in range(N + 1) if dyadic_cmp(an, conj[i]) > 0),
            None,
        )
        rows.append(
            WitnessRow(n, hit, an, conj[hit] if hit is not None else None)
        )
    return HamiltonianFailureReport(N, a, b, tuple(rows))


# ---------------------------------------------------------------------------
# term-evaluation adapters for the infinite chains


class M1ChainAlgebra:
    unit = M1_UNIT

    @staticmethod
    def mul(a, b):
        return m1_mul(a, b)

    @staticmethod
    def ldiv(a, b):
        return m1_residual(b, a)

    @staticmethod
    def rdiv(a, b):
        return m1_residual(a, b)

    @staticmethod
    def meet(a, b):
        return a if m1_cmp(a, b) <= 0 else b

    @staticmethod
    def join(a, b):
        return a if m1_cmp(a, b) >= 0 else b


class S2ChainAlgebra:
    unit = HEIS_UNIT

    @staticmethod
    def mul(a, b):
        return heis_mul(a, b)

    @staticmethod
    def ldiv(a, b):
        return s2_residual(a, b, "left")

    @staticmethod
    def rdiv(a, b):
        return s2_residual(b, a, "right")

    @staticmethod
    def meet(a, b):
        return a if s2_cmp(a, b) <= 0 else b

    @staticmethod
    def join(a, b):
        return a if s2_cmp(a, b) >= 0 else b
