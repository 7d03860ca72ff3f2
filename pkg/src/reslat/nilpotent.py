"""Exact arithmetic for the free 2-nilpotent group on two generators, its
positive monoid with the integral chain order, and the dyadic ordered group
used as the non-Hamiltonian witness chain.

Elements of the free 2-nilpotent group are written in the normal form
x^alpha y^beta [x,y]^gamma and stored as integer triples.  The product law

    (a1,b1,g1)(a2,b2,g2) = (a1+a2, b1+b2, g1+g2+b1*a2)

agrees with multiplication of 3x3 unitriangular integer matrices under the
assignment alpha -> (2,3) entry, beta -> (1,2), gamma -> (1,3); the matrix
route is kept alongside as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

__all__ = [
    "HeisTriple",
    "HEIS_UNIT",
    "heis_mul",
    "heis_inv",
    "heis_pow",
    "heis_commutator",
    "to_matrix",
    "from_matrix",
    "mat_mul",
    "s2_member",
    "s2_cmp",
    "s2_le",
    "s2_box",
    "nth_root",
    "DyadicPair",
    "DYADIC_UNIT",
    "dyadic_mul",
    "dyadic_inv",
    "dyadic_pow",
    "dyadic_cmp",
    "dyadic_conjugate",
    "DyadicChainAlgebra",
]


@dataclass(frozen=True)
class HeisTriple:
    """Normal-form exponents (alpha, beta, gamma); arbitrary precision."""

    alpha: int
    beta: int
    gamma: int

    def triple(self) -> tuple[int, int, int]:
        return (self.alpha, self.beta, self.gamma)

    def __mul__(self, other: "HeisTriple") -> "HeisTriple":
        return heis_mul(self, other)

    def __pow__(self, n: int) -> "HeisTriple":
        return heis_pow(self, n)

    def inv(self) -> "HeisTriple":
        return heis_inv(self)


HEIS_UNIT = HeisTriple(0, 0, 0)


def heis_mul(g: HeisTriple, h: HeisTriple) -> HeisTriple:
    return HeisTriple(
        g.alpha + h.alpha,
        g.beta + h.beta,
        g.gamma + h.gamma + g.beta * h.alpha,
    )


def heis_inv(g: HeisTriple) -> HeisTriple:
    return HeisTriple(-g.alpha, -g.beta, g.alpha * g.beta - g.gamma)


def heis_pow(g: HeisTriple, n: int) -> HeisTriple:
    """Plain iterated multiplication (serves as the power oracle)."""
    if n < 0:
        return heis_pow(heis_inv(g), -n)
    acc = HEIS_UNIT
    for _ in range(n):
        acc = heis_mul(acc, g)
    return acc


def heis_commutator(g: HeisTriple, h: HeisTriple) -> HeisTriple:
    return heis_mul(heis_mul(heis_inv(g), heis_inv(h)), heis_mul(g, h))


# --- matrix oracle -----------------------------------------------------------

Matrix = tuple[tuple[int, int, int], ...]


def to_matrix(g: HeisTriple) -> Matrix:
    return (
        (1, g.beta, g.gamma),
        (0, 1, g.alpha),
        (0, 0, 1),
    )


def from_matrix(m: Matrix) -> HeisTriple:
    return HeisTriple(alpha=m[1][2], beta=m[0][1], gamma=m[0][2])


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


# --- the positive monoid and its chain order ---------------------------------


def s2_member(g: HeisTriple) -> bool:
    return g.alpha >= 0 and g.beta >= 0 and 0 <= g.gamma <= g.alpha * g.beta


def _require_s2(g: HeisTriple):
    if not s2_member(g):
        raise ValueError(f"{g} is not in the positive monoid")


def s2_cmp(g: HeisTriple, h: HeisTriple) -> int:
    """The integral chain order on the positive monoid: g below h iff the
    exponent triple of g is lexicographically above that of h.  Returns
    -1 / 0 / 1; the unit is the greatest element."""
    _require_s2(g)
    _require_s2(h)
    if g.triple() == h.triple():
        return 0
    return -1 if g.triple() > h.triple() else 1


def s2_le(g: HeisTriple, h: HeisTriple) -> bool:
    return s2_cmp(g, h) <= 0


def s2_box(amax: int, bmax: Optional[int] = None, gmax: Optional[int] = None) -> Iterator[HeisTriple]:
    """All monoid elements with alpha <= amax, beta <= bmax and
    gamma <= min(alpha*beta, gmax), in ascending lexicographic triple order
    (which is descending chain order)."""
    bmax = amax if bmax is None else bmax
    for a in range(amax + 1):
        for b in range(bmax + 1):
            top = a * b if gmax is None else min(a * b, gmax)
            for g in range(top + 1):
                yield HeisTriple(a, b, g)


def nth_root(g: HeisTriple, n: int) -> Optional[HeisTriple]:
    """The unique h with h**n == g, or None.  Closed form: h exists iff n
    divides alpha and beta and the corrected central exponent."""
    if n < 1:
        raise ValueError("root degree must be >= 1")
    if g.alpha % n or g.beta % n:
        return None
    a, b = g.alpha // n, g.beta // n
    binom = n * (n - 1) // 2
    rem = g.gamma - binom * a * b
    if rem % n:
        return None
    return HeisTriple(a, b, rem // n)


# --- the dyadic ordered group -------------------------------------------------


def _is_dyadic(r: Fraction) -> bool:
    d = r.denominator
    return d & (d - 1) == 0


@dataclass(frozen=True)
class DyadicPair:
    """Element (r, n) of the semidirect product of the dyadic rationals by
    the integers, n acting by multiplication by 2**n.  Product:
    (r, n)(s, m) = (r + 2**n * s, n + m).  Ordered lexicographically with n
    dominant; this order is bi-invariant."""

    r: Fraction
    n: int

    def __post_init__(self):
        r = self.r if isinstance(self.r, Fraction) else Fraction(self.r)
        object.__setattr__(self, "r", r)
        if not _is_dyadic(r):
            raise ValueError(f"{r} is not a dyadic rational")

    @property
    def num(self) -> int:
        """Odd numerator (0 for zero)."""
        if self.r == 0:
            return 0
        k = self.r.numerator
        while k % 2 == 0:
            k //= 2
        return k

    @property
    def exp(self) -> int:
        """Exponent of 2 such that r = num * 2**exp (0 for zero)."""
        if self.r == 0:
            return 0
        e = 0
        num, den = self.r.numerator, self.r.denominator
        while den > 1:
            den //= 2
            e -= 1
        while num % 2 == 0:
            num //= 2
            e += 1
        return e

    def __mul__(self, other: "DyadicPair") -> "DyadicPair":
        return dyadic_mul(self, other)

    def __pow__(self, k: int) -> "DyadicPair":
        return dyadic_pow(self, k)


DYADIC_UNIT = DyadicPair(Fraction(0), 0)


def dyadic_mul(g: DyadicPair, h: DyadicPair) -> DyadicPair:
    return DyadicPair(g.r + Fraction(2) ** g.n * h.r, g.n + h.n)


def dyadic_inv(g: DyadicPair) -> DyadicPair:
    return DyadicPair(-(Fraction(2) ** (-g.n)) * g.r, -g.n)


def dyadic_pow(g: DyadicPair, k: int) -> DyadicPair:
    if k < 0:
        return dyadic_pow(dyadic_inv(g), -k)
    acc = DYADIC_UNIT
    for _ in range(k):
        acc = dyadic_mul(acc, g)
    return acc


def dyadic_cmp(g: DyadicPair, h: DyadicPair) -> int:
    if (g.n, g.r) == (h.n, h.r):
        return 0
    return -1 if (g.n, g.r) < (h.n, h.r) else 1


def dyadic_conjugate(g: DyadicPair, b: DyadicPair) -> DyadicPair:
    return dyadic_mul(dyadic_mul(dyadic_inv(b), g), b)


class DyadicChainAlgebra:
    """The dyadic group as a residuated chain (total orders on groups are
    residuated: a\\b = a^-1 b and a/b = a b^-1)."""

    unit = DYADIC_UNIT

    @staticmethod
    def mul(a, b):
        return dyadic_mul(a, b)

    @staticmethod
    def ldiv(a, b):
        return dyadic_mul(dyadic_inv(a), b)

    @staticmethod
    def rdiv(a, b):
        return dyadic_mul(a, dyadic_inv(b))

    @staticmethod
    def meet(a, b):
        return a if dyadic_cmp(a, b) <= 0 else b

    @staticmethod
    def join(a, b):
        return a if dyadic_cmp(a, b) >= 0 else b
