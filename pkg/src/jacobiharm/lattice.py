"""Index lattice (j, m, q) for the algebraic Jacobi functions.

Indices are stored as doubled integers (j2 = 2j, m2 = 2m, q2 = 2q) so that
half-integer labels stay exact and every lattice computation is integer
arithmetic.  A triple is valid when

    j >= |m|,  j >= |q|,  j - m and j - q nonnegative integers,

with j, m, q all integers or all half-integers (equivalently: j2, m2, q2
share one parity).

The module also provides the conversion to classical Jacobi parameters

    n = j - m,  alpha = m + q,  beta = m - q,

and the canonicalization that reduces any valid triple to one with
m >= q >= 0 using the three function symmetries

    swap      (m, q)      -> (q, m)                no sign
    negate    (m, q)      -> (-m, -q)              sign (-1)^(m+q)
    reflect   (m, q, x)   -> (m, -q, -x)           sign (-1)^(j-m)

applied in the fixed order negate, swap, reflect.  The accumulated sign and
reflection flag let callers evaluate the original function from the
canonical one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParityMismatch, RangeViolation

__all__ = [
    "IndexTriple",
    "ClassicParams",
    "Canonicalization",
    "validate",
    "to_classic",
    "from_classic",
    "canonicalize",
    "all_triples",
]


@dataclass(frozen=True)
class IndexTriple:
    """A lattice point (j, m, q) held as doubled integers."""

    j2: int
    m2: int
    q2: int

    @property
    def j(self) -> float:
        return self.j2 / 2.0

    @property
    def m(self) -> float:
        return self.m2 / 2.0

    @property
    def q(self) -> float:
        return self.q2 / 2.0

    @property
    def is_integer(self) -> bool:
        """True for the integer (H) sector, False for half-integer (F)."""
        return self.j2 % 2 == 0

    @property
    def sector(self) -> str:
        return "H" if self.is_integer else "F"

    def to_json_dict(self) -> dict:
        return {"j2": self.j2, "m2": self.m2, "q2": self.q2}

    @staticmethod
    def from_json_dict(d: dict) -> "IndexTriple":
        return validate(int(d["j2"]), int(d["m2"]), int(d["q2"]))

    @staticmethod
    def from_halves(j, m, q) -> "IndexTriple":
        """Build from plain (possibly half-integer) values given as ints,
        Fractions, floats or strings like "1.5"."""
        doubled = []
        for value in (j, m, q):
            twice = Fraction(value) * 2
            if twice.denominator != 1:
                raise RangeViolation(f"index {value!r} is not a half-integer")
            doubled.append(int(twice))
        return validate(*doubled)


@dataclass(frozen=True)
class ClassicParams:
    """Classical Jacobi parameters (n, alpha, beta) on the integer lattice."""

    n: int
    alpha: int
    beta: int

    def __post_init__(self):
        if self.n < 0:
            raise RangeViolation(f"n = {self.n} must be nonnegative")
        if self.alpha < -self.n or self.beta < -self.n:
            raise RangeViolation(
                f"alpha, beta must be >= -n; got ({self.n}, {self.alpha}, {self.beta})"
            )
        if self.alpha + self.beta < -self.n:
            raise RangeViolation(
                f"alpha + beta must be >= -n; got ({self.n}, {self.alpha}, {self.beta})"
            )


@dataclass(frozen=True)
class Canonicalization:
    """Result of reducing a triple to the canonical pattern m >= q >= 0.

    The original function is recovered as

        f_original(x) = sign * f_canonical(-x if reflect_x else x).
    """

    canonical: IndexTriple
    sign: int
    reflect_x: bool


def validate(j2: int, m2: int, q2: int) -> IndexTriple:
    """Check the lattice constraints and return the triple, or raise."""
    for name, value in (("j2", j2), ("m2", m2), ("q2", q2)):
        if not isinstance(value, int):
            raise ParityMismatch(f"{name} = {value!r} is not an integer")
    if (j2 - m2) % 2 != 0 or (j2 - q2) % 2 != 0:
        raise ParityMismatch(
            f"(j2, m2, q2) = ({j2}, {m2}, {q2}) must share one parity"
        )
    if j2 < 0:
        raise RangeViolation(f"j2 = {j2} must be nonnegative")
    if j2 < abs(m2) or j2 < abs(q2):
        raise RangeViolation(
            f"need j >= |m| and j >= |q|; got (j2, m2, q2) = ({j2}, {m2}, {q2})"
        )
    return IndexTriple(j2, m2, q2)


def to_classic(t: IndexTriple) -> ClassicParams:
    """Map (j, m, q) to (n, alpha, beta) = (j - m, m + q, m - q)."""
    n = (t.j2 - t.m2) // 2
    alpha = (t.m2 + t.q2) // 2
    beta = (t.m2 - t.q2) // 2
    return ClassicParams(n, alpha, beta)


def from_classic(p: ClassicParams) -> IndexTriple:
    """Inverse map: j = n + (alpha+beta)/2, m = (alpha+beta)/2, q = (alpha-beta)/2."""
    m2 = p.alpha + p.beta
    q2 = p.alpha - p.beta
    j2 = 2 * p.n + m2
    return validate(j2, m2, q2)


def canonicalize(t: IndexTriple) -> Canonicalization:
    """Reduce to the canonical pattern m >= q >= 0.

    Fixed composition order so the accumulated sign is deterministic:

    1. negate both labels when m + q < 0 (or m + q == 0 with m < 0),
       sign factor (-1)^(m+q);
    2. swap m and q when |q| > |m| (no sign);
    3. flip the sign of q together with an x-reflection when q < 0,
       sign factor (-1)^(j-m) with m taken after steps 1 and 2.

    The composed identity is verified numerically in the test suite; the
    bookkeeping here is not taken on faith.
    """
    m2, q2 = t.m2, t.q2
    sign = 1
    reflect = False

    if m2 + q2 < 0 or (m2 + q2 == 0 and m2 < 0):
        # (-1)^(m+q); m+q is an integer = (m2+q2)/2
        if ((m2 + q2) // 2) % 2 != 0:
            sign = -sign
        m2, q2 = -m2, -q2

    if abs(q2) > abs(m2):
        m2, q2 = q2, m2

    if q2 < 0:
        # (-1)^(j-m); j-m is an integer = (j2-m2)/2
        if ((t.j2 - m2) // 2) % 2 != 0:
            sign = -sign
        q2 = -q2
        reflect = True

    canonical = IndexTriple(t.j2, m2, q2)
    assert canonical.m2 >= canonical.q2 >= 0
    return Canonicalization(canonical=canonical, sign=sign, reflect_x=reflect)


def all_triples(j2max: int, parity: str = "both"):
    """Iterate valid triples with j2 <= j2max.

    parity: "integer" (j2 even), "half" (j2 odd) or "both".
    """
    if parity not in ("integer", "half", "both"):
        raise ValueError(f"unknown parity {parity!r}")
    starts = {"integer": (0,), "half": (1,), "both": (0, 1)}[parity]
    for start in starts:
        for j2 in range(start, j2max + 1, 2):
            rng = range(-j2, j2 + 1, 2)
            for m2, q2 in itertools.product(rng, rng):
                yield IndexTriple(j2, m2, q2)
