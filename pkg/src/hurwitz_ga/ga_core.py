"""Exact multivector arithmetic for the 3D geometric algebras G(p,q).

Blades are encoded as bitmasks in [0, 7]: bit i is set iff the generator
e_{i+1} appears in the blade.  Coefficients are exact rationals
(:class:`fractions.Fraction`); there is no floating-point mode.

Two basis orderings are used throughout:

- internal storage order: blade-mask order 0..7, i.e.
  (1, e1, e2, e12, e3, e13, e23, e123);
- textual/canonical order: (1, e1, e2, e3, e12, e23, e13, e123), which is
  also the order of :data:`BLADE_MASKS` and of rendered Cayley tables;
- coefficient order x0..x7: (1, e12, e23, e13, e1, e2, e3, e123), used by
  the diagonal norm formulas (see :data:`X_ORDER_MASKS`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from random import Random
from typing import Iterable

try:
    # Same exact-rational semantics as Fraction, roughly 10x faster.
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover
    Rat = Fraction

#: Blade labels in canonical textual order.
BLADE_LABELS = ("1", "e1", "e2", "e3", "e12", "e23", "e13", "e123")

#: Blade masks in canonical textual order (parallel to BLADE_LABELS).
BLADE_MASKS = (0b000, 0b001, 0b010, 0b100, 0b011, 0b110, 0b101, 0b111)

MASK_TO_LABEL = dict(zip(BLADE_MASKS, BLADE_LABELS))
LABEL_TO_MASK = dict(zip(BLADE_LABELS, BLADE_MASKS))

#: Blade masks in x0..x7 coefficient order: even part (1, e12, e23, e13)
#: then odd part (e1, e2, e3, e123).
X_ORDER_MASKS = (0b000, 0b011, 0b110, 0b101, 0b001, 0b010, 0b100, 0b111)

_ZERO = Rat(0)
_ONE = Rat(1)


def grade(mask: int) -> int:
    """Number of generators in the blade (0..3)."""
    return bin(mask).count("1")


@dataclass(frozen=True)
class Signature:
    """Diagonal metric (lambda1, lambda2, lambda3), each entry +1 or -1."""

    lambdas: tuple[int, int, int]

    # Metric triples used for the canonical representative of each (p, q).
    # G(1,2) is deliberately (-1,-1,1): the diagonal norm formulas below
    # depend on this particular ordering of the signs.
    _CANONICAL = {
        (3, 0): (1, 1, 1),
        (2, 1): (1, 1, -1),
        (1, 2): (-1, -1, 1),
        (0, 3): (-1, -1, -1),
    }

    def __post_init__(self) -> None:
        lam = tuple(self.lambdas)
        if len(lam) != 3 or any(v not in (1, -1) for v in lam):
            raise ValueError(f"metric signs must be a triple of +/-1, got {self.lambdas!r}")
        object.__setattr__(self, "lambdas", lam)

    @classmethod
    def from_pq(cls, p: int, q: int) -> "Signature":
        """Canonical signature for G(p,q); p+q must equal 3."""
        try:
            return cls(cls._CANONICAL[(p, q)])
        except KeyError:
            raise ValueError(f"(p, q) must be one of (3,0),(2,1),(1,2),(0,3), got ({p},{q})") from None

    @property
    def p(self) -> int:
        return sum(1 for v in self.lambdas if v == 1)

    @property
    def q(self) -> int:
        return sum(1 for v in self.lambdas if v == -1)

    def __str__(self) -> str:
        return f"G({self.p},{self.q})"


ALL_SIGNATURES = tuple(Signature.from_pq(p, 3 - p) for p in (3, 2, 1, 0))


def _reorder_sign(a: int, b: int) -> int:
    """Parity sign from sorting the concatenated generator lists of a and b."""
    a >>= 1
    swaps = 0
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return -1 if swaps & 1 else 1


def blade_product(a: int, b: int, sig: Signature) -> tuple[int, int]:
    """Product of two blades: returns (sign, mask) with mask = a XOR b.

    The sign is the transposition parity times the metric factor lambda_i
    for every generator appearing in both blades.
    """
    s = _reorder_sign(a, b)
    common = a & b
    for i in range(3):
        if common >> i & 1:
            s *= sig.lambdas[i]
    return s, a ^ b


@lru_cache(maxsize=None)
def _mult_table(lambdas: tuple[int, int, int]) -> tuple[tuple[tuple[int, int], ...], ...]:
    sig = Signature(lambdas)
    return tuple(
        tuple(blade_product(a, b, sig) for b in range(8)) for a in range(8)
    )


# Per-grade sign tables for the involutions, indexed by grade 0..3.
REVERSION_SIGNS = (1, 1, -1, -1)
INVERSION_SIGNS = (1, -1, 1, -1)
CLIFFORD_SIGNS = (1, -1, -1, 1)
FULL_GRADE_INVERSION_SIGNS = (1, -1, -1, -1)

_GRADE_OF_MASK = tuple(grade(m) for m in range(8))


def _as_rat(v) -> Rat:
    if isinstance(v, Rat):
        return v
    if isinstance(v, Rational):  # int, Fraction, ...
        return Rat(v)
    raise TypeError(f"coefficients must be exact rationals or ints, got {type(v).__name__}")


@dataclass(frozen=True)
class Multivector:
    """Element of G(p,q): 8 exact rational coefficients in blade-mask order."""

    sig: Signature
    coeffs: tuple[Rat, Rat, Rat, Rat, Rat, Rat, Rat, Rat]

    def __post_init__(self) -> None:
        if len(self.coeffs) != 8:
            raise ValueError("a multivector has exactly 8 coefficients")
        object.__setattr__(self, "coeffs", tuple(_as_rat(c) for c in self.coeffs))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, sig: Signature) -> "Multivector":
        return cls(sig, (_ZERO,) * 8)

    @classmethod
    def scalar(cls, sig: Signature, value) -> "Multivector":
        c = [_ZERO] * 8
        c[0] = _as_rat(value)
        return cls(sig, tuple(c))

    @classmethod
    def one(cls, sig: Signature) -> "Multivector":
        return cls.scalar(sig, 1)

    @classmethod
    def blade(cls, sig: Signature, mask: int, coeff=1) -> "Multivector":
        if not 0 <= mask <= 7:
            raise ValueError(f"blade mask out of range: {mask}")
        c = [_ZERO] * 8
        c[mask] = _as_rat(coeff)
        return cls(sig, tuple(c))

    @classmethod
    def from_x_coeffs(cls, sig: Signature, xs: Iterable) -> "Multivector":
        """Build from the 8 coefficients x0..x7 (even part then odd part)."""
        xs = tuple(xs)
        if len(xs) != 8:
            raise ValueError("expected 8 coefficients x0..x7")
        c = [_ZERO] * 8
        for x, mask in zip(xs, X_ORDER_MASKS):
            c[mask] = _as_rat(x)
        return cls(sig, tuple(c))

    # -- views -------------------------------------------------------------

    def x_coeffs(self) -> tuple[Rat, ...]:
        """Coefficients in x0..x7 order."""
        return tuple(self.coeffs[m] for m in X_ORDER_MASKS)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_scalar(self) -> bool:
        return not any(self.coeffs[1:])

    def scalar_part(self) -> Rat:
        return self.coeffs[0]

    # -- ring operations ---------------------------------------------------

    def _check_sig(self, other: "Multivector") -> None:
        if self.sig != other.sig:
            raise ValueError(f"signature mismatch: {self.sig} vs {other.sig}")

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check_sig(other)
        return Multivector(self.sig, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Multivector") -> "Multivector":
        self._check_sig(other)
        return Multivector(self.sig, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Multivector":
        return Multivector(self.sig, tuple(-a for a in self.coeffs))

    def scale(self, k) -> "Multivector":
        k = _as_rat(k)
        return Multivector(self.sig, tuple(k * a for a in self.coeffs))

    def __rmul__(self, k) -> "Multivector":
        return self.scale(k)

    def __mul__(self, other) -> "Multivector":
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        return self.scale(other)

    def __str__(self) -> str:
        return format_multivector(self)


def geometric_product(x: Multivector, y: Multivector) -> Multivector:
    """Bilinear extension of the blade product; exact."""
    x._check_sig(y)
    table = _mult_table(x.sig.lambdas)
    out = [_ZERO] * 8
    for a, ca in enumerate(x.coeffs):
        if not ca:
            continue
        row = table[a]
        for b, cb in enumerate(y.coeffs):
            if not cb:
                continue
            s, m = row[b]
            out[m] += ca * cb if s > 0 else -(ca * cb)
    return Multivector(x.sig, tuple(out))


def grade_select(x: Multivector, k: int) -> Multivector:
    """Keep only the grade-k part of x."""
    if k not in (0, 1, 2, 3):
        raise ValueError(f"grade must be in 0..3, got {k}")
    return Multivector(
        x.sig,
        tuple(c if _GRADE_OF_MASK[m] == k else _ZERO for m, c in enumerate(x.coeffs)),
    )


@dataclass(frozen=True)
class GradedParts:
    """Even (grades 0, 2) and odd (grades 1, 3) parts of a multivector."""

    even: Multivector
    odd: Multivector


def parity_split(x: Multivector) -> GradedParts:
    even = tuple(c if _GRADE_OF_MASK[m] % 2 == 0 else _ZERO for m, c in enumerate(x.coeffs))
    odd = tuple(c if _GRADE_OF_MASK[m] % 2 == 1 else _ZERO for m, c in enumerate(x.coeffs))
    return GradedParts(Multivector(x.sig, even), Multivector(x.sig, odd))


def inner(x: Multivector, y: Multivector) -> Multivector:
    """Symmetric part of the geometric product: (xy + yx)/2."""
    return (geometric_product(x, y) + geometric_product(y, x)).scale(Rat(1, 2))


def wedge(x: Multivector, y: Multivector) -> Multivector:
    """Antisymmetric part of the geometric product: (xy - yx)/2."""
    return (geometric_product(x, y) - geometric_product(y, x)).scale(Rat(1, 2))


def _apply_grade_signs(x: Multivector, signs: tuple[int, int, int, int]) -> Multivector:
    return Multivector(
        x.sig,
        tuple(c if signs[_GRADE_OF_MASK[m]] > 0 else -c for m, c in enumerate(x.coeffs)),
    )


def reversion(x: Multivector) -> Multivector:
    """Reverse the order of vector factors; grade signs (+, +, -, -)."""
    return _apply_grade_signs(x, REVERSION_SIGNS)


def inversion(x: Multivector) -> Multivector:
    """Negate every vector factor; grade signs (+, -, +, -)."""
    return _apply_grade_signs(x, INVERSION_SIGNS)


def clifford_conjugation(x: Multivector) -> Multivector:
    """Reversion composed with inversion; grade signs (+, -, -, +)."""
    return _apply_grade_signs(x, CLIFFORD_SIGNS)


def full_grade_inversion(x: Multivector) -> Multivector:
    """Negate all non-scalar grades: 2<x>_0 - x."""
    return _apply_grade_signs(x, FULL_GRADE_INVERSION_SIGNS)


# -- text form -------------------------------------------------------------

_TERM_RE = re.compile(
    r"^(?:"
    r"(?P<coeff>-?\d+(?:/\d+)?)(?:\*(?P<label1>e\d+|1))?"
    r"|(?P<sign>-?)(?P<label2>e\d+)"
    r")$"
)


def format_multivector(x: Multivector) -> str:
    """Render as `a0 + a1*e1 + ... + a7*e123`, skipping zero terms."""
    parts: list[str] = []
    for mask, label in zip(BLADE_MASKS, BLADE_LABELS):
        c = x.coeffs[mask]
        if not c:
            continue
        mag = c if c > 0 else -c
        body = str(mag) if label == "1" else (f"{mag}*{label}" if mag != 1 else label)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def parse_multivector(text: str, sig: Signature) -> Multivector:
    """Parse the text form produced by :func:`format_multivector`.

    Accepts terms like `3`, `-1/2`, `e12`, `-e123`, `3/2*e1`, `2*1`,
    joined by `+` or `-`.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty multivector literal")
    # Normalize into signed terms: turn binary +/- into term separators.
    s = s.replace("-", "+-").replace(" ", "")
    terms = [t for t in s.split("+") if t]
    coeffs = [_ZERO] * 8
    for term in terms:
        if term == "-":
            raise ValueError(f"dangling sign in {text!r}")
        m = _TERM_RE.match(term)
        if not m:
            raise ValueError(f"cannot parse term {term!r} in {text!r}")
        if m.group("coeff") is not None:
            coeff = Rat(m.group("coeff"))
            label = m.group("label1") or "1"
        else:
            coeff = Rat(-1) if m.group("sign") == "-" else Rat(1)
            label = m.group("label2")
        if label not in LABEL_TO_MASK:
            raise ValueError(f"unknown blade label {label!r} in {text!r}")
        coeffs[LABEL_TO_MASK[label]] += coeff
    return Multivector(sig, tuple(coeffs))


# -- randomized-test helpers ----------------------------------------------

RANDOM_NUMERATOR_RANGE = (-9, 9)
RANDOM_DENOMINATORS = (1, 2, 3)


def random_rational(rng: Random) -> Rat:
    lo, hi = RANDOM_NUMERATOR_RANGE
    return Rat(rng.randint(lo, hi), rng.choice(RANDOM_DENOMINATORS))


def random_multivector(sig: Signature, rng: Random) -> Multivector:
    return Multivector(sig, tuple(random_rational(rng) for _ in range(8)))


def random_vector(sig: Signature, rng: Random) -> Multivector:
    """Random grade-1 multivector."""
    c = [_ZERO] * 8
    for mask in (0b001, 0b010, 0b100):
        c[mask] = random_rational(rng)
    return Multivector(sig, tuple(c))
