"""Octonionic products on G(p,q).

The geometric product is associative and therefore cannot realize the
octonions directly.  Splitting a multivector into its even and odd parts
x = (x+, x-) and recombining the half-products with a Clifford-conjugation
twist gives a new bilinear product

    (x+, x-) . (y+, y-) = (x+ y+  +/-  cc(y-) x-,  y- x+ + x- cc(y+))

(plus variant uses +, minus variant uses -; cc is Clifford conjugation).
With the norm N(x) = <x rev(x)>_0 this turns every G(p,q) into an
octonion or split-octonion algebra, decided by the definiteness of N.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from random import Random
from typing import Optional

from hurwitz_ga.canonical import AlgebraTable, HurwitzClass, InternalConsistencyError
from hurwitz_ga.ga_core import (
    BLADE_LABELS,
    BLADE_MASKS,
    MASK_TO_LABEL,
    Multivector,
    Rat,
    Signature,
    X_ORDER_MASKS,
    clifford_conjugation,
    full_grade_inversion,
    geometric_product,
    parity_split,
    random_multivector,
)


class BulletVariant(Enum):
    PLUS = "+"
    MINUS = "-"


def bullet_product_componentwise(
    x: Multivector, y: Multivector, variant: BulletVariant = BulletVariant.PLUS
) -> Multivector:
    """The ordered-pair definition, computed literally from the half-products."""
    x._check_sig(y)
    xs, ys = parity_split(x), parity_split(y)
    cross = geometric_product(clifford_conjugation(ys.odd), xs.odd)
    even = geometric_product(xs.even, ys.even)
    even = even + cross if variant is BulletVariant.PLUS else even - cross
    odd = geometric_product(ys.odd, xs.even) + geometric_product(
        xs.odd, clifford_conjugation(ys.even)
    )
    return even + odd


@lru_cache(maxsize=None)
def _bullet_blade_table(lambdas, variant: BulletVariant):
    """(sign, mask) of the bullet product on every ordered blade pair.

    Built once from the componentwise definition; the product of two
    blades is always +/- a single blade.
    """
    sig = Signature(lambdas)
    table = []
    for a in range(8):
        row = []
        for b in range(8):
            r = bullet_product_componentwise(
                Multivector.blade(sig, a), Multivector.blade(sig, b), variant
            )
            support = [(m, c) for m, c in enumerate(r.coeffs) if c]
            if len(support) != 1 or support[0][1] not in (1, -1):
                raise InternalConsistencyError(
                    f"bullet product of blade masks {a}, {b} is not a signed blade: {r}"
                )
            row.append((int(support[0][1]), support[0][0]))
        table.append(tuple(row))
    return tuple(table)


def bullet_product(x: Multivector, y: Multivector, variant: BulletVariant = BulletVariant.PLUS) -> Multivector:
    """The modified product; bilinear and unital with unit 1.

    Bilinear extension of the blade-level table; agrees with
    :func:`bullet_product_componentwise` identically.
    """
    x._check_sig(y)
    table = _bullet_blade_table(x.sig.lambdas, variant)
    out = [Rat(0)] * 8
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


def octonion_conjugate(x: Multivector) -> Multivector:
    """Conjugation of the octonionic algebra: the full grade inversion.

    Equals (cc(x+), -x-) componentwise; the two constructions coincide
    because Clifford conjugation restricted to even multivectors negates
    exactly the bivectors.
    """
    return full_grade_inversion(x)


def norm_diagonal(sig: Signature, variant: BulletVariant = BulletVariant.PLUS) -> tuple[int, ...]:
    """Signs of N on the basis, in coefficient order x0..x7.

    Plus variant: (1, l1 l2, l2 l3, l1 l3, l1, l2, l3, l1 l2 l3); the minus
    variant negates the four odd-part entries.
    """
    l1, l2, l3 = sig.lambdas
    signs = [1, l1 * l2, l2 * l3, l1 * l3, l1, l2, l3, l1 * l2 * l3]
    if variant is BulletVariant.MINUS:
        signs[4:] = [-s for s in signs[4:]]
    return tuple(signs)


def octonion_norm(x: Multivector, variant: BulletVariant = BulletVariant.PLUS) -> Rat:
    """The octonionic norm N(x).

    For the plus variant this is the scalar part of x rev(x), which equals
    the diagonal form sum_i sign_i x_i^2.  For the minus variant the
    diagonal form (with odd signs flipped) is the definition.
    """
    signs = norm_diagonal(x.sig, variant)
    xs = x.x_coeffs()
    total = Rat(0)
    for s, c in zip(signs, xs):
        total += c * c if s > 0 else -(c * c)
    return total


def parity_norm_decomposition(x: Multivector) -> tuple[Rat, Rat]:
    """(N(x+), N(x-)); the sum equals octonion_norm(x) for the plus variant."""
    parts = parity_split(x)
    return octonion_norm(parts.even), octonion_norm(parts.odd)


def classify(sig: Signature, variant: BulletVariant = BulletVariant.PLUS) -> HurwitzClass:
    """O if N is positive definite, else Os (signature (4,4))."""
    signs = norm_diagonal(sig, variant)
    if all(s == 1 for s in signs):
        return HurwitzClass.O
    if sorted(signs) != [-1] * 4 + [1] * 4:
        raise InternalConsistencyError(f"unexpected norm diagonal {signs} for {sig}")
    return HurwitzClass.Os


def check_composition(
    sig: Signature,
    variant: BulletVariant = BulletVariant.PLUS,
    trials: int = 10_000,
    seed: int = 0,
) -> tuple[bool, Optional[tuple[Multivector, Multivector]]]:
    """Exact check of N(x . y) = N(x) N(y).

    Runs the full 8x8 basis-pair grid plus `trials` random rational pairs;
    returns (True, None) or (False, first counterexample).
    """
    basis = [Multivector.blade(sig, m) for m in BLADE_MASKS]
    for x in basis:
        for y in basis:
            if not _composition_holds(x, y, variant):
                return False, (x, y)
    rng = Random(seed)
    for _ in range(trials):
        x = random_multivector(sig, rng)
        y = random_multivector(sig, rng)
        if not _composition_holds(x, y, variant):
            return False, (x, y)
    return True, None


def _composition_holds(x: Multivector, y: Multivector, variant: BulletVariant) -> bool:
    return octonion_norm(bullet_product(x, y, variant), variant) == octonion_norm(
        x, variant
    ) * octonion_norm(y, variant)


def nonassociativity_witness(
    sig: Signature, variant: BulletVariant = BulletVariant.PLUS
) -> tuple[Multivector, Multivector, Multivector]:
    """First basis triple (in canonical textual order) with a nonzero associator.

    Exhaustive over the 512 blade triples; absence of a witness would
    contradict the octonionic classification, so it raises.
    """
    basis = [Multivector.blade(sig, m) for m in BLADE_MASKS]
    for x in basis:
        for y in basis:
            for z in basis:
                lhs = bullet_product(bullet_product(x, y, variant), z, variant)
                rhs = bullet_product(x, bullet_product(y, z, variant), variant)
                if lhs.coeffs != rhs.coeffs:
                    return (x, y, z)
    raise InternalConsistencyError(
        f"no associator witness found for {sig} variant {variant.value}; "
        "the bullet algebra cannot be octonionic"
    )


def cayley_table_bullet(sig: Signature, variant: BulletVariant = BulletVariant.PLUS) -> AlgebraTable:
    """Materialize the bullet product on the blade basis as a signed table.

    The product of two blades under the bullet product is always +/- a
    single blade; anything else indicates a broken kernel and raises.
    """
    table = _bullet_blade_table(sig.lambdas, variant)
    prod = []
    for a in BLADE_MASKS:
        row = []
        for b in BLADE_MASKS:
            s, mask = table[a][b]
            row.append((BLADE_MASKS.index(mask), s))
        prod.append(tuple(row))
    return AlgebraTable(
        name=f"bullet:{sig.p},{sig.q}:{variant.value}",
        dim=8,
        basis_labels=BLADE_LABELS,
        product=tuple(prod),
        conj_signs=(1,) + (-1,) * 7,
    )


def zero_divisor_witness(
    sig: Signature, variant: BulletVariant = BulletVariant.PLUS
) -> Optional[tuple[Multivector, Multivector]]:
    """A pair (x, y) with x . y = 0 and N(x) = 0, or None in the division case.

    In a split bullet algebra any x combining a +1 and a -1 entry of the
    norm diagonal is isotropic, and then x . x* = N(x) 1 = 0.
    """
    signs = norm_diagonal(sig, variant)
    if all(s == 1 for s in signs):
        return None
    neg = next(i for i, s in enumerate(signs) if s == -1)
    xs = [0] * 8
    xs[0] = 1
    xs[neg] = 1
    x = Multivector.from_x_coeffs(sig, xs)
    y = octonion_conjugate(x)
    if octonion_norm(x, variant) != 0 or not bullet_product(x, y, variant).is_zero():
        raise InternalConsistencyError(
            f"isotropic construction failed for {sig} variant {variant.value}"
        )
    return x, y
