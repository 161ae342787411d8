"""Structural identifications between G(p,q) and the canonical algebras.

Covers the even subalgebra (quaternionic type), the pseudoscalar subalgebra
(complex type), the biquaternion factorization G(p,q) = Ps(G) (x) G(p,q)+,
the dictionary between the Clifford involutions and the three biquaternion
conjugations, and a deterministic search for signed basis isomorphisms
between signed-monomial tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from hurwitz_ga.canonical import (
    _BIQ_CONJ_SIGNS,
    AlgebraTable,
    BIQUATERNION_LABELS,
    BiquaternionConjugation,
    HurwitzClass,
    InternalConsistencyError,
    build_biquaternion,
    build_table,
)
from hurwitz_ga.ga_core import (
    BLADE_LABELS,
    BLADE_MASKS,
    CLIFFORD_SIGNS,
    INVERSION_SIGNS,
    Multivector,
    Rat,
    REVERSION_SIGNS,
    Signature,
    blade_product,
    grade,
)
from hurwitz_ga.octonify import BulletVariant, classify

_ZERO = Rat(0)


# -- subalgebra tables -----------------------------------------------------

def _restricted_table(name: str, sig: Signature, masks: tuple[int, ...],
                      labels: tuple[str, ...], conj_signs: tuple[int, ...]) -> AlgebraTable:
    """Geometric product restricted to a set of blades; closure asserted."""
    index_of = {m: i for i, m in enumerate(masks)}
    prod = []
    for a in masks:
        row = []
        for b in masks:
            s, m = blade_product(a, b, sig)
            if m not in index_of:
                raise InternalConsistencyError(
                    f"{name} is not closed: product of masks {a},{b} leaves the span"
                )
            row.append((index_of[m], s))
        prod.append(tuple(row))
    return AlgebraTable(name, len(masks), labels, tuple(prod), conj_signs)


def even_subalgebra_table(sig: Signature) -> AlgebraTable:
    """The even subalgebra on (1, e12, e23, e13) under the geometric product."""
    return _restricted_table(
        f"even:{sig.p},{sig.q}",
        sig,
        (0b000, 0b011, 0b110, 0b101),
        ("1", "e12", "e23", "e13"),
        (1, -1, -1, -1),
    )


def pseudoscalar_table(sig: Signature) -> AlgebraTable:
    """The subalgebra spanned by (1, e123)."""
    return _restricted_table(
        f"ps:{sig.p},{sig.q}",
        sig,
        (0b000, 0b111),
        ("1", "e123"),
        (1, -1),
    )


def even_class(sig: Signature) -> HurwitzClass:
    """H when every bivector squares to -1, Hs otherwise."""
    l1, l2, l3 = sig.lambdas
    if l1 * l2 == l2 * l3 == l1 * l3 == 1:
        return HurwitzClass.H
    return HurwitzClass.Hs


def ps_class(sig: Signature) -> HurwitzClass:
    """C when the pseudoscalar squares to -1, Cs otherwise."""
    l1, l2, l3 = sig.lambdas
    return HurwitzClass.C if l1 * l2 * l3 == 1 else HurwitzClass.Cs


@dataclass(frozen=True)
class ClassificationRow:
    """One row of the signature-to-algebras correspondence table."""

    signature: Signature
    tensor_label: str
    even: HurwitzClass
    ps: HurwitzClass
    bullet_plus: HurwitzClass
    bullet_minus: HurwitzClass


def classification_row(sig: Signature) -> ClassificationRow:
    c, h = ps_class(sig), even_class(sig)
    return ClassificationRow(
        signature=sig,
        tensor_label=f"{c.value}x{h.value}",
        even=h,
        ps=c,
        bullet_plus=classify(sig, BulletVariant.PLUS),
        bullet_minus=classify(sig, BulletVariant.MINUS),
    )


# -- biquaternion factorization --------------------------------------------

def _biq_basis_blades(sig: Signature) -> tuple[tuple[int, int], ...]:
    """(mask, sign) of each biquaternion basis element realized in G(p,q).

    The identification is iota = e123, i = lambda2 e12, j = e23, k = e13.
    The lambda2 twist on i makes (e12)(e23) = lambda2 (e13) transport to
    the canonical relation i j = k entry-for-entry; without it the
    identification is an isomorphism only up to basis signs.  The products
    iota*i etc. are geometric products and land on +/- a single blade.
    """
    l2 = sig.lambdas[1]
    out = {
        0: (0b000, 1),    # 1
        1: (0b111, 1),    # iota
        2: (0b011, l2),   # i
        3: (0b110, 1),    # j
        4: (0b101, 1),    # k
    }
    for idx, (bivector, s0) in ((5, (0b011, l2)), (6, (0b110, 1)), (7, (0b101, 1))):
        s, m = blade_product(0b111, bivector, sig)
        out[idx] = (m, s0 * s)
    return tuple(out[i] for i in range(8))


@dataclass(frozen=True)
class BiquaternionCoords:
    """Four pseudoscalar-subalgebra coordinates (a + b e123) of a multivector.

    Reassembling z0 + z1 i + z2 j + z3 k with i = e12, j = e23, k = e13 and
    iota = e123 reproduces the source multivector.
    """

    sig: Signature
    z: tuple[tuple[Rat, Rat], tuple[Rat, Rat], tuple[Rat, Rat], tuple[Rat, Rat]]


def biquaternion_decompose(x: Multivector) -> BiquaternionCoords:
    blades = _biq_basis_blades(x.sig)
    c = [s * x.coeffs[m] for (m, s) in blades]
    return BiquaternionCoords(
        x.sig,
        (
            (c[0], c[1]),
            (c[2], c[5]),
            (c[3], c[6]),
            (c[4], c[7]),
        ),
    )


def biquaternion_recompose(coords: BiquaternionCoords) -> Multivector:
    blades = _biq_basis_blades(coords.sig)
    c = [
        coords.z[0][0], coords.z[0][1],
        coords.z[1][0], coords.z[2][0], coords.z[3][0],
        coords.z[1][1], coords.z[2][1], coords.z[3][1],
    ]
    out = [_ZERO] * 8
    for coeff, (m, s) in zip(c, blades):
        out[m] += coeff if s > 0 else -coeff
    return Multivector(coords.sig, tuple(out))


def tensor_factorization_holds(sig: Signature) -> bool:
    """G(p,q) = Ps(G) (x) G(p,q)+ entry-for-entry on all 64 basis pairs."""
    biq = build_biquaternion(ps_class(sig), even_class(sig))
    blades = _biq_basis_blades(sig)
    for a in range(8):
        ma, sa = blades[a]
        for b in range(8):
            mb, sb = blades[b]
            k, s = biq.product[a][b]
            mk, sk = blades[k]
            gs, gm = blade_product(ma, mb, sig)
            if gm != mk or sa * sb * gs != s * sk:
                return False
    return True


_INVOLUTION_PAIRS = (
    ("reversion", REVERSION_SIGNS, BiquaternionConjugation.DAGGER),
    ("inversion", INVERSION_SIGNS, BiquaternionConjugation.BAR),
    ("clifford_conjugation", CLIFFORD_SIGNS, BiquaternionConjugation.TILDE),
)


def involution_dictionary(sig: Signature) -> dict[str, str]:
    """Verified correspondence involution <-> biquaternion conjugation.

    Checks every pairing on all 8 basis elements; a mismatch raises with
    the offending element named.
    """
    blades = _biq_basis_blades(sig)
    result = {}
    for name, grade_signs, conj in _INVOLUTION_PAIRS:
        conj_signs = _BIQ_CONJ_SIGNS[conj]
        for idx, (mask, _) in enumerate(blades):
            ga_sign = grade_signs[grade(mask)]
            if ga_sign != conj_signs[idx]:
                raise InternalConsistencyError(
                    f"{name} does not match {conj.value} on basis element "
                    f"{BIQUATERNION_LABELS[idx]} in {sig}"
                )
        result[name] = conj.value
    return result


# -- signed basis isomorphism search ---------------------------------------

@dataclass(frozen=True)
class IsomorphismWitness:
    """Signed basis permutation certifying an algebra isomorphism."""

    source: AlgebraTable
    target: AlgebraTable
    mapping: tuple[tuple[int, int], ...]  # source index -> (target index, sign)

    def to_json(self) -> dict:
        return {
            "source": self.source.name,
            "target": self.target.name,
            "map": [[k, s] for (k, s) in self.mapping],
        }


def verify_witness(w: IsomorphismWitness) -> bool:
    """Independent re-check: bijectivity, unit preservation, full product grid."""
    dim = w.source.dim
    if len(w.mapping) != dim:
        return False
    if sorted(k for k, _ in w.mapping) != list(range(dim)):
        return False
    if any(s not in (1, -1) for _, s in w.mapping):
        return False
    if w.mapping[w.source.unit_index] != (w.target.unit_index, 1):
        return False
    for i in range(dim):
        ti, si = w.mapping[i]
        for j in range(dim):
            tj, sj = w.mapping[j]
            k, s = w.source.product[i][j]
            tk_expected, sk = w.mapping[k]
            tk, st = w.target.product[ti][tj]
            if tk != tk_expected or si * sj * st != s * sk:
                return False
    return True


def _span_derivations(table: AlgebraTable, gens: tuple[int, ...]):
    """Express every basis index as a product of earlier-known elements.

    Returns an ordered list of (k, i, j, s) with basis_k = s * basis_i *
    basis_j, or None if the generators do not span.  Deterministic order.
    """
    known = [table.unit_index] + list(gens)
    deriv = []
    progress = True
    while progress and len(known) < table.dim:
        progress = False
        for i in list(known):
            for j in list(known):
                k, s = table.product[i][j]
                if s != 0 and k not in known:
                    deriv.append((k, i, j, s))
                    known.append(k)
                    progress = True
    return deriv if len(known) == table.dim else None


def _generating_set(table: AlgebraTable):
    """Smallest lexicographic generating set with its derivation list."""
    non_unit = [i for i in range(table.dim) if i != table.unit_index]
    if table.dim == 1:
        return (), []
    for size in range(1, 4):
        for gens in itertools.combinations(non_unit, size):
            deriv = _span_derivations(table, gens)
            if deriv is not None:
                return gens, deriv
    raise InternalConsistencyError(f"no generating set of size <= 3 for {table.name}")


def _square_sign(table: AlgebraTable, i: int) -> Optional[int]:
    k, s = table.product[i][i]
    return s if k == table.unit_index else None


def find_isomorphism(source: AlgebraTable, target: AlgebraTable) -> Optional[IsomorphismWitness]:
    """Deterministic search for a signed basis isomorphism.

    Generator images range over +/- the non-unit target basis elements,
    pruned by matching squares and pairwise (anti)commutation; the partial
    map is extended multiplicatively and verified on the full grid.
    Returns the first witness in search order, or None.
    """
    if source.dim != target.dim:
        return None
    if not (source.is_signed_monomial() and target.is_signed_monomial()):
        raise ValueError("isomorphism search requires signed-monomial tables")
    dim = source.dim
    if dim == 1:
        w = IsomorphismWitness(source, target, ((target.unit_index, 1),))
        return w if verify_witness(w) else None

    gens, deriv = _generating_set(source)
    non_unit_t = [i for i in range(dim) if i != target.unit_index]
    candidates = [(t, s) for t in non_unit_t for s in (1, -1)]
    gen_squares = [_square_sign(source, g) for g in gens]
    target_squares = {t: _square_sign(target, t) for t in non_unit_t}

    for images in itertools.product(candidates, repeat=len(gens)):
        # squares must match (image sign cancels when squaring)
        if any(
            gsq is not None and target_squares[t] != gsq
            for gsq, (t, _) in zip(gen_squares, images)
        ):
            continue
        if len({t for t, _ in images}) != len(images):
            continue
        ok = True
        for (a, (ta, sa)), (b, (tb, sb)) in itertools.combinations(
            zip(gens, images), 2
        ):
            k_ab, s_ab = source.product[a][b]
            k_ba, s_ba = source.product[b][a]
            tk_ab, ts_ab = target.product[ta][tb]
            tk_ba, ts_ba = target.product[tb][ta]
            # transport the commutation pattern a*b = r * (b*a)
            if (k_ab == k_ba) != (tk_ab == tk_ba):
                ok = False
                break
            if k_ab == k_ba and s_ab * s_ba != ts_ab * ts_ba:
                ok = False
                break
        if not ok:
            continue

        mapping: dict[int, tuple[int, int]] = {source.unit_index: (target.unit_index, 1)}
        for g, img in zip(gens, images):
            mapping[g] = img
        for (k, i, j, s) in deriv:
            ti, si = mapping[i]
            tj, sj = mapping[j]
            tk, st = target.product[ti][tj]
            if st == 0:
                ok = False
                break
            mapping[k] = (tk, s * si * sj * st)
        if not ok or len(mapping) != dim:
            continue
        if len({t for t, _ in mapping.values()}) != dim:
            continue
        w = IsomorphismWitness(
            source, target, tuple(mapping[i] for i in range(dim))
        )
        if verify_witness(w):
            return w
    return None
