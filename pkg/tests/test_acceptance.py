"""Acceptance gate: the ten headline claims, checked end to end.

Arithmetic is exact rational, so every comparison below is equality with
zero tolerance.  Randomized criteria use a fixed seed and at least 10^4
samples where a sample count is part of the claim.  Each criterion prints
one PASS line on success (visible with pytest -s); a failure fails the
test with the first counterexample.
"""

import itertools
from random import Random

from hurwitz_ga.canonical import (
    BiquaternionConjugation,
    HurwitzClass,
    biquaternion_conjugations,
    build_biquaternion,
    build_table,
    check_properties,
    find_zero_divisor,
    norm_is_positive_definite,
)
from hurwitz_ga.ga_core import (
    ALL_SIGNATURES,
    BLADE_MASKS,
    Multivector,
    Signature,
    blade_product,
    clifford_conjugation,
    geometric_product,
    inversion,
    parity_split,
    random_multivector,
    reversion,
)
from hurwitz_ga.isomorphism import (
    BiquaternionCoords,
    biquaternion_decompose,
    biquaternion_recompose,
    classification_row,
    even_class,
    find_isomorphism,
    ps_class,
    tensor_factorization_holds,
    verify_witness,
)
from hurwitz_ga.octonify import (
    BulletVariant,
    bullet_product,
    cayley_table_bullet,
    check_composition,
    classify,
    nonassociativity_witness,
    norm_diagonal,
    octonion_norm,
    parity_norm_decomposition,
)

TRIALS = 10_000
SEED = 42

VARIANTS = (BulletVariant.PLUS, BulletVariant.MINUS)
INSTANCES = list(itertools.product(ALL_SIGNATURES, VARIANTS))


def report(n, text):
    print(f"criterion {n:2d} PASS  {text}")


def test_criterion_01_classification_table():
    expected = {
        (3, 0): ("CxH", "H", "C", "O", "Os"),
        (2, 1): ("CsxHs", "Hs", "Cs", "Os", "Os"),
        (1, 2): ("CxHs", "Hs", "C", "Os", "Os"),
        (0, 3): ("CsxH", "H", "Cs", "Os", "O"),
    }
    for (p, q), cells in expected.items():
        row = classification_row(Signature.from_pq(p, q))
        got = (
            row.tensor_label,
            row.even.value,
            row.ps.value,
            row.bullet_plus.value,
            row.bullet_minus.value,
        )
        for want, have in zip(cells, got):
            assert want == have, f"G({p},{q}): expected {cells}, got {got}"
    report(1, "classification quintuple matches on all 4 signatures x 5 cells")


def _coords_flat(coords):
    z = coords.z
    return (z[0][0], z[0][1], z[1][0], z[2][0], z[3][0], z[1][1], z[2][1], z[3][1])


def test_criterion_02_involution_dictionary():
    pairs = (
        (reversion, BiquaternionConjugation.DAGGER),
        (inversion, BiquaternionConjugation.BAR),
        (clifford_conjugation, BiquaternionConjugation.TILDE),
    )
    checked = 0
    for sig in ALL_SIGNATURES:
        biq = build_biquaternion(ps_class(sig), even_class(sig))
        for idx in range(8):
            e = biq.basis_element(idx)
            x = biquaternion_recompose(
                BiquaternionCoords(
                    sig,
                    (
                        (e.coords[0], e.coords[1]),
                        (e.coords[2], e.coords[5]),
                        (e.coords[3], e.coords[6]),
                        (e.coords[4], e.coords[7]),
                    ),
                )
            )
            for op, conj in pairs:
                lhs = _coords_flat(biquaternion_decompose(op(x)))
                rhs = biquaternion_conjugations(e, conj).coords
                assert lhs == rhs, (sig, idx, conj)
                checked += 1
    assert checked == 4 * 8 * 3
    report(2, "involutions match biquaternion conjugations: 96/96 basis cases")


def test_criterion_03_property_matrix():
    expected = {
        HurwitzClass.R: (True, True, True, True),
        HurwitzClass.C: (True, True, True, True),
        HurwitzClass.Cs: (True, True, True, True),
        HurwitzClass.H: (False, True, True, True),
        HurwitzClass.Hs: (False, True, True, True),
        HurwitzClass.O: (False, False, True, True),
        HurwitzClass.Os: (False, False, True, True),
    }
    for cls, flags in expected.items():
        t = build_table(cls)
        rec = check_properties(t, trials=500, seed=SEED)
        got = (rec.commutative, rec.associative, rec.alternative, rec.flexible)
        assert got == flags, (cls, got)
        assert rec.composition, cls
        if cls.is_split:
            x, y = find_zero_divisor(t)
            assert (x * y).is_zero() and not x.is_zero() and not y.is_zero()
        else:
            assert norm_is_positive_definite(t), cls
    report(3, "property matrix and division/zero-divisor status on all 7 tables")


def test_criterion_04_composition_property():
    for sig, variant in INSTANCES:
        ok, cex = check_composition(sig, variant, trials=TRIALS, seed=SEED)
        assert ok, (sig, variant.value, cex)
    report(4, f"N(x.y) = N(x)N(y): 64 basis pairs + {TRIALS} random pairs x 8 products")


def test_criterion_05_norm_identities():
    for sig in ALL_SIGNATURES:
        rng = Random(SEED)
        for _ in range(TRIALS):
            x = random_multivector(sig, rng)
            n = octonion_norm(x, BulletVariant.PLUS)
            assert geometric_product(x, reversion(x)).scalar_part() == n, (sig, x)
            ne, no = parity_norm_decomposition(x)
            assert ne + no == n, (sig, x)
    report(5, f"scalar-part(x rev x) = N(x) = N(x+) + N(x-) on {TRIALS} samples x 4")


def test_criterion_06_norm_diagonals():
    expected_plus = {
        (3, 0): (1, 1, 1, 1, 1, 1, 1, 1),
        (0, 3): (1, 1, 1, 1, -1, -1, -1, -1),
        (2, 1): (1, 1, -1, -1, 1, 1, -1, -1),
        (1, 2): (1, 1, -1, -1, -1, -1, 1, 1),
    }
    for (p, q), diag in expected_plus.items():
        sig = Signature.from_pq(p, q)
        assert norm_diagonal(sig, BulletVariant.PLUS) == diag, (p, q)
        flipped = diag[:4] + tuple(-s for s in diag[4:])
        assert norm_diagonal(sig, BulletVariant.MINUS) == flipped, (p, q)
    report(6, "all 8 norm diagonals match the explicit forms")


def test_criterion_07_isomorphism_witnesses():
    for sig, variant in INSTANCES:
        source = cayley_table_bullet(sig, variant)
        cls = classify(sig, variant)
        w = find_isomorphism(source, build_table(cls))
        assert w is not None, (sig, variant.value)
        assert verify_witness(w), (sig, variant.value)
        other = HurwitzClass.Os if cls is HurwitzClass.O else HurwitzClass.O
        assert find_isomorphism(source, build_table(other)) is None, (sig, variant.value)
    report(7, "verified witness onto the classified table, none onto the other, x 8")


def test_criterion_08_nonassociativity_and_alternativity():
    for sig, variant in INSTANCES:
        x, y, z = nonassociativity_witness(sig, variant)
        lhs = bullet_product(bullet_product(x, y, variant), z, variant)
        rhs = bullet_product(x, bullet_product(y, z, variant), variant)
        assert lhs != rhs, (sig, variant.value)
        basis = [Multivector.blade(sig, m) for m in BLADE_MASKS]
        for a in basis:
            for b in basis:
                assert _alt(a, b, variant), (sig, variant.value, a, b)
        rng = Random(SEED)
        for _ in range(TRIALS):
            a = random_multivector(sig, rng)
            b = random_multivector(sig, rng)
            assert _alt(a, b, variant), (sig, variant.value, a, b)
    report(8, f"associator witness found, alternativity on basis + {TRIALS} random, x 8")


def _alt(x, y, variant):
    xx = bullet_product(x, x, variant)
    return bullet_product(xx, y, variant) == bullet_product(
        x, bullet_product(x, y, variant), variant
    ) and bullet_product(bullet_product(y, x, variant), x, variant) == bullet_product(
        y, xx, variant
    )


def test_criterion_09_tensor_factorization():
    for sig in ALL_SIGNATURES:
        assert tensor_factorization_holds(sig), sig
    report(9, "transported product equals the biquaternion table, 4 signatures")


def test_criterion_10_geometric_product_axioms():
    for sig in ALL_SIGNATURES:
        rng = Random(SEED)
        for _ in range(TRIALS):
            x = random_multivector(sig, rng)
            y = random_multivector(sig, rng)
            z = random_multivector(sig, rng)
            assert geometric_product(geometric_product(x, y), z) == geometric_product(
                x, geometric_product(y, z)
            ), (sig, x, y, z)
        ps = Multivector.blade(sig, 0b111)
        for mask in range(8):
            b = Multivector.blade(sig, mask)
            assert geometric_product(ps, b) == geometric_product(b, ps), (sig, mask)
        l1, l2, l3 = sig.lambdas
        squares = {
            0b001: l1, 0b010: l2, 0b100: l3,
            0b011: -l1 * l2, 0b110: -l2 * l3, 0b101: -l1 * l3,
            0b111: -l1 * l2 * l3,
        }
        for mask, sq in squares.items():
            assert blade_product(mask, mask, sig) == (sq, 0), (sig, mask)
    report(10, f"associativity on {TRIALS} triples x 4, centrality, squared relations")
