"""Canonical Hurwitz tables: structure constants, norms, properties, export."""

import json
from random import Random

import pytest

from hurwitz_ga.canonical import (
    AlgebraTable,
    BiquaternionConjugation,
    HurwitzClass,
    biquaternion_conjugations,
    build_biquaternion,
    build_table,
    check_properties,
    conjugate,
    dump_table_json,
    find_zero_divisor,
    norm,
    norm_is_positive_definite,
    polarize,
    table_from_json,
    table_product,
    table_to_csv,
    table_to_text,
)

ALL_CLASSES = list(HurwitzClass)


@pytest.mark.parametrize("cls", ALL_CLASSES)
def test_tables_are_signed_monomial_and_unital(cls):
    t = build_table(cls)
    assert t.dim == cls.dim
    assert t.is_signed_monomial()
    unit = t.unit()
    for i in range(t.dim):
        b = t.basis_element(i)
        assert (unit * b).coords == b.coords
        assert (b * unit).coords == b.coords


def test_complex_tables():
    c = build_table(HurwitzClass.C)
    cs = build_table(HurwitzClass.Cs)
    assert c.product[1][1] == (0, -1)
    assert cs.product[1][1] == (0, 1)


def test_quaternion_table():
    h = build_table(HurwitzClass.H)
    lab = h.basis_labels
    assert lab == ("1", "e1", "e2", "e3")
    # i j = k and cyclic, anti-symmetric
    assert h.product[1][2] == (3, 1)
    assert h.product[2][3] == (1, 1)
    assert h.product[3][1] == (2, 1)
    assert h.product[2][1] == (3, -1)


def test_split_quaternion_table():
    hs = build_table(HurwitzClass.Hs)
    assert [hs.product[i][i] for i in (1, 2, 3)] == [(0, -1), (0, 1), (0, 1)]
    assert hs.product[1][2] == (3, 1)
    assert hs.product[2][1] == (3, -1)
    assert hs.product[3][2] == (1, 1)
    assert hs.product[2][3] == (1, -1)
    assert hs.product[1][3] == (2, -1)
    assert hs.product[3][1] == (2, 1)


def test_octonion_index_cycling_rule():
    # e_i e_{i+1} = e_{i+3} with indices 1..7 cycled mod 7
    o = build_table(HurwitzClass.O)
    for i in range(1, 8):
        j = i % 7 + 1
        k = (i + 2) % 7 + 1
        assert o.product[i][j] == (k, 1)
        assert o.product[j][i] == (k, -1)
    for i in range(1, 8):
        assert o.product[i][i] == (0, -1)


def test_split_octonion_table():
    os_ = build_table(HurwitzClass.Os)
    assert [os_.product[i][i][1] for i in range(1, 8)] == [-1, -1, -1, 1, 1, 1, 1]
    # the defining products of the oriented triples hold verbatim
    for (a, b, c) in ((1, 2, 3), (1, 5, 4), (1, 7, 6), (2, 6, 4), (2, 5, 7), (3, 7, 4), (3, 6, 5)):
        assert os_.product[a][b] == (c, 1)


@pytest.mark.parametrize("cls", ALL_CLASSES)
def test_conjugation_involution_and_norm(cls):
    t = build_table(cls)
    rng = Random(7)
    for _ in range(50):
        x = t.random_element(rng)
        assert conjugate(conjugate(x)).coords == x.coords
        # x conj(x) = N(x) 1 exactly
        prod = table_product(x, conjugate(x))
        assert prod.coords[t.unit_index] == norm(x)
        assert all(c == 0 for i, c in enumerate(prod.coords) if i != t.unit_index)


@pytest.mark.parametrize("cls", ALL_CLASSES)
def test_norm_is_multiplicative(cls):
    t = build_table(cls)
    rng = Random(11)
    for _ in range(200):
        x, y = t.random_element(rng), t.random_element(rng)
        assert norm(x * y) == norm(x) * norm(y)


def test_polarize_is_symmetric_bilinear():
    t = build_table(HurwitzClass.O)
    rng = Random(3)
    for _ in range(50):
        x, y, z = (t.random_element(rng) for _ in range(3))
        assert polarize(x, y) == polarize(y, x)
        assert polarize(x + z, y) == polarize(x, y) + polarize(z, y)


EXPECTED_PROPERTIES = {
    # (commutative, associative, alternative, flexible)
    HurwitzClass.R: (True, True, True, True),
    HurwitzClass.C: (True, True, True, True),
    HurwitzClass.Cs: (True, True, True, True),
    HurwitzClass.H: (False, True, True, True),
    HurwitzClass.Hs: (False, True, True, True),
    HurwitzClass.O: (False, False, True, True),
    HurwitzClass.Os: (False, False, True, True),
}


@pytest.mark.parametrize("cls", ALL_CLASSES)
def test_property_matrix(cls):
    rec = check_properties(build_table(cls), trials=200, seed=5)
    assert (rec.commutative, rec.associative, rec.alternative, rec.flexible) == (
        EXPECTED_PROPERTIES[cls]
    )
    assert rec.composition
    assert rec.ordered == (cls is HurwitzClass.R)


@pytest.mark.parametrize("cls", ALL_CLASSES)
def test_division_versus_zero_divisors(cls):
    t = build_table(cls)
    pair = find_zero_divisor(t)
    if cls.is_split:
        assert pair is not None
        x, y = pair
        assert (x * y).is_zero()
        assert not x.is_zero() and not y.is_zero()
        assert not norm_is_positive_definite(t)
    else:
        assert pair is None
        assert norm_is_positive_definite(t)


@pytest.mark.parametrize("c", (HurwitzClass.C, HurwitzClass.Cs))
@pytest.mark.parametrize("h", (HurwitzClass.H, HurwitzClass.Hs))
def test_biquaternion_structure(c, h):
    t = build_biquaternion(c, h)
    iota = t.basis_element(1)
    iota_sq = -1 if c is HurwitzClass.C else 1
    assert (iota * iota).coords == t.element([iota_sq] + [0] * 7).coords
    for i in range(8):
        b = t.basis_element(i)
        assert (iota * b).coords == (b * iota).coords  # iota central
    ht = build_table(h)
    # quaternion factor embeds as indices (0, 2, 3, 4)
    embed = (0, 2, 3, 4)
    for a in range(4):
        for b in range(4):
            qk, qs = ht.product[a][b]
            assert t.product[embed[a]][embed[b]] == (embed[qk], qs)


@pytest.mark.parametrize("c", (HurwitzClass.C, HurwitzClass.Cs))
@pytest.mark.parametrize("h", (HurwitzClass.H, HurwitzClass.Hs))
def test_biquaternions_fail_composition(c, h):
    rec = check_properties(build_biquaternion(c, h), trials=50, seed=5)
    assert rec.associative and not rec.commutative
    assert not rec.composition
    assert rec.composition_counterexample is not None


def test_dagger_is_bar_after_tilde():
    t = build_biquaternion(HurwitzClass.C, HurwitzClass.H)
    rng = Random(13)
    for _ in range(20):
        x = t.random_element(rng)
        via = biquaternion_conjugations(
            biquaternion_conjugations(x, BiquaternionConjugation.TILDE),
            BiquaternionConjugation.BAR,
        )
        direct = biquaternion_conjugations(x, BiquaternionConjugation.DAGGER)
        assert via.coords == direct.coords


@pytest.mark.parametrize("which", list(BiquaternionConjugation))
def test_biquaternion_conjugations_are_antiautomorphisms_or_automorphisms(which):
    # tilde and dagger reverse products, bar preserves them
    t = build_biquaternion(HurwitzClass.Cs, HurwitzClass.Hs)
    rng = Random(17)
    for _ in range(20):
        x, y = t.random_element(rng), t.random_element(rng)
        cxy = biquaternion_conjugations(x * y, which)
        cx = biquaternion_conjugations(x, which)
        cy = biquaternion_conjugations(y, which)
        if which is BiquaternionConjugation.BAR:
            assert cxy.coords == (cx * cy).coords
        else:
            assert cxy.coords == (cy * cx).coords


@pytest.mark.parametrize("cls", ALL_CLASSES)
def test_json_round_trip(cls):
    t = build_table(cls)
    assert table_from_json(json.loads(dump_table_json(t))) == t


def test_csv_and_text_render():
    t = build_table(HurwitzClass.H)
    csv_text = table_to_csv(t)
    assert csv_text.splitlines()[0] == "H,1,e1,e2,e3"
    assert "-e3" in csv_text
    grid = table_to_text(t)
    rows = grid.splitlines()
    assert len(rows) == 5
    assert rows[1].split()[0] == "1"


def test_invalid_table_rejected():
    with pytest.raises(ValueError):
        AlgebraTable(
            name="bad",
            dim=2,
            basis_labels=("1", "e1"),
            product=(((0, 1), (1, -1)), ((1, 1), (0, 1))),  # 1 * e1 = -e1 breaks the unit law
            conj_signs=(1, -1),
        )
