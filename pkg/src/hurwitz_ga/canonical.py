"""Structure-constant tables for the seven Hurwitz algebras and the four
biquaternion algebras, with conjugation, norm, and property checkers.

Every table here is *signed-monomial*: the product of two basis elements is
always +/- a single basis element.  Products are stored as (target_index,
sign) pairs; a sign of 0 would denote a vanishing product but never occurs
in the canonical tables.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from enum import Enum
from random import Random
from typing import Optional

from hurwitz_ga.ga_core import Rat, _as_rat, random_rational

_ZERO = Rat(0)


class InternalConsistencyError(RuntimeError):
    """A table violated an invariant it is supposed to guarantee."""


class HurwitzClass(Enum):
    R = "R"
    C = "C"
    Cs = "Cs"
    H = "H"
    Hs = "Hs"
    O = "O"
    Os = "Os"

    @property
    def dim(self) -> int:
        return {"R": 1, "C": 2, "Cs": 2, "H": 4, "Hs": 4, "O": 8, "Os": 8}[self.value]

    @property
    def is_split(self) -> bool:
        return self.value.endswith("s")


@dataclass(frozen=True)
class AlgebraTable:
    """n x n signed-monomial structure constants plus conjugation signs."""

    name: str
    dim: int
    basis_labels: tuple[str, ...]
    product: tuple[tuple[tuple[int, int], ...], ...]  # [i][j] -> (k, sign)
    conj_signs: tuple[int, ...]
    unit_index: int = 0

    def __post_init__(self) -> None:
        if len(self.basis_labels) != self.dim or len(self.conj_signs) != self.dim:
            raise ValueError("basis_labels/conj_signs length must equal dim")
        if len(self.product) != self.dim or any(len(r) != self.dim for r in self.product):
            raise ValueError("product must be dim x dim")
        u = self.unit_index
        if self.conj_signs[u] != 1:
            raise ValueError("conjugation must fix the unit")
        for j in range(self.dim):
            if self.product[u][j] != (j, 1) or self.product[j][u] != (j, 1):
                raise ValueError(f"unit law fails at basis index {j}")

    def is_signed_monomial(self) -> bool:
        return all(s in (1, -1) for row in self.product for (_, s) in row)

    def basis_element(self, i: int) -> "Element":
        coords = [_ZERO] * self.dim
        coords[i] = Rat(1)
        return Element(self, tuple(coords))

    def unit(self) -> "Element":
        return self.basis_element(self.unit_index)

    def zero(self) -> "Element":
        return Element(self, (_ZERO,) * self.dim)

    def element(self, coords) -> "Element":
        return Element(self, tuple(_as_rat(c) for c in coords))

    def random_element(self, rng: Random) -> "Element":
        return Element(self, tuple(random_rational(rng) for _ in range(self.dim)))


@dataclass(frozen=True)
class Element:
    """Exact-rational linear combination of table basis elements."""

    table: AlgebraTable
    coords: tuple[Rat, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.table.dim:
            raise ValueError("coordinate count must equal table dimension")

    def _check_table(self, other: "Element") -> None:
        if self.table is not other.table and self.table != other.table:
            raise ValueError("elements belong to different tables")

    def __add__(self, other: "Element") -> "Element":
        self._check_table(other)
        return Element(self.table, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Element") -> "Element":
        self._check_table(other)
        return Element(self.table, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Element":
        return Element(self.table, tuple(-a for a in self.coords))

    def __mul__(self, other: "Element") -> "Element":
        return table_product(self, other)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        parts = []
        for c, label in zip(self.coords, self.table.basis_labels):
            if not c:
                continue
            mag = c if c > 0 else -c
            body = str(mag) if label == "1" else (label if mag == 1 else f"{mag}*{label}")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"


def table_product(u: Element, v: Element) -> Element:
    """Bilinear expansion of the structure constants; exact."""
    u._check_table(v)
    t = u.table
    out = [_ZERO] * t.dim
    for i, ci in enumerate(u.coords):
        if not ci:
            continue
        row = t.product[i]
        for j, cj in enumerate(v.coords):
            if not cj:
                continue
            k, s = row[j]
            if s:
                out[k] += ci * cj if s > 0 else -(ci * cj)
    return Element(t, tuple(out))


def conjugate(u: Element) -> Element:
    """Table conjugation: negates every basis element with conj sign -1."""
    return Element(
        u.table,
        tuple(c if s > 0 else -c for c, s in zip(u.coords, u.table.conj_signs)),
    )


def norm(u: Element) -> Rat:
    """Quadratic form n(u) defined by u * conj(u) = n(u) * unit."""
    p = table_product(u, conjugate(u))
    unit = u.table.unit_index
    if any(c for i, c in enumerate(p.coords) if i != unit):
        raise InternalConsistencyError(
            f"u*conj(u) is not scalar in {u.table.name}: u={u}, product={p}"
        )
    return p.coords[unit]


def polarize(u: Element, v: Element) -> Rat:
    """Symmetric bilinear form n(u+v) - n(u) - n(v)."""
    return norm(u + v) - norm(u) - norm(v)


# -- canonical table construction ------------------------------------------

def _imaginary_table(name: str, n_imag: int, squares: tuple[int, ...],
                     triples: tuple[tuple[int, int, int], ...]) -> AlgebraTable:
    """Build a unital table from imaginary squares and oriented triples.

    Each triple (a, b, c) of 1-based imaginary indices means
    e_a e_b = e_c.  The remaining in-line products follow the
    metric-weighted completion: for each cyclic shift (x, y, z) of
    (a, b, c), e_x e_y = (e_c^2 e_z^2) e_z, with swaps flipping the sign.
    When all imaginary squares are -1 this is the plain cyclic rule; with
    mixed squares it is the unique completion that keeps the printed
    products and a multiplicative norm.  Every unordered pair of distinct
    imaginary indices must be covered by exactly one triple.
    """
    dim = n_imag + 1
    prod: list[list[Optional[tuple[int, int]]]] = [[None] * dim for _ in range(dim)]
    for j in range(dim):
        prod[0][j] = (j, 1)
        prod[j][0] = (j, 1)
    for i in range(1, dim):
        prod[i][i] = (0, squares[i - 1])
    seen_pairs = set()
    for (a, b, c) in triples:
        for (x, y, z) in ((a, b, c), (b, c, a), (c, a, b)):
            pair = frozenset((x, y))
            if pair in seen_pairs:
                raise ValueError(f"pair {set(pair)} covered twice in {name}")
            seen_pairs.add(pair)
            s = squares[c - 1] * squares[z - 1]
            prod[x][y] = (z, s)
            prod[y][x] = (z, -s)
    if len(seen_pairs) != n_imag * (n_imag - 1) // 2:
        raise ValueError(f"triples of {name} do not cover every imaginary pair")
    labels = ("1",) + tuple(f"e{i}" for i in range(1, dim))
    return AlgebraTable(
        name=name,
        dim=dim,
        basis_labels=labels,
        product=tuple(tuple(row) for row in prod),  # type: ignore[arg-type]
        conj_signs=(1,) + (-1,) * n_imag,
    )


# Octonion triples from e_i e_{i+1} = e_{i+3} with 1-based indices mod 7.
_O_TRIPLES = tuple(
    (i, i % 7 + 1, (i + 2) % 7 + 1) for i in range(1, 8)
)

# Split-octonion positive Levi-Civita triples.
_OS_TRIPLES = ((1, 2, 3), (1, 5, 4), (1, 7, 6), (2, 6, 4), (2, 5, 7), (3, 7, 4), (3, 6, 5))

def _build_hs() -> AlgebraTable:
    t = _imaginary_table("Hs", 3, (-1, 1, 1), ((1, 2, 3),))
    # The split rule e_{i+1} e_i = (-1)^i e_{i+2} (indices mod 3) reads
    #   e2 e1 = -e3,  e3 e2 = +e1,  e1 e3 = -e2,
    # which differs from the cyclic orientation of (1,2,3) only in the
    # sign of e2 e3 / e3 e2.
    prod = [list(row) for row in t.product]
    prod[1][2] = (3, 1)
    prod[2][1] = (3, -1)
    prod[3][2] = (1, 1)
    prod[2][3] = (1, -1)
    prod[1][3] = (2, -1)
    prod[3][1] = (2, 1)
    return AlgebraTable(
        name="Hs",
        dim=4,
        basis_labels=t.basis_labels,
        product=tuple(tuple(row) for row in prod),
        conj_signs=t.conj_signs,
    )


def build_table(cls: HurwitzClass) -> AlgebraTable:
    """Canonical structure-constant table for a Hurwitz algebra."""
    if cls is HurwitzClass.R:
        return AlgebraTable("R", 1, ("1",), (((0, 1),),), (1,))
    if cls is HurwitzClass.C:
        return _imaginary_table("C", 1, (-1,), ())
    if cls is HurwitzClass.Cs:
        return _imaginary_table("Cs", 1, (1,), ())
    if cls is HurwitzClass.H:
        return _imaginary_table("H", 3, (-1, -1, -1), ((1, 2, 3),))
    if cls is HurwitzClass.Hs:
        return _build_hs()
    if cls is HurwitzClass.O:
        return _imaginary_table("O", 7, (-1,) * 7, _O_TRIPLES)
    if cls is HurwitzClass.Os:
        return _imaginary_table("Os", 7, (-1, -1, -1, 1, 1, 1, 1), _OS_TRIPLES)
    raise ValueError(f"unknown Hurwitz class {cls!r}")


# -- biquaternion algebras -------------------------------------------------

BIQUATERNION_LABELS = ("1", "iota", "i", "j", "k", "iota*i", "iota*j", "iota*k")

# index -> (iota power, quaternion basis index in (1, i, j, k))
_BIQ_FACTORS = ((0, 0), (1, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3))
_BIQ_INDEX = {f: i for i, f in enumerate(_BIQ_FACTORS)}


def build_biquaternion(c: HurwitzClass, h: HurwitzClass) -> AlgebraTable:
    """Tensor-product table C (x) H on the basis (1, iota, i, j, k, iota*i, ...).

    iota is central with iota^2 = -1 for C and +1 for Cs; the quaternion
    factor follows the H or Hs table with (i, j, k) = (e1, e2, e3).
    """
    if c not in (HurwitzClass.C, HurwitzClass.Cs):
        raise ValueError(f"complex factor must be C or Cs, got {c}")
    if h not in (HurwitzClass.H, HurwitzClass.Hs):
        raise ValueError(f"quaternion factor must be H or Hs, got {h}")
    iota_sq = -1 if c is HurwitzClass.C else 1
    ht = build_table(h)
    prod = []
    for a in range(8):
        ca, qa = _BIQ_FACTORS[a]
        row = []
        for b in range(8):
            cb, qb = _BIQ_FACTORS[b]
            qk, qs = ht.product[qa][qb]
            sign = qs
            cpow = ca + cb
            if cpow == 2:
                cpow = 0
                sign *= iota_sq
            row.append((_BIQ_INDEX[(cpow, qk)], sign))
        prod.append(tuple(row))
    return AlgebraTable(
        name=f"{c.value}x{h.value}",
        dim=8,
        basis_labels=BIQUATERNION_LABELS,
        product=tuple(prod),
        conj_signs=(1,) + (-1,) * 7,
    )


class BiquaternionConjugation(Enum):
    TILDE = "tilde"    # z (x) q~  : quaternionic conjugation only
    BAR = "bar"        # z- (x) q  : complex conjugation only
    DAGGER = "dagger"  # z- (x) q~ : both


# Per-basis signs of the three conjugations on (1, iota, i, j, k, iota*i, ...).
_BIQ_CONJ_SIGNS = {
    BiquaternionConjugation.TILDE: (1, 1, -1, -1, -1, -1, -1, -1),
    BiquaternionConjugation.BAR: (1, -1, 1, 1, 1, -1, -1, -1),
    BiquaternionConjugation.DAGGER: (1, -1, -1, -1, -1, 1, 1, 1),
}


def biquaternion_conjugations(x: Element, which: BiquaternionConjugation) -> Element:
    """One of the three inherited conjugations of a biquaternion algebra.

    dagger is by definition bar composed with tilde; the sign table below
    satisfies dagger = bar * tilde entrywise.
    """
    if x.table.basis_labels != BIQUATERNION_LABELS:
        raise ValueError("element does not belong to a biquaternion table")
    signs = _BIQ_CONJ_SIGNS[BiquaternionConjugation(which)]
    return Element(x.table, tuple(c if s > 0 else -c for c, s in zip(x.coords, signs)))


# -- property checkers -----------------------------------------------------

@dataclass(frozen=True)
class PropertyRecord:
    ordered: bool
    commutative: bool
    associative: bool
    alternative: bool
    flexible: bool
    composition: bool
    zero_divisor_witness: Optional[tuple[Element, Element]]
    composition_counterexample: Optional[tuple[Element, Element]] = None


def find_zero_divisor(table: AlgebraTable) -> Optional[tuple[Element, Element]]:
    """Search binomial zero-divisor pairs (1 +/- e_i) and (e_i +/- e_j).

    Isotropic vectors of the split forms always occur among these; the
    returned pair is verified by an exact product equal to zero.
    """
    unit = table.unit()
    for i in range(table.dim):
        if i == table.unit_index:
            continue
        if table.product[i][i] == (table.unit_index, 1):
            x = unit + table.basis_element(i)
            y = table.basis_element(i) - unit
            if table_product(x, y).is_zero():
                return (x, y)
    for i in range(table.dim):
        for j in range(i + 1, table.dim):
            if table.unit_index in (i, j):
                continue
            si = table.product[i][i][1]
            sj = table.product[j][j][1]
            if si * sj != -1:
                continue
            bi, bj = table.basis_element(i), table.basis_element(j)
            for y in (bi - bj, bi + bj):
                if table_product(bi + bj, y).is_zero():
                    return (bi + bj, y)
    return None


def norm_is_positive_definite(table: AlgebraTable) -> bool:
    """True iff the basis is n-orthogonal with every basis norm +1."""
    for i in range(table.dim):
        if norm(table.basis_element(i)) != 1:
            return False
        for j in range(i + 1, table.dim):
            if polarize(table.basis_element(i), table.basis_element(j)) != 0:
                return False
    return True


def _composition_holds(table: AlgebraTable, u: Element, v: Element) -> bool:
    try:
        return norm(table_product(u, v)) == norm(u) * norm(v)
    except InternalConsistencyError:
        return False


def check_properties(table: AlgebraTable, trials: int = 1000,
                     seed: int = 0) -> PropertyRecord:
    """Exhaustive basis checks plus randomized exact checks.

    Commutativity and associativity are multilinear, so basis triples
    suffice.  Alternativity and flexibility are quadratic in one argument
    and are additionally checked on random exact-rational pairs, as is the
    composition property.
    """
    basis = [table.basis_element(i) for i in range(table.dim)]
    commutative = all(
        (a * b).coords == (b * a).coords for a in basis for b in basis
    )
    associative = all(
        ((a * b) * c).coords == (a * (b * c)).coords
        for a in basis for b in basis for c in basis
    )

    rng = Random(seed)
    pair_trials = max(trials, 0)
    random_pairs = [
        (table.random_element(rng), table.random_element(rng))
        for _ in range(pair_trials)
    ]

    def alt_ok(x: Element, y: Element) -> bool:
        return ((x * (x * y)).coords == ((x * x) * y).coords
                and ((y * x) * x).coords == (y * (x * x)).coords)

    def flex_ok(x: Element, y: Element) -> bool:
        return (x * (y * x)).coords == ((x * y) * x).coords

    alternative = all(alt_ok(a, b) for a in basis for b in basis) and all(
        alt_ok(x, y) for x, y in random_pairs
    )
    flexible = all(flex_ok(a, b) for a in basis for b in basis) and all(
        flex_ok(x, y) for x, y in random_pairs
    )

    composition = True
    comp_cex = None
    for a in basis:
        for b in basis:
            if not _composition_holds(table, a, b):
                composition, comp_cex = False, (a, b)
                break
        if not composition:
            break
    if composition:
        for x, y in random_pairs:
            if not _composition_holds(table, x, y):
                composition, comp_cex = False, (x, y)
                break

    return PropertyRecord(
        ordered=table.name == "R",
        commutative=commutative,
        associative=associative,
        alternative=alternative,
        flexible=flexible,
        composition=composition,
        zero_divisor_witness=find_zero_divisor(table),
        composition_counterexample=comp_cex,
    )


# -- export ----------------------------------------------------------------

def table_to_json(table: AlgebraTable) -> dict:
    return {
        "name": table.name,
        "dim": table.dim,
        "basis_labels": list(table.basis_labels),
        "product": [[{"k": k, "s": s} for (k, s) in row] for row in table.product],
        "conj": list(table.conj_signs),
    }


def _entry_label(table: AlgebraTable, k: int, s: int) -> str:
    if s == 0:
        return "0"
    label = table.basis_labels[k]
    return label if s > 0 else f"-{label}"


def table_to_csv(table: AlgebraTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([table.name] + list(table.basis_labels))
    for i, row in enumerate(table.product):
        writer.writerow(
            [table.basis_labels[i]] + [_entry_label(table, k, s) for (k, s) in row]
        )
    return buf.getvalue()


def table_to_text(table: AlgebraTable) -> str:
    cells = [[table.name] + list(table.basis_labels)]
    for i, row in enumerate(table.product):
        cells.append(
            [table.basis_labels[i]] + [_entry_label(table, k, s) for (k, s) in row]
        )
    widths = [max(len(r[c]) for r in cells) for c in range(len(cells[0]))]
    return "\n".join(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in cells
    )


def table_from_json(data: dict) -> AlgebraTable:
    return AlgebraTable(
        name=data["name"],
        dim=data["dim"],
        basis_labels=tuple(data["basis_labels"]),
        product=tuple(
            tuple((e["k"], e["s"]) for e in row) for row in data["product"]
        ),
        conj_signs=tuple(data["conj"]),
    )


def dump_table_json(table: AlgebraTable) -> str:
    return json.dumps(table_to_json(table), indent=2)
