"""Named verification suites driving the invariants of every module.

Each suite returns a list of :class:`CheckResult`; randomized checks are
exact and deterministic under a fixed seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Callable, Optional

from hurwitz_ga import canonical, ga_core, isomorphism, octonify
from hurwitz_ga.canonical import HurwitzClass, build_table, check_properties
from hurwitz_ga.ga_core import (
    ALL_SIGNATURES,
    BLADE_MASKS,
    MASK_TO_LABEL,
    Multivector,
    Signature,
    clifford_conjugation,
    full_grade_inversion,
    geometric_product,
    grade,
    grade_select,
    inner,
    inversion,
    parity_split,
    random_multivector,
    random_vector,
    reversion,
)
from hurwitz_ga.octonify import BulletVariant, bullet_product, classify, octonion_norm


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    counterexample: Optional[str] = None


def _check(name: str, ok: bool, cex: Optional[str] = None) -> CheckResult:
    return CheckResult(name, ok, None if ok else (cex or "see suite source"))


def _first_failure(pairs, predicate) -> Optional[str]:
    for args in pairs:
        if not predicate(*args):
            return ", ".join(str(a) for a in args)
    return None


# -- ga-axioms -------------------------------------------------------------

def suite_ga_axioms(trials: int = 10_000, seed: int = 0,
                    signatures=ALL_SIGNATURES) -> list[CheckResult]:
    results = []
    for sig in signatures:
        rng = Random(seed)
        tag = f"ga-axioms/{sig.p},{sig.q}"
        triples = (
            (random_multivector(sig, rng), random_multivector(sig, rng),
             random_multivector(sig, rng))
            for _ in range(trials)
        )
        cex = _first_failure(
            triples,
            lambda x, y, z: ((x * y) * z).coeffs == (x * (y * z)).coeffs,
        )
        results.append(_check(f"{tag}/associativity", cex is None, cex))

        small = max(trials // 10, 100)
        vec_pairs = [
            (random_vector(sig, rng), random_vector(sig, rng)) for _ in range(small)
        ]
        cex = _first_failure(
            vec_pairs,
            lambda v, w: (v * w + w * v).coeffs
            == inner(v, w).scale(2).coeffs
            and (v * w + w * v).is_scalar(),
        )
        results.append(_check(f"{tag}/fundamental-relation", cex is None, cex))

        pairs = [
            (random_multivector(sig, rng), random_multivector(sig, rng))
            for _ in range(small)
        ]
        cex = _first_failure(
            pairs,
            lambda x, y: reversion(x * y).coeffs
            == (reversion(y) * reversion(x)).coeffs,
        )
        results.append(_check(f"{tag}/reversion-antiautomorphism", cex is None, cex))
        cex = _first_failure(
            pairs,
            lambda x, y: inversion(x * y).coeffs
            == (inversion(x) * inversion(y)).coeffs,
        )
        results.append(_check(f"{tag}/inversion-automorphism", cex is None, cex))

        singles = [(random_multivector(sig, rng),) for _ in range(small)]
        cex = _first_failure(
            singles,
            lambda x: clifford_conjugation(x).coeffs
            == inversion(reversion(x)).coeffs
            == reversion(inversion(x)).coeffs,
        )
        results.append(_check(f"{tag}/involution-composition", cex is None, cex))
        cex = _first_failure(
            singles,
            lambda x: all(
                f(f(x)).coeffs == x.coeffs
                for f in (reversion, inversion, clifford_conjugation,
                          full_grade_inversion)
            ),
        )
        results.append(_check(f"{tag}/involutions-self-inverse", cex is None, cex))

        pseudo = Multivector.blade(sig, 0b111)
        cex = _first_failure(
            [(Multivector.blade(sig, m),) for m in range(8)],
            lambda x: (pseudo * x).coeffs == (x * pseudo).coeffs,
        )
        results.append(_check(f"{tag}/pseudoscalar-centrality", cex is None, cex))

        l1, l2, l3 = sig.lambdas
        sq_ok = True
        sq_cex = None
        for m in range(1, 8):
            b = Multivector.blade(sig, m)
            got = (b * b).scalar_part()
            if grade(m) == 1:
                want = sig.lambdas[m.bit_length() - 1]
            elif grade(m) == 2:
                i, j = [k for k in range(3) if m >> k & 1]
                want = -sig.lambdas[i] * sig.lambdas[j]
            else:
                want = -l1 * l2 * l3
            if not ((b * b).is_scalar() and got == want):
                sq_ok, sq_cex = False, MASK_TO_LABEL[m]
                break
        results.append(_check(f"{tag}/squared-relations", sq_ok, sq_cex))

        cex = _first_failure(
            singles,
            lambda x: parity_split(x * reversion(x)).even.coeffs
            == parity_split(reversion(x) * x).even.coeffs
            and all(
                c == 0
                for m, c in enumerate((x * reversion(x)).coeffs)
                if grade(m) > 1
            ),
        )
        results.append(_check(f"{tag}/rev-square-grades-0-1", cex is None, cex))
    return results


# -- involutions vs biquaternion conjugations ------------------------------

def suite_involutions() -> list[CheckResult]:
    results = []
    for sig in ALL_SIGNATURES:
        try:
            mapping = isomorphism.involution_dictionary(sig)
            ok, cex = True, None
        except canonical.InternalConsistencyError as exc:
            ok, cex, mapping = False, str(exc), {}
        results.append(
            _check(f"involutions/{sig.p},{sig.q}/dictionary", ok, cex)
        )
        if ok:
            results.append(
                _check(
                    f"involutions/{sig.p},{sig.q}/pairing",
                    mapping
                    == {
                        "reversion": "dagger",
                        "inversion": "bar",
                        "clifford_conjugation": "tilde",
                    },
                    str(mapping),
                )
            )
    return results


# -- hurwitz-properties: the seven-algebra property matrix -----------------

# (commutative, associative, alternative, flexible) per class.
PROPERTY_MATRIX_EXPECTED = {
    HurwitzClass.R: (True, True, True, True),
    HurwitzClass.C: (True, True, True, True),
    HurwitzClass.Cs: (True, True, True, True),
    HurwitzClass.H: (False, True, True, True),
    HurwitzClass.Hs: (False, True, True, True),
    HurwitzClass.O: (False, False, True, True),
    HurwitzClass.Os: (False, False, True, True),
}


def suite_hurwitz_properties(trials: int = 1000, seed: int = 0) -> list[CheckResult]:
    results = []
    for cls in HurwitzClass:
        table = build_table(cls)
        rec = check_properties(table, trials=trials, seed=seed)
        got = (rec.commutative, rec.associative, rec.alternative, rec.flexible)
        results.append(
            _check(
                f"hurwitz-properties/{cls.value}/matrix",
                got == PROPERTY_MATRIX_EXPECTED[cls],
                f"got {got}",
            )
        )
        results.append(
            _check(
                f"hurwitz-properties/{cls.value}/composition",
                rec.composition,
                rec.composition_counterexample
                and f"({rec.composition_counterexample[0]}, {rec.composition_counterexample[1]})",
            )
        )
        results.append(
            _check(f"hurwitz-properties/{cls.value}/ordered", rec.ordered == (cls is HurwitzClass.R))
        )
        if cls.is_split:
            zd = rec.zero_divisor_witness
            results.append(
                _check(
                    f"hurwitz-properties/{cls.value}/zero-divisor",
                    zd is not None
                    and canonical.table_product(zd[0], zd[1]).is_zero(),
                )
            )
        else:
            results.append(
                _check(
                    f"hurwitz-properties/{cls.value}/positive-definite",
                    canonical.norm_is_positive_definite(table)
                    and rec.zero_divisor_witness is None,
                )
            )
    for c in (HurwitzClass.C, HurwitzClass.Cs):
        for h in (HurwitzClass.H, HurwitzClass.Hs):
            rec = check_properties(
                canonical.build_biquaternion(c, h), trials=0, seed=seed
            )
            results.append(
                _check(
                    f"hurwitz-properties/{c.value}x{h.value}/not-composition",
                    not rec.composition,
                    "naive norm unexpectedly multiplicative",
                )
            )
    return results


# -- composition: N(x . y) = N(x) N(y) -------------------------------------

def _alternativity_holds(x: Multivector, y: Multivector, variant: BulletVariant) -> bool:
    xx = bullet_product(x, x, variant)
    return (
        bullet_product(x, bullet_product(x, y, variant), variant).coeffs
        == bullet_product(xx, y, variant).coeffs
        and bullet_product(bullet_product(y, x, variant), x, variant).coeffs
        == bullet_product(y, xx, variant).coeffs
    )


def suite_composition(trials: int = 10_000, seed: int = 0) -> list[CheckResult]:
    results = []
    for sig in ALL_SIGNATURES:
        for variant in BulletVariant:
            tag = f"composition/{sig.p},{sig.q}/{variant.value}"
            ok, cex = octonify.check_composition(sig, variant, trials=trials, seed=seed)
            results.append(_check(tag, ok, cex and f"({cex[0]}, {cex[1]})"))

            rng = Random(seed)
            basis = [Multivector.blade(sig, m) for m in BLADE_MASKS]
            pairs = [(a, b) for a in basis for b in basis] + [
                (random_multivector(sig, rng), random_multivector(sig, rng))
                for _ in range(trials)
            ]
            cex = _first_failure(
                pairs, lambda x, y, v=variant: _alternativity_holds(x, y, v)
            )
            results.append(_check(f"{tag}/alternativity", cex is None, cex))

            try:
                octonify.nonassociativity_witness(sig, variant)
                results.append(_check(f"{tag}/associator-witness", True))
            except canonical.InternalConsistencyError as exc:
                results.append(_check(f"{tag}/associator-witness", False, str(exc)))
    return results


# -- norm-lemma: scalar-part, parity-sum, and diagonal identities ----------

def suite_norm_lemma(trials: int = 10_000, seed: int = 0) -> list[CheckResult]:
    results = []
    for sig in ALL_SIGNATURES:
        rng = Random(seed)
        tag = f"norm-lemma/{sig.p},{sig.q}"
        xs = [random_multivector(sig, rng) for _ in range(trials)]
        cex = _first_failure(
            ((x,) for x in xs),
            lambda x: grade_select(x * reversion(x), 0).scalar_part()
            == octonion_norm(x),
        )
        results.append(_check(f"{tag}/scalar-part-identity", cex is None, cex))
        cex = _first_failure(
            ((x,) for x in xs),
            lambda x: sum(octonify.parity_norm_decomposition(x), ga_core.Rat(0))
            == octonion_norm(x),
        )
        results.append(_check(f"{tag}/parity-sum-identity", cex is None, cex))
        small = xs[: max(trials // 10, 100)]
        for variant in BulletVariant:
            cex = _first_failure(
                ((x,) for x in small),
                lambda x, v=variant: bullet_product(
                    x, octonify.octonion_conjugate(x), v
                ).coeffs
                == Multivector.scalar(sig, octonion_norm(x, v)).coeffs,
            )
            results.append(
                _check(f"{tag}/conjugation-norm/{variant.value}", cex is None, cex)
            )
        cex = _first_failure(
            ((x,) for x in small),
            lambda x: octonify.octonion_conjugate(x).coeffs
            == (
                clifford_conjugation(parity_split(x).even)
                - parity_split(x).odd
            ).coeffs,
        )
        results.append(_check(f"{tag}/conjugate-constructions-agree", cex is None, cex))

    expected_plus = {
        (3, 0): (1, 1, 1, 1, 1, 1, 1, 1),
        (0, 3): (1, 1, 1, 1, -1, -1, -1, -1),
        (2, 1): (1, 1, -1, -1, 1, 1, -1, -1),
        (1, 2): (1, 1, -1, -1, -1, -1, 1, 1),
    }
    for (p, q), want in expected_plus.items():
        sig = Signature.from_pq(p, q)
        got = octonify.norm_diagonal(sig, BulletVariant.PLUS)
        results.append(
            _check(f"norm-lemma/{p},{q}/diagonal-plus", got == want, str(got))
        )
        got_minus = octonify.norm_diagonal(sig, BulletVariant.MINUS)
        want_minus = want[:4] + tuple(-s for s in want[4:])
        results.append(
            _check(
                f"norm-lemma/{p},{q}/diagonal-minus",
                got_minus == want_minus,
                str(got_minus),
            )
        )
    return results


# -- isomorphisms: classification rows and witnesses -----------------------

CLASSIFICATION_EXPECTED = {
    (3, 0): ("CxH", "H", "C", "O", "Os"),
    (2, 1): ("CsxHs", "Hs", "Cs", "Os", "Os"),
    (1, 2): ("CxHs", "Hs", "C", "Os", "Os"),
    (0, 3): ("CsxH", "H", "Cs", "Os", "O"),
}


def suite_isomorphisms() -> list[CheckResult]:
    results = []
    for sig in ALL_SIGNATURES:
        tag = f"isomorphisms/{sig.p},{sig.q}"
        row = isomorphism.classification_row(sig)
        got = (
            row.tensor_label,
            row.even.value,
            row.ps.value,
            row.bullet_plus.value,
            row.bullet_minus.value,
        )
        results.append(
            _check(f"{tag}/classification-row", got == CLASSIFICATION_EXPECTED[(sig.p, sig.q)], str(got))
        )
        results.append(
            _check(
                f"{tag}/factorization",
                isomorphism.tensor_factorization_holds(sig),
            )
        )
        even = isomorphism.even_subalgebra_table(sig)
        w = isomorphism.find_isomorphism(even, build_table(row.even))
        results.append(
            _check(
                f"{tag}/even-subalgebra-witness",
                w is not None and isomorphism.verify_witness(w),
            )
        )
        ps = isomorphism.pseudoscalar_table(sig)
        w = isomorphism.find_isomorphism(ps, build_table(row.ps))
        results.append(
            _check(
                f"{tag}/pseudoscalar-witness",
                w is not None and isomorphism.verify_witness(w),
            )
        )
        for variant in BulletVariant:
            src = octonify.cayley_table_bullet(sig, variant)
            cls = classify(sig, variant)
            other = (
                HurwitzClass.Os if cls is HurwitzClass.O else HurwitzClass.O
            )
            w = isomorphism.find_isomorphism(src, build_table(cls))
            results.append(
                _check(
                    f"{tag}/bullet{variant.value}-witness-{cls.value}",
                    w is not None and isomorphism.verify_witness(w),
                )
            )
            results.append(
                _check(
                    f"{tag}/bullet{variant.value}-not-{other.value}",
                    isomorphism.find_isomorphism(src, build_table(other)) is None,
                )
            )
    return results


SUITES: dict[str, Callable[..., list[CheckResult]]] = {
    "ga-axioms": lambda trials, seed: suite_ga_axioms(trials, seed),
    "involutions": lambda trials, seed: suite_involutions(),
    "hurwitz-properties": lambda trials, seed: suite_hurwitz_properties(
        max(trials // 10, 100), seed
    ),
    "composition": lambda trials, seed: suite_composition(trials, seed),
    "norm-lemma": lambda trials, seed: suite_norm_lemma(trials, seed),
    "isomorphisms": lambda trials, seed: suite_isomorphisms(),
}


def run_suite(name: str, trials: int = 10_000, seed: int = 0) -> list[CheckResult]:
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(SUITES[key](trials, seed))
        return out
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](trials, seed)
