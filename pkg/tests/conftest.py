from fractions import Fraction

from hypothesis import strategies as st

from hurwitz_ga.ga_core import ALL_SIGNATURES, Multivector, Signature

# small exact rationals keep the products fast while still exercising carries
rationals = st.builds(
    Fraction,
    st.integers(min_value=-9, max_value=9),
    st.sampled_from([1, 2, 3]),
)

signatures = st.sampled_from(ALL_SIGNATURES)


def multivectors(sig: Signature):
    return st.builds(
        lambda cs: Multivector(sig, tuple(cs)),
        st.lists(rationals, min_size=8, max_size=8),
    )


sig_and_mv_pair = signatures.flatmap(
    lambda s: st.tuples(st.just(s), multivectors(s), multivectors(s))
)

sig_and_mv_triple = signatures.flatmap(
    lambda s: st.tuples(st.just(s), multivectors(s), multivectors(s), multivectors(s))
)
