"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from bsscl.words import CyclicWord, GroupParams

PARAMS_POOL = [
    GroupParams(2, 3),
    GroupParams(3, 2),
    GroupParams(-2, 3),
    GroupParams(2, -3),
    GroupParams(3, 5),
    GroupParams(4, -3),
    GroupParams(2, -2),
    GroupParams(-3, -5),
]


@st.composite
def zero_exponent_cyclic(draw, pool=None, max_half=3, max_k=4):
    """Cyclically reduced words with t-exponent zero (n = 2..2*max_half)."""
    params = draw(st.sampled_from(pool or PARAMS_POOL))
    r = draw(st.integers(1, max_half))
    eps = draw(st.permutations([1] * r + [-1] * r))
    n = 2 * r
    sylls = []
    for i in range(n):
        k = draw(st.integers(-max_k, max_k))
        e, nxt = eps[i], eps[(i + 1) % n]
        if e == 1 and nxt == -1 and k % params.m == 0:
            k += 1  # |m| >= 2 throughout the pool, so k+1 is a non-multiple
        if e == -1 and nxt == 1 and k % params.ell == 0:
            k += 1
        sylls.append((e, k))
    return CyclicWord(params, tuple(sylls))
