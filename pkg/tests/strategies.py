"""Hypothesis strategies for group elements."""

from hypothesis import strategies as st

from monohecke.group import GroupParams


@st.composite
def params(draw, max_n=4, max_b=5):
    return GroupParams(draw(st.integers(1, max_n)), draw(st.integers(1, max_b)))


@st.composite
def elements(draw, P: GroupParams, k: int = 1):
    out = []
    for _ in range(k):
        perm = tuple(draw(st.permutations(range(P.n))))
        exps = tuple(draw(st.lists(st.integers(0, P.b - 1), min_size=P.n, max_size=P.n)))
        out.append(P.element(perm, exps))
    return out[0] if k == 1 else tuple(out)


@st.composite
def params_and_elements(draw, k=1, max_n=4, max_b=5):
    P = draw(params(max_n, max_b))
    return P, draw(elements(P, k))
