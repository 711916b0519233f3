from hypothesis import strategies as st

from cubicacm.lattice import DivisorClass


def classes(a0=6, m=4):
    return st.builds(
        lambda a, rest: DivisorClass((a,) + tuple(rest)),
        st.integers(-a0, a0),
        st.lists(st.integers(-m, m), min_size=6, max_size=6),
    )
