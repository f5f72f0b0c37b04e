from hypothesis import strategies as st

from lamphoro import LampStand

lamp_stands = st.builds(
    LampStand,
    st.frozensets(st.integers(-6, 6), max_size=6),
    st.integers(-6, 6),
)
letters = st.sampled_from(["t", "t^-1", "at", "(at)^-1", "a"])
words = st.lists(letters, max_size=8)
