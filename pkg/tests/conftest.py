import random

from hypothesis import strategies as st

from surgery_sieve.curvemodel import PulledTightCurve


def make_curve(g, tau, eps, half_counts):
    """Symmetric curve from counts at levels 0..g-1."""
    counts = {}
    for i, c in enumerate(half_counts):
        counts[i] = c
        counts[-i] = c
    return PulledTightCurve(g, tau, eps, counts)


def random_curve(rng: random.Random, max_g=4, max_n=4, tau_eq_genus=False):
    g = rng.randint(1, max_g)
    if tau_eq_genus:
        tau, eps = g, 1
    else:
        tau = rng.randint(0, g)
        if tau == g:
            eps = 1
        elif tau == 0:
            eps = rng.choice((-1, 0, 1))
        else:
            eps = rng.choice((-1, 1))
    half = [rng.randint(0, max_n) for _ in range(g)]
    if tau > 0 and half[0] == 0:
        half[0] = rng.randint(1, max_n)
    return make_curve(g, tau, eps, half)


@st.composite
def curves(draw, max_g=4, max_n=4, tau_eq_genus=False):
    g = draw(st.integers(1, max_g))
    if tau_eq_genus:
        tau, eps = g, 1
    else:
        tau = draw(st.integers(0, g))
        if tau == g:
            eps = 1
        elif tau == 0:
            eps = draw(st.sampled_from((-1, 0, 1)))
        else:
            eps = draw(st.sampled_from((-1, 1)))
    half = draw(st.lists(st.integers(0, max_n), min_size=g, max_size=g))
    if tau > 0 and half[0] == 0:
        half[0] = 1
    return make_curve(g, tau, eps, half)
