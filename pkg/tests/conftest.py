import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from scarfkit.monomials import default_names, intersect, minimalize, parse_ideal
from scarfkit.monomials import IrreducibleComponent

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def ideal(names, *gens):
    """``ideal("x,y", "x^2", "x*y")`` in the shared text format."""
    return parse_ideal("vars: " + names + "\n" + "\n".join(gens))


def components(names, *bounds):
    names = tuple(names.split(","))
    return intersect([IrreducibleComponent(tuple(b)).as_ideal(names) for b in bounds])


# the three-component ideal <x,y> cap <x^2,y^2,z^2> cap <x,z>
@pytest.fixture
def three():
    return ideal("x,y,z", "y*z^2", "x*z^2", "y^2*z", "x*y^2", "x^2")


@pytest.fixture
def three_dual():
    return ideal("x,y,z", "x^2*y^2", "x*y*z", "x^2*z^2")


@st.composite
def monomial_ideals(draw, n_max=4, r_max=6, e_max=4, n_min=1):
    n = draw(st.integers(n_min, n_max))
    vec = st.tuples(*[st.integers(0, e_max)] * n).filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=r_max))
    return minimalize(gens, names=default_names(n))
