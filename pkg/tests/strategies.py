"""Shared hypothesis strategies."""
from fractions import Fraction

from hypothesis import strategies as st

from heckefusion.hecke import HeckeElement
from heckefusion import perm as P
from heckefusion.scalar import QRat

laurent_dicts = st.dictionaries(st.integers(-4, 4), st.integers(-6, 6), max_size=4)


@st.composite
def laurent(draw):
    return QRat.laurent(draw(laurent_dicts))


@st.composite
def nonzero_laurent(draw):
    c = draw(laurent())
    return c if c else QRat.from_int(draw(st.sampled_from([1, -2, 3])))


@st.composite
def qrats(draw):
    return draw(laurent()) / draw(nonzero_laurent())


@st.composite
def nonzero_qrats(draw):
    return draw(nonzero_laurent()) / draw(nonzero_laurent())


rationals = st.builds(
    Fraction, st.integers(-20, 20), st.integers(1, 9)
)


@st.composite
def hecke_elements(draw, n, max_terms=4):
    perms = P.all_perms(n)
    ws = draw(st.lists(st.sampled_from(perms), min_size=1, max_size=max_terms, unique=True))
    return HeckeElement(n, {w: draw(laurent()) for w in ws})
