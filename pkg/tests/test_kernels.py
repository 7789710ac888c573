import os
import subprocess
import sys

import pytest
from hypothesis import assume, given, strategies as st

from heckefusion.scalar import _kernels_py as pure

compiled = pytest.importorskip("heckefusion.scalar._kernels")

small = st.lists(st.integers(-50, 50), min_size=1, max_size=10).map(pure.pnorm)
wide = st.lists(st.integers(-(1 << 80), 1 << 80), min_size=1, max_size=6).map(pure.pnorm)
polys = st.one_of(small, wide)


@given(polys, polys)
def test_pmul_parity(a, b):
    assert compiled.pmul(a, b) == pure.pmul(a, b)


@given(polys, polys)
def test_padd_psub_parity(a, b):
    assert compiled.padd(a, b) == pure.padd(a, b)
    assert compiled.psub(a, b) == pure.psub(a, b)


@given(polys, polys)
def test_pdivexact_parity(a, b):
    assume(b)
    ab = pure.pmul(a, b)
    assert compiled.pdivexact(ab, b) == pure.pdivexact(ab, b) == a


@given(polys, polys, polys)
def test_pgcd_parity(a, b, c):
    assume(c)
    x, y = pure.pmul(a, c), pure.pmul(b, c)
    g = pure.pgcd(x, y)
    assert compiled.pgcd(x, y) == g
    if x or y:
        assert pure.ptrydiv(x, g) is not None and pure.ptrydiv(y, g) is not None


@given(polys, st.integers(-5, 5))
def test_peval_parity(a, x):
    assert compiled.peval(a, x) == pure.peval(a, x)


def _backend_in_subprocess(value):
    env = dict(os.environ)
    env.pop("HECKEFUSION_BACKEND", None)
    if value is not None:
        env["HECKEFUSION_BACKEND"] = value
    out = subprocess.run(
        [sys.executable, "-c", "from heckefusion.scalar import BACKEND; print(BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    return out.stdout.strip()


def test_default_backend_is_compiled():
    assert _backend_in_subprocess(None) == "cython"


def test_env_forces_pure_python():
    assert _backend_in_subprocess("python") == "python"


def test_pure_backend_end_to_end():
    env = dict(os.environ, HECKEFUSION_BACKEND="python")
    prog = (
        "from heckefusion import idempotents as I, tableaux as TB\n"
        "from heckefusion.scalar import BACKEND\n"
        "assert BACKEND == 'python'\n"
        "assert all(I.fusion(T) == I.dipper_james(T) for T in TB.all_syt(3))\n"
    )
    subprocess.run([sys.executable, "-c", prog], env=env, check=True)
