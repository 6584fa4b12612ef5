from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from liftkit import LaurentPoly, PolyMatrix, Scalar

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

fractions = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 8))
dyadic_fractions = st.builds(
    lambda n, e: Fraction(n, 2 ** e), st.integers(-16, 16), st.integers(0, 4)
)

scalars = st.builds(Scalar, fractions, fractions)
nonzero_scalars = scalars.filter(bool)
rationals = st.builds(Scalar, fractions)
dyadics = st.builds(Scalar, dyadic_fractions)


def polys(coeffs=scalars, max_len=4):
    return st.builds(
        LaurentPoly,
        st.lists(coeffs, min_size=0, max_size=max_len),
        st.integers(-3, 3),
    )


def matrices(coeffs=rationals, max_len=3):
    p = polys(coeffs, max_len)
    return st.builds(lambda a, b, c, d: PolyMatrix([[a, b], [c, d]]), p, p, p, p)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
