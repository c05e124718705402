import pytest

from fqdecomp.gf import make_field, prime_power

ACCEPTANCE_LINES: list[str] = []


def field(q: int):
    return make_field(*prime_power(q))


@pytest.fixture
def F():
    return field


def point_values(f, ext):
    """Values of f at every point of the extension field ext, plus infinity.

    f must be defined over a prime field contained in ext, so its coefficient
    codes are also valid codes in ext.  None stands for infinity.
    """
    num = f.num.coeffs
    den = f.den.coeffs

    def ev(coeffs, a):
        r = 0
        for c in reversed(coeffs):
            r = ext.add[ext.mul[r][a]][c]
        return r

    out = []
    for a in range(ext.q):
        d = ev(den, a)
        out.append(None if d == 0 else ext.div(ev(num, a), d))
    dn, dd = len(num) - 1, len(den) - 1
    if dn > dd:
        out.append(None)
    elif dn < dd:
        out.append(0)
    else:
        out.append(ext.div(num[-1], den[-1]))
    return out


def pointwise_compose(g_vals, h_vals, ext):
    """Values of g o h from value tables, with infinity mapped to g(inf)."""
    return [g_vals[ext.q] if v is None else g_vals[v] for v in h_vals]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
