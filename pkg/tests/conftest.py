"""Shared helpers for the test suite."""

from carlitz.gf import GF
from carlitz.poly import Poly

_FIELDS = {}

# one line per acceptance criterion, echoed after the run (see
# pytest_terminal_summary below) so the gate is visible even when capture
# swallows in-test prints
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def field(q: int) -> GF:
    """A finite field of size q, cached across tests."""
    if q not in _FIELDS:
        p, r = {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1), 7: (7, 1),
                8: (2, 3), 9: (3, 2)}[q]
        _FIELDS[q] = GF(p, r)
    return _FIELDS[q]


def rand_poly(gf, rng, max_deg, nonzero=False, monic=False) -> Poly:
    """A uniformly random polynomial of degree <= max_deg."""
    while True:
        coeffs = [rng.randrange(gf.q) for _ in range(max_deg + 1)]
        if monic:
            deg = rng.randrange(max_deg + 1)
            coeffs = coeffs[:deg] + [1] + [0] * (max_deg - deg)
        f = Poly(gf, coeffs)
        if not (nonzero or monic) or not f.is_zero():
            return f


def all_polys(gf, max_deg):
    """Every polynomial of degree <= max_deg (including 0)."""
    out = [[]]
    for _ in range(max_deg + 1):
        out = [c + [a] for c in out for a in range(gf.q)]
    return [Poly(gf, c) for c in out]
