"""Independent oracles shared by the tests (deliberately naive)."""
import sys

import pytest


def brute_partitions(n, allowed=lambda part: True):
    """All partitions of n into allowed parts, largest first, by plain recursion."""
    out = []

    def rec(rest, cap, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for part in range(min(rest, cap), 0, -1):
            if allowed(part):
                rec(rest - part, part, acc + [part])

    rec(n, n, [])
    return out


def partition_series(order, allowed=lambda part: True):
    return [len(brute_partitions(n, allowed)) for n in range(order + 1)]


def naive_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def naive_ssyt_series(shape, exponents, order, signs=None):
    """Signed weight generating function of column-strict fillings, by brute force over multisets."""
    signs = signs or [1] * len(exponents)
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]
    coeffs = [0] * (order + 1)
    letters = range(len(exponents))

    def fill(idx, grid):
        if idx == len(cells):
            wt = sum(exponents[v] for v in grid.values())
            if wt <= order:
                s = 1
                for v in grid.values():
                    s *= signs[v]
                coeffs[wt] += s
            return
        r, c = cells[idx]
        for v in letters:
            if c > 0 and v < grid[(r, c - 1)]:
                continue
            if r > 0 and v <= grid[(r - 1, c)]:
                continue
            grid[(r, c)] = v
            fill(idx + 1, grid)
            del grid[(r, c)]

    fill(0, {})
    return coeffs


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for k in sorted(lines):
            terminalreporter.write_line(lines[k])


@pytest.fixture
def rng():
    import random

    return random.Random(20260101)


__all__ = ["brute_partitions", "partition_series", "naive_mul", "naive_ssyt_series"]
