"""Truncated bivariate integer power series.

A series is a list of rows ``c[i][j]`` holding the coefficient of ``x^i y^j``;
every operation truncates to the shape of its inputs.
"""

from __future__ import annotations


def zeros(imax: int, jmax: int) -> list[list[int]]:
    return [[0] * (jmax + 1) for _ in range(imax + 1)]


def one(imax: int, jmax: int) -> list[list[int]]:
    c = zeros(imax, jmax)
    c[0][0] = 1
    return c


def mul(a, b):
    imax, jmax = len(a) - 1, len(a[0]) - 1
    out = zeros(imax, jmax)
    for i1, row in enumerate(a):
        for j1, x in enumerate(row):
            if not x:
                continue
            for i2 in range(imax - i1 + 1):
                brow = b[i2]
                orow = out[i1 + i2]
                for j2 in range(jmax - j1 + 1):
                    y = brow[j2]
                    if y:
                        orow[j1 + j2] += x * y
    return out


def binomial_power(imax, jmax, i_step, j_step, sign, exponent):
    """``(1 + sign * x^i_step y^j_step)^exponent``, truncated."""
    out = one(imax, jmax)
    factor = one(imax, jmax)
    if i_step <= imax and j_step <= jmax:
        factor[i_step][j_step] += sign
    for _ in range(exponent):
        out = mul(out, factor)
    return out


def geometric(imax, jmax, i_step, j_step, exponent=1):
    """``(1 - x^i_step y^j_step)^(-exponent)``, truncated; requires ``i_step >= 1``."""
    if i_step < 1:
        raise ValueError("geometric series needs a positive x-step to truncate")
    g = zeros(imax, jmax)
    k = 0
    while k * i_step <= imax and k * j_step <= jmax:
        g[k * i_step][k * j_step] = 1
        k += 1
    out = one(imax, jmax)
    for _ in range(exponent):
        out = mul(out, g)
    return out
