#!/usr/bin/env python3
"""Prints reference values used by the unit tests.

Hankel determinants use exact rational Gaussian elimination, series are
built from their definitions, and a/b/psi come from the odd-part
characterisation by plain enumeration.
"""
from fractions import Fraction

N = 40
ORDER = 2 * N + 2


def rueppel(order):
    r = [0] * order
    k = 1
    while k - 1 < order:
        r[k - 1] = 1
        k *= 2
    return r


def mul(a, b, order):
    out = [0] * order
    for i, x in enumerate(a[:order]):
        if x:
            for j, y in enumerate(b[: order - i]):
                out[i + j] += x * y
    return out


def inverse(a, order):
    inv = [Fraction(0)] * order
    inv[0] = Fraction(1, a[0])
    for n in range(1, order):
        inv[n] = -sum(a[k] * inv[n - k] for k in range(1, n + 1) if k < len(a)) / a[0]
    assert all(x.denominator == 1 for x in inv)
    return [int(x) for x in inv]


def hankel(c, n):
    if n == 0:
        return 1
    m = [[Fraction(c[i + j]) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            for k in range(col, n):
                m[r][k] -= f * m[col][k]
    assert det.denominator == 1
    return int(det)


r = rueppel(ORDER + 2)
b_minus = [1] + [-x for x in r[: ORDER - 1]]
b_plus = [1] + r[: ORDER - 1]
t_minus = [-x for x in r[1 : ORDER + 1]]
t_plus = r[1 : ORDER + 1]
r_minus_x = r[:ORDER]
r_minus_x[1] -= 1
b0 = mul(r[:ORDER], inverse(r_minus_x, ORDER), ORDER)

for name, series in [("Bminus", b_minus), ("Bplus", b_plus), ("Tminus", t_minus), ("Tplus", t_plus), ("B0", b0)]:
    print(name, [hankel(series, n) for n in range(N + 1)])
print("B0 coeffs", b0[:24])


def oddpart(m):
    while m % 2 == 0:
        m //= 2
    return m


LIMIT = 2_100_000
a = [0] + [m for m in range(1, LIMIT) if oddpart(m) % 4 == 1]
b = [m for m in range(1, LIMIT) if oddpart(m) % 4 == 3]
print("a", {n: a[n] for n in (1000, 100000, 1000000)})
print("b", {n: b[n] for n in (1000, 100000, 1000000)})
pos = {v: i for i, v in enumerate(a)}
print("psi", {rr: pos[16 * rr + 2] for rr in (0, 1, 2, 3, 100, 10000)})
