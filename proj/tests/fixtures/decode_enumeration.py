"""Reference decoder for the polynomial enumeration (see docs/enumeration.md).

Written independently of the C++ code: Calkin-Wilf terms come from Stern's
diatomic sequence, cw(k) = fusc(k) / fusc(k + 1), and unpairing uses isqrt.
Prints the fixture consumed by test_enumeration.cpp.
"""
import json
import sys
from fractions import Fraction
from math import isqrt


def fusc(n):
    a, b = 1, 0
    while n:
        if n & 1:
            b += a
        else:
            a += b
        n >>= 1
    return b


def unpair(z):
    w = (isqrt(8 * z + 1) - 1) // 2
    y = z - w * (w + 1) // 2
    return w - y, y


def rational(i):
    if i == 0:
        return Fraction(0)
    k = (i + 1) // 2
    r = Fraction(fusc(k), fusc(k + 1))
    return r if i % 2 else -r


def gaussian(i):
    x, y = unpair(i)
    return rational(x), rational(y)


def polynomial(j):
    if j == 0:
        return []
    extra, rest = unpair(j - 1)
    out = []
    for _ in range(extra):
        head, rest = unpair(rest)
        out.append(gaussian(head))
    out.append(gaussian(rest + 1))
    return out


def main(count):
    rows = []
    for j in range(count + 1):
        rows.append({
            "j": j,
            "coefficients": [[[c.numerator, c.denominator] for c in pair] for pair in polynomial(j)],
        })
    json.dump(rows, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 10)
