#!/usr/bin/env python3
"""The scalar type: exact numbers z0 + z1*sqrt(k) with integer-only tests.

Everything the search needs from numbers: add, subtract, integer
scaling, multiply, an exact sign test, a total order, and correctly
rounded decimal rendering.  No division, no floats.
"""

import guesswork as gw


def main():
    a = gw.quadratic(5, 1, 2)    # 1 + 2 sqrt 5
    b = gw.quadratic(5, 3, -1)   # 3 - sqrt 5

    print(f"a = {a},  b = {b}")
    print(f"a + b = {a + b}")
    print(f"a * b = {a * b}")
    print(f"3 * a = {gw.scale(3, a)}")
    print(f"a^2   = {a * a}   (z0^2 + k z1^2, 2 z0 z1)")

    # the sign of z0 + z1 sqrt(k) reduces to comparing z0^2 with k z1^2
    tiny = gw.quadratic(2, 3, -2)      # 3 - 2 sqrt 2 ~ 0.17
    negative = gw.quadratic(5, 2, -1)  # 2 - sqrt 5 ~ -0.24
    print(f"\nis_nonneg({tiny}) = {gw.is_nonneg(tiny)}")
    print(f"is_nonneg({negative}) = {gw.is_nonneg(negative)}")

    # comparisons agree with the real numbers these symbols denote
    print(f"sqrt(5) > 2: {gw.quadratic(5, 0, 1) > gw.quadratic(5, 2, 0)}")

    # decimal rendering is correctly rounded at any requested precision,
    # via integer square roots rather than floating point
    x = gw.quadratic(5, 10, 2)
    for digits in (2, 6, 12, 30):
        print(f"10 + 2 sqrt 5 to {digits:2} digits: {gw.to_decimal(x, digits)}")

    # ratios render exactly too (this one is the golden ratio)
    print(f"\n(1 + sqrt 5)/2 = {gw.ratio_to_decimal(gw.quadratic(5, 1, 1), gw.quadratic(5, 2, 0), 20)}")

    # huge coefficients are fine: integers are arbitrary precision
    big = gw.quadratic(2, 10**40, -(7**45))
    print(f"\na 40-digit example: {gw.to_decimal(big, 6)}")


if __name__ == "__main__":
    main()
