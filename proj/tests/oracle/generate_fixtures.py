"""Independent reference values for the C++ tests, computed with mpmath.

Nothing here uses the library: series are summed with mpmath.nsum, integrals
with mpmath.quad, and elliptic quantities with mpmath's own ellipk/ellipfun.
Run from this directory to regenerate oracle_values.hpp:

    python3 generate_fixtures.py > oracle_values.hpp
"""

import mpmath as mp

mp.mp.dps = 70
DIGITS = 55


def s(v):
    return mp.nstr(v, DIGITS, min_fixed=1, max_fixed=0)


def cosh_family(shape, k, e, y):
    # n >= 0 form: sum (-1)^n (2n+1)^e f((2n+1) y / 2)
    def term(n):
        t = (2 * n + 1) * y / 2
        num = mp.sinh(t) if shape == "sinh_over_cosh" else 1
        return (-1) ** n * (2 * n + 1) ** e * num / mp.cosh(t) ** k

    return mp.nsum(term, [0, mp.inf])


def sinh_family(shape, k, e, y):
    def term(n):
        t = n * y
        num = mp.cosh(t) if shape == "cosh_over_sinh" else 1
        return (-1) ** n * n ** e * num / mp.sinh(t) ** k

    return mp.nsum(term, [1, mp.inf])


def berndt(a, sign):
    def f(x):
        if sign > 0:
            return x ** a / (mp.cos(x) + mp.cosh(x)) ** 3
        # cos x - cosh x = -x^2 (1 + O(x^4)); below 1e-10 the leading term is
        # exact to the working precision and avoids a 0/0 in floating point.
        if x < mp.mpf("1e-10"):
            return -(x ** (a - 6))
        return x ** a / (mp.cos(x) - mp.cosh(x)) ** 3

    return mp.quad(f, mp.linspace(0, 80, 81))


def nome_y(x):
    return mp.pi * mp.ellipk(1 - x) / mp.ellipk(x)


def main():
    pi = mp.pi
    rows = []
    rows.append(("kGammaQuarter", mp.gamma(mp.mpf(1) / 4)))
    rows.append(("kGammaThreeQuarters", mp.gamma(mp.mpf(3) / 4)))
    rows.append(("kAgmOneSqrt2", mp.agm(1, mp.sqrt(2))))
    rows.append(("kEllipticK036", mp.ellipk(mp.mpf("0.36"))))
    rows.append(("kEllipticKp036", mp.ellipk(mp.mpf("0.64"))))
    rows.append(("kNomeY036", nome_y(mp.mpf("0.36"))))
    rows.append(("kZHalf", 2 * mp.ellipk(mp.mpf(1) / 2) / pi))
    # d/dx of z = 2K/pi via mpmath's numerical differentiation.
    z = lambda x: 2 * mp.ellipk(x) / pi
    rows.append(("kZPrimeHalf", mp.diff(z, mp.mpf(1) / 2)))
    rows.append(("kZSecond036", mp.diff(z, mp.mpf("0.36"), 2)))
    rows.append(("kHyp2f1_2_036", mp.hyp2f1(2.5, 2.5, 3, mp.mpf("0.36"))))
    sn, cn, dn = (mp.ellipfun(f, mp.mpf("0.3"), m=mp.mpf("0.36")) for f in ("sn", "cn", "dn"))
    rows.append(("kSn03_036", sn))
    rows.append(("kSd03_036", sn / dn))

    rows.append(("kCosh1E1", cosh_family("inv", 1, 1, pi)))
    for e in (3, 5, 7, 9):
        rows.append((f"kCosh3E{e}", cosh_family("inv", 3, e, pi)))
    for e in (4, 8):
        rows.append((f"kCosh4E{e}", cosh_family("sinh_over_cosh", 4, e, pi)))
    for e in (5, 9):
        rows.append((f"kCosh5E{e}", cosh_family("inv", 5, e, pi)))
    rows.append(("kSinh1E3", sinh_family("inv", 1, 3, pi)))
    for e in (5, 7, 9, 11):
        rows.append((f"kSinh3E{e}", sinh_family("inv", 3, e, pi)))
    for e in (6, 10):
        rows.append((f"kSinh4E{e}", sinh_family("cosh_over_sinh", 4, e, pi)))
    for e in (7, 11):
        rows.append((f"kSinh5E{e}", sinh_family("inv", 5, e, pi)))

    y036 = nome_y(mp.mpf("0.36"))
    rows.append(("kCosh1E1At036", cosh_family("inv", 1, 1, y036)))

    for a in (1, 5, 9, 13):
        rows.append((f"kPlusA{a}", berndt(a, +1)))
    for a in (7, 11):
        rows.append((f"kMinusA{a}", berndt(a, -1)))

    print("#pragma once")
    print()
    print("// Generated by generate_fixtures.py (mpmath, %d digits). Do not edit." % mp.mp.dps)
    print()
    print("namespace oracle {")
    print()
    print("// Sums over n >= 0 (cosh, argument (2n+1)y/2) or n >= 1 (sinh, argument n y)")
    print("// with sign (-1)^n; kCoshKE<e> carries (2n+1)^e, kSinhKE<e> carries n^e.")
    for name, v in rows:
        print(f'inline constexpr const char* {name} = "{s(v)}";')
    print()
    print("}  // namespace oracle")


if __name__ == "__main__":
    main()
