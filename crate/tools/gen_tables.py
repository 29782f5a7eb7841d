"""Generate the constant tables used by `ezeta_core::zeta`.

- Taylor coefficients of the Riemann-Siegel correction functions C_0..C_4
  expanded in z = p - 1/2, where p is the fractional part of sqrt(t / 2 pi).
- Bernoulli numbers B_2k and B_2k / (2k)! for Euler-Maclaurin and Stirling.

    python3 tools/gen_tables.py > crates/core/src/tables.rs
"""
from mpmath import mp, mpf, pi, cos, sin, factorial, bernoulli

mp.dps = 60
DEG = 110      # degree of the Psi series
KEEP = 64      # degree kept for each C_k


def series_mul(a, b, n):
    out = [mpf(0)] * n
    for i, x in enumerate(a[:n]):
        if x == 0:
            continue
        for j, y in enumerate(b[: n - i]):
            out[i + j] += x * y
    return out


def series_div(a, b, n):
    out = [mpf(0)] * n
    for k in range(n):
        acc = a[k] if k < len(a) else mpf(0)
        for j in range(1, k + 1):
            acc -= b[j] * out[k - j]
        out[k] = acc / b[0]
    return out


def psi_series(n):
    # Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p), z = p - 1/2
    #        = -cos(2 pi z^2 - 5 pi / 8) / cos(2 pi z)
    c58, s58 = cos(5 * pi / 8), sin(5 * pi / 8)
    cz2 = [mpf(0)] * n  # cos(2 pi z^2)
    sz2 = [mpf(0)] * n  # sin(2 pi z^2)
    for j in range(0, n):
        if 2 * j >= n:
            break
        term = (2 * pi) ** j / factorial(j)
        if j % 4 == 0:
            cz2[2 * j] = term
        elif j % 4 == 1:
            sz2[2 * j] = term
        elif j % 4 == 2:
            cz2[2 * j] = -term
        else:
            sz2[2 * j] = -term
    num = [-(c * c58 + s * s58) for c, s in zip(cz2, sz2)]
    den = [mpf(0)] * n
    for j in range(0, n):
        if j % 2 == 0:
            den[j] = (-1) ** (j // 2) * (2 * pi) ** j / factorial(j)
    return series_div(num, den, n)


def deriv(a, k):
    out = a
    for _ in range(k):
        out = [out[i] * i for i in range(1, len(out))]
    return out


def combo(terms, n):
    out = [mpf(0)] * n
    for coef, k, series in terms:
        d = deriv(series, k)
        for i in range(n):
            out[i] += coef * d[i]
    return out


psi = psi_series(DEG)
p2, p4, p6, p8 = pi ** 2, pi ** 4, pi ** 6, pi ** 8
cs = [
    combo([(1, 0, psi)], KEEP),
    combo([(-1 / (96 * p2), 3, psi)], KEEP),
    combo([(1 / (18432 * p4), 6, psi), (1 / (64 * p2), 2, psi)], KEEP),
    combo(
        [
            (-1 / (5308416 * p6), 9, psi),
            (-1 / (3840 * p4), 5, psi),
            (-1 / (64 * p2), 1, psi),
        ],
        KEEP,
    ),
    combo(
        [
            (1 / (2038431744 * p8), 12, psi),
            (mpf(11) / (5898240 * p6), 8, psi),
            (mpf(19) / (24576 * p4), 4, psi),
            (1 / (128 * p2), 0, psi),
        ],
        KEEP,
    ),
]

print("// Generated by tools/gen_tables.py. Do not edit by hand.")
print("#![allow(clippy::excessive_precision)]")
print()
print("/// Taylor coefficients of the correction functions in `z = p - 1/2`.")
print(f"pub(crate) const RS_COEFFS: [[f64; {KEEP}]; 5] = [")
for c in cs:
    print("    [")
    for x in c:
        print(f"        {mp.nstr(x, 20, min_fixed=-1, max_fixed=-1)},")
    print("    ],")
print("];")
print()
print("/// `B_2k` for k = 1..=30.")
print("pub(crate) const BERNOULLI_2K: [f64; 30] = [")
for k in range(1, 31):
    print(f"    {mp.nstr(bernoulli(2 * k), 20, min_fixed=-1, max_fixed=-1)},")
print("];")
print()
print("/// `B_2k / (2k)!` for k = 1..=30.")
print("pub(crate) const BERNOULLI_2K_OVER_FACT: [f64; 30] = [")
for k in range(1, 31):
    print(f"    {mp.nstr(bernoulli(2 * k) / factorial(2 * k), 20, min_fixed=-1, max_fixed=-1)},")
print("];")
