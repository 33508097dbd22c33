"""
Hankel determinants and generalized growth rates
================================================

For a sequence a_1, a_2, ... the k x k Hankel determinant H_{n,k} starts
at a_n.  The k-th generalized growth rate GR^(k) is the limit of
|H_{n,k}|^(1/n); GR^(1) is the usual exponential growth rate.  When the
sequence satisfies a linear recurrence everything becomes exact: GR^(k)
is the product of the k largest root moduli of the minimal polynomial,
and determinants larger than the recurrence degree vanish.
"""

from lehmerlab import (
    fit_min_poly,
    growth_report,
    hankel_det,
    mahler_measure,
    max_growth_exact,
    parse_seq,
)

fib = parse_seq("1,1,2,3,5,8,13,21,34,55,89,144,233,377,610,987")

# 2x2 determinants of consecutive Fibonacci numbers alternate +-1.
print("H_{n,2}:", [int(hankel_det(fib, n, 2)) for n in range(1, 8)])

# 3x3 determinants vanish: the recurrence has degree 2.
print("H_{n,3}:", [int(hankel_det(fib, n, 3)) for n in range(1, 8)])

rec = fit_min_poly(fib, 4)
print("minimal polynomial:", rec.char_int())

report = growth_report(fib, k_max=3)
for entry in report.entries:
    print(
        f"GR^({entry.k}): estimate {entry.estimate:.6f}"
        f"  exact {entry.exact:.6f}  spread {entry.spread:.2e}"
    )

# The largest growth rate equals the Mahler measure of the minimal
# polynomial; for Fibonacci that is the golden ratio.
top = max_growth_exact(fib, 4)
assert abs(top.value - mahler_measure(rec.char_int()).value) < 1e-12
print("max over k of GR^(k) =", top.value)

# A sequence with two growing modes: a_n = 3^n + 2^n.
mixed = parse_seq(",".join(str(3**n + 2**n) for n in range(1, 16)))
rep2 = growth_report(mixed, k_max=3)
print()
print("for 3^n + 2^n:")
print("  GR^(1) =", rep2.entry(1).exact)  # 3
print("  GR^(2) =", rep2.entry(2).exact)  # 3 * 2 = 6
print("  GR^(3) =", rep2.entry(3).exact)  # only two modes: 0
