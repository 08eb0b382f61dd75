#
# Every j-th term of the exponential series, by the roots-of-unity filter.
#
import cmath

from hermite_multisect import filter_weight, s_closed, s_series


def run():
    # the filter (1/j) sum_l w_l^m is 1 on multiples of j and 0 elsewhere
    print("filter weights for j = 4:", [round(filter_weight(4, m), 15) for m in range(9)])

    z = 1.2 - 0.7j
    print(f"\nS(j, k; z) at z = {z}")
    for j in (1, 2, 3, 5):
        for k in range(j + 2):
            closed = s_closed((j, k), z)
            series, used = s_series((j, k), z)
            print(f"  j={j} k={k}  closed={closed:.12f}  |closed-series|={abs(closed - series):.1e}"
                  f"  ({used} terms)")

    # the j offsets partition the exponential series
    for j in (3, 6):
        total = sum(s_closed((j, k), z) for k in range(j))
        print(f"\nsum over k of S({j}, k) = {total:.15f}\nexp(z)                = {cmath.exp(z):.15f}")

    # for k >= j the head terms z^m/m!, m = k mod j, m < k, are removed
    print("\nS(2,2; 1) =", s_closed((2, 2), 1).real, "  cosh(1) - 1 =", cmath.cosh(1).real - 1)


if __name__ == "__main__":
    run()
