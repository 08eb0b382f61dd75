#
# Hermite sums with n! and floor(n/2)! denominators (squeezed vacuum amplitudes).
#
import math

from hermite_multisect import (TestFunction, i2_quadrature, k2010_closed, k2110_closed,
                               k_combined_closed, k_series)


def run():
    x = 0.8
    print(" z     even closed      even series      odd closed       combined")
    for z in (0.05, 0.15, 0.25, 0.35):
        print(f"{z:<5} {k2010_closed(z, x).real:.13f}  {k_series('even', z, x)[0].real:.13f}"
              f"  {k2110_closed(z, x).real:.13f}  {k_combined_closed(z, x).real:.13f}")

    # the even sum is I_2 applied to exp(-x^2), up to the factor exp(-x^2)
    g = TestFunction.gaussian(1.0)
    z = 0.3
    print(f"\nK(2,0,1,0) exp(-x^2) = {k2010_closed(z, x).real * math.exp(-x * x):.15f}")
    print(f"I_2 exp(-x^2)        = {i2_quadrature(g, z, x).real:.15f}")

    # complex z is fine inside |z| < 1/2; the closed forms use the principal branch
    z = 0.2 + 0.25j
    closed = k_combined_closed(z, x)
    series, used = k_series("combined", z, x)
    print(f"\nz = {z}: closed {closed:.12f}, series {series:.12f} ({used} terms)")


if __name__ == "__main__":
    run()
