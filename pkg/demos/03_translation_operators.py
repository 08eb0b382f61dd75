#
# exp[(a d/dx)^j] g(x): derivative series against integral representations.
#
import math

from hermite_multisect import (TestFunction, i2_kernel, i2_quadrature, ij_quadrature,
                               ij_series, shift_apply, weierstrass_gaussian)


def run():
    cube = TestFunction.monomial(3)
    print("j = 1 is a plain shift: (x+a)^3 at x=1, a=0.5 ->", shift_apply(cube, 0.5, 1.0).real)

    # j = 2 smooths with a Gaussian kernel of variance 2a^2
    g = TestFunction.gaussian(1.0)
    for a in (0.1, 0.3, 0.44):
        exact = weierstrass_gaussian(1.0, a, 0.4).real
        print(f"a={a:<4}  series {ij_series(g, 2, a, 0.4).real:.15f}"
              f"  laguerre {i2_quadrature(g, a, 0.4).real:.15f}"
              f"  hermite {i2_kernel(g, a, 0.4).real:.15f}  exact {exact:.15f}")

    # j = 3, 4 use a (j-1)-fold tensor quadrature; on x^6 it terminates after a few terms
    sixth = TestFunction.monomial(6)
    for j in (3, 4):
        for order in (20, 40, 80):
            q = ij_quadrature(sixth, j, 0.4, 0.2, rule_order=order)
            s = ij_series(sixth, j, 0.4, 0.2)
            print(f"j={j} order={order:<3} quadrature {q.real:.15f}  series {s.real:.15f}"
                  f"  diff {abs(q - s):.1e}")

    # exponentials are eigenfunctions: exp[(a lam)^j] e^{lam x}
    lam, a, x = 0.8, 0.6, -0.3
    e = TestFunction.exponential(lam)
    print("\neigenvalue check j=3:", ij_quadrature(e, 3, a, x).real,
          math.exp((a * lam) ** 3 + lam * x))


if __name__ == "__main__":
    run()
