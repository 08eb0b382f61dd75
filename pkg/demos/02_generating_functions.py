#
# Hermite generating functions restricted to one residue class of indices.
#
import math

from hermite_multisect import g_closed, g_rodrigues_check, g_series, hermite_eval


def run():
    z, x = 0.6, 1.3
    print("H_0..H_5 at x =", x, [hermite_eval(n, x) for n in range(6)])

    # the classical even / odd generating functions
    print(f"\nG(2,0) = {g_closed((2, 0), z, x).real:.15f}"
          f"  vs exp(-z^2) cosh(2xz) = {math.exp(-z * z) * math.cosh(2 * x * z):.15f}")
    print(f"G(2,1) = {g_closed((2, 1), z, x).real:.15f}"
          f"  vs exp(-z^2) sinh(2xz) = {math.exp(-z * z) * math.sinh(2 * x * z):.15f}")

    print("\nclosed form against the truncated Hermite series, z = 1+0.5i, x = -1")
    for j in range(1, 6):
        for k in range(j + 2):
            closed = g_closed((j, k), 1 + 0.5j, -1.0)
            series, used = g_series((j, k), 1 + 0.5j, -1.0)
            print(f"  G({j},{k}) = {closed:.10f}  diff {abs(closed - series):.1e}  terms {used}")

    # an algebraically separate route: shifted Gaussians exp(-(x - z w)^2)
    worst = max(g_rodrigues_check((j, k), 0.9 - 0.4j, 0.5) for j in range(1, 6) for k in range(j))
    print(f"\nshifted-Gaussian route vs closed form, worst difference {worst:.1e}")


if __name__ == "__main__":
    run()
