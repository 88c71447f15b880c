"""Table of c_{n,alpha} n^{1+alpha} against its limit and the d_1/d_3 bracket."""

from sectlab import schauder


def main() -> None:
    for alpha in (-0.9, -0.8, -0.6, -0.5, -0.2):
        C = schauder.coefficient_asymptote(alpha)
        d1, d3 = schauder.d_constant(1, alpha), schauder.d_constant(3, alpha)
        print(f"alpha={alpha}: limit={C:.6f}  d3={d3:.6f}  d1={d1:.6f}")
        for j in (0, 2, 4, 6, 8, 10, 12):
            n = 2**j
            v = schauder.fourier_coeff_c(n, alpha) * n ** (1 + alpha)
            print(f"   n={n:5d}  scaled={v:.8f}  drift*n={abs(v - C) * n:.4f}")
    parts = schauder.d3_lower_bound_terms()
    print(f"d3 chain (printed): {parts.printed_total:.6f}; with sqrt(2/pi): {parts.exact_total:.6f}")


if __name__ == "__main__":
    main()
