"""Exact Lin-Lu-Yau curvature on a few small graphs.

Run with ``python demos/01_curvature_basics.py``.
"""
from fractions import Fraction

from ricci_flat import build_graph, cycle_graph, lazy_measure, lly_curvature, wasserstein
from ricci_flat.transport import format_rational, kappa_alpha, validate_certificate

# The lazy random walk at a vertex keeps mass alpha in place and spreads the
# rest evenly over the neighbors.
c5 = cycle_graph(5)
mu = lazy_measure(c5, 0, Fraction(1, 2))
nu = lazy_measure(c5, 1, Fraction(1, 2))
print("mu_0 =", mu)
print("mu_1 =", nu)

# W1 is solved exactly as an integer min-cost flow; the certificate carries
# an optimal plan and 1-Lipschitz potentials closing the duality gap.
w, cert = wasserstein(c5, mu, nu)
print("W1 =", format_rational(w))
for (a, b), f in sorted(cert.flow.items()):
    print(f"  move {format_rational(f)} from {a} to {b}")
print("  potentials:", cert.potentials)
print("  certificate valid:", validate_certificate(c5, mu, nu, cert))

# kappa_alpha is linear in alpha near 1, so the limit curvature is the
# quotient kappa_alpha / (1 - alpha); it is checked at two alphas.
for a in (Fraction(1, 2), Fraction(2, 3)):
    k = kappa_alpha(c5, 0, 1, a)
    print(f"alpha={a}: kappa_alpha={format_rational(k)}  quotient={format_rational(k / (1 - a))}")

examples = {
    "C5": cycle_graph(5),
    "C6": cycle_graph(6),
    "K2": build_graph(2, [(0, 1)]),
    "P3 (pendant edge)": build_graph(3, [(0, 1), (1, 2)]),
}
for name, g in examples.items():
    print(f"{name:>18}: kappa(0,1) = {format_rational(lly_curvature(g, 0, 1))}")
