#!/usr/bin/env python3
"""Tour of the node-set basis functions.

Builds bases on integer and irrational node sets, shows the degeneration
to classical Bernstein polynomials, and plots the rational basis of the
circle benchmark as an SVG.
"""

import sys
from pathlib import Path

import numpy as np

from gtbezier import (
    bernstein_equivalent_nodeset,
    bernstein_reference,
    eval_gt_basis,
    eval_rational_basis,
    rational_basis_matrix,
    validate_node_set,
)
from gtbezier import datasets
from gtbezier.export import write_svg

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(parents=True, exist_ok=True)

# ------------------------------------------------------------------
# two nodes {0, 1}: the basis is the pair 1 - t, t
ns = validate_node_set([0, 1])
print("nodes {0, 1}:  beta_0(0.5) =", eval_gt_basis(ns, 0, 0.5),
      "  beta_1(0.5) =", eval_gt_basis(ns, 1, 0.5))

# ------------------------------------------------------------------
# integer nodes with binomial coefficients reproduce Bernstein polynomials
n = 4
nsb = bernstein_equivalent_nodeset(n)
xs = np.linspace(0, 1, 7)
print(f"\ndegeneration at degree {n} (evaluate at t = {n}x):")
for x in xs:
    gt = eval_gt_basis(nsb, 2, n * x)
    ref = bernstein_reference(n, 2, x)
    print(f"  x={x:.3f}  basis={gt:.12f}  bernstein={ref:.12f}  diff={abs(gt-ref):.1e}")

# ------------------------------------------------------------------
# the circle benchmark basis: irrational node, uneven coefficients, weights
prob = datasets.circle_problem()
ns = prob.nodeset
a0, an = ns.domain
print("\ncircle benchmark nodes:", np.round(ns.nodes, 4))
mid = eval_rational_basis(ns, prob.weights, 0.5 * (a0 + an))
print("rational basis at the midpoint:", np.round(mid.values, 4), " sum:", mid.values.sum())
print("at the left endpoint:", eval_rational_basis(ns, prob.weights, a0).values)

grid = np.linspace(a0, an, 4001)
table = rational_basis_matrix(ns, prob.weights, grid)
print("partition of unity on 4001 points, max |sum - 1| =",
      np.max(np.abs(table.sum(axis=1) - 1)))

# graph each basis function as a polyline (t, T_i(t)) and export as SVG
palette = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#8c564b"]
layers = [
    (f"T{i}", np.column_stack([grid, table[:, i]]), {"stroke": palette[i % len(palette)]})
    for i in range(ns.size)
]
write_svg(out / "basis_functions.svg", layers, title="rational basis, circle configuration")
print(f"\nwrote {out / 'basis_functions.svg'}")
