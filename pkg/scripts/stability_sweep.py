"""How close d_match gets to eps / min l under random perturbations.

For random graphs and admissible pairs, perturbs the measuring function by at
most eps in max-norm and prints the distribution of d_match / (eps / min l).
"""

import argparse

import numpy as np

from msize.foliation import AdmissiblePair, reduce
from msize.matching import d_match
from msize.shape import FilteredGraph
from msize.sizefn1d import compute_corner_series


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--vertices", type=int, default=40)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    ratios = []
    for _ in range(args.trials):
        n = int(rng.integers(2, args.vertices + 1))
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 3 / n]
        g = FilteredGraph.from_edges(rng.uniform(-1, 1, size=(n, args.k)), edges)
        l = rng.uniform(0.05, 1, size=args.k)
        b = rng.uniform(-0.5, 0.5, size=args.k)
        b[-1] = -b[:-1].sum()
        pair = AdmissiblePair(tuple(l / np.linalg.norm(l)), tuple(b))
        eps = rng.uniform(0.01, 0.5)
        h = g.with_values(g.values + rng.uniform(-eps, eps, size=g.values.shape))
        dist = d_match(compute_corner_series(g, reduce(g, pair)), compute_corner_series(h, reduce(h, pair))).cost
        ratios.append(dist / (eps / pair.weight))

    ratios = np.array(ratios)
    print(f"trials: {args.trials}, k = {args.k}")
    for q in (0.5, 0.9, 0.99, 1.0):
        print(f"  quantile {q:4.2f} of d_match / bound: {np.quantile(ratios, q):.4f}")
    print(f"  violations (> 1): {int(np.sum(ratios > 1 + 1e-9))}")


if __name__ == "__main__":
    main()
