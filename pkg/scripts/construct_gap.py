"""Histogram of |constructed ID code| - gamma_ID and n_Q - |constructed| over the universe.

    python scripts/construct_gap.py --max-n 9
"""

import argparse
from collections import Counter

from blockcodes.codes import Kind
from blockcodes.construct import id_code_at_most_nq
from blockcodes.enumeration import enumerate_connected_block_graphs
from blockcodes.graph_core import count_maximal_cliques, is_identifiable
from blockcodes.solver import gamma


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=9)
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        over_gamma, under_nq = Counter(), Counter()
        for g in enumerate_connected_block_graphs(n):
            if not is_identifiable(g):
                continue
            size = len(id_code_at_most_nq(g))
            over_gamma[size - gamma(g, Kind.ID).gamma] += 1
            under_nq[count_maximal_cliques(g) - size] += 1
        print(f"n={n}  size-gamma {dict(sorted(over_gamma.items()))}  nq-size {dict(sorted(under_nq.items()))}")


if __name__ == "__main__":
    main()
