"""Find enumerated block graphs attaining the vertex-count lower bounds.

A graph attains the ID/OLD bound when 3*gamma == n + 3 and the LD bound when
3*gamma == n + 1.

    python scripts/extremal_search.py --max-n 9
"""

import argparse

from blockcodes.codes import Kind
from blockcodes.enumeration import enumerate_connected_block_graphs
from blockcodes.graph_core import to_graph6
from blockcodes.solver import gamma, is_admissible

SLACK = {Kind.ID: 3, Kind.OLD: 3, Kind.LD: 1}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=9)
    args = ap.parse_args()
    for kind in Kind:
        print(f"# {kind.value}")
        for n in range(2, args.max_n + 1):
            hits = []
            for g in enumerate_connected_block_graphs(n):
                if is_admissible(g, kind) and 3 * gamma(g, kind).gamma == n + SLACK[kind]:
                    hits.append(to_graph6(g))
            if hits:
                print(f"n={n}: {len(hits)} -> {' '.join(hits)}")


if __name__ == "__main__":
    main()
