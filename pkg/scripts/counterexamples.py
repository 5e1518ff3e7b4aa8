"""List connected block graphs where a bound check fails, with the shape of G[C].

    python scripts/counterexamples.py --max-n 9
"""

import argparse
from collections import Counter

from blockcodes import harness
from blockcodes.enumeration import enumerate_connected_block_graphs
from blockcodes.graph_core import components, is_clique


def component_shapes(g, code_mask):
    shapes = []
    for comp in components(g, code_mask):
        size = comp.bit_count()
        shapes.append(f"K{size}" if is_clique(g, comp) else f"T{size}")
    return sorted(shapes)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=9)
    args = ap.parse_args()
    tally = Counter()
    for n in range(2, args.max_n + 1):
        for g in enumerate_connected_block_graphs(n):
            facts = harness.collect_facts(g)
            failing = [name for name, fn in harness.CHECKS.items() if fn(facts).status == "fail"]
            if not failing:
                continue
            shapes = {k.value: component_shapes(g, r.certificate.mask) for k, r in facts.solved.items()}
            tally.update(failing)
            print(f"n={n} {harness.graph_id(g):12s} fail={','.join(failing):20s} "
                  f"id={facts.gid} ld={facts.gld} old={facts.gold} nq={facts.nq} G[C]={shapes}")
    print("totals:", dict(tally))


if __name__ == "__main__":
    main()
