"""Tally construction routes and faithfulness over a range of n.

    python3 demos/method_summary.py 60
"""

import sys
from collections import Counter

from gpstar import GPGraph, Unsupported, dispatch, verify_star


def main(n_max: int = 60) -> None:
    tally: Counter = Counter()
    worst = 0
    for n in range(6, n_max + 1):
        for k in range(1, n // 2 + 1):
            g = GPGraph(n, k)
            try:
                rep = dispatch(g)
            except Unsupported:
                tally["unsupported", None] += 1
                continue
            assert not verify_star(g, rep.coloring, require_total=True)
            tally[rep.method.value, rep.faithful] += 1
            worst = max(worst, rep.colors_used)
    print(f"{'method':<14}{'faithful':>9}{'count':>7}")
    for (method, faithful), count in sorted(tally.items(), key=str):
        print(f"{method:<14}{str(faithful):>9}{count:>7}")
    print(f"most colors used: {worst}")


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:2]))
