"""Color one GP(n, k), check it, and write a DOT file next to this script.

    python3 demos/color_one.py 24 6
"""

import sys
from pathlib import Path

from gpstar import GPGraph, dispatch, verify_star
from gpstar.io import to_dot


def main(n: int = 24, k: int = 6) -> None:
    g = GPGraph(n, k)
    rep = dispatch(g)
    viol = verify_star(g, rep.coloring, require_total=True)
    print(f"GP({n},{k}): d={g.d} t={g.t} method={rep.method.value}")
    print(f"colors used: {rep.colors_used}, faithful: {rep.faithful}, defects: {len(viol)}")
    for note in rep.deviations:
        print("  note:", note)
    out = Path(__file__).with_name(f"gp_{n}_{k}.dot")
    out.write_text(to_dot(rep.coloring))
    print(f"wrote {out} (render with: neato -n -Tsvg {out.name})")


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:3]))
