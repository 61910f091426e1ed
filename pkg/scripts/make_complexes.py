#!/usr/bin/env python3
"""Write the shipped example triangulations as .tri files.

Usage: python3 scripts/make_complexes.py [outdir]

Produces:
  boundary_delta5.tri   the closed 4-sphere as the boundary of a 5-simplex
  double_pentachoron.tri two mirror pentachora glued along all facets
  ball_before.tri       the even-index half of the (3,3) move
  ball_after.tri        the odd-index half (same outer boundary)
"""

import sys
from pathlib import Path

from pachner import Triangulation, pachner_sides, simplex_boundary


def main() -> int:
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("data")
    outdir.mkdir(parents=True, exist_ok=True)

    sphere = simplex_boundary(5)
    sphere.save(outdir / "boundary_delta5.tri")

    double = Triangulation(4, [((0, 1, 2, 3, 4), 1), ((0, 1, 2, 3, 4), -1)])
    double.save(outdir / "double_pentachoron.tri")

    before, after = pachner_sides(5, (0, 2, 4), (1, 3, 5))
    before.save(outdir / "ball_before.tri")
    after.save(outdir / "ball_after.tri")

    for name in (
        "boundary_delta5.tri",
        "double_pentachoron.tri",
        "ball_before.tri",
        "ball_after.tri",
    ):
        t = Triangulation.load(outdir / name)
        print(
            f"{name}: dim={t.dim} tops={len(t.simplexes)} "
            f"boundary={len(t.boundary_facets())} chi={t.euler_characteristic()}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
