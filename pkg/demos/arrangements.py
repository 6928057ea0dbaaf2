"""Line arrangements whose cells match threshold functions, drawn as SVG."""

import sys
from pathlib import Path

from gridthresh import arrangement, formulas

out = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
out.mkdir(parents=True, exist_ok=True)

geo = arrangement.plane_arrangement((3, 3))
print("plane 3x3, geometry:", geo)
print("plane 3x3, formula: ", formulas.plane_stats_formula((3, 3)))
tri = arrangement.triangle_arrangement((4, 4))
print("triangle 4x4, geometry:", tri)
print("triangle 4x4, formula: ", formulas.triangle_stats_formula((4, 4)))

arrangement.emit_arrangement_svg((3, 3), arrangement.PLANE, out / "plane_3x3.svg")
arrangement.emit_arrangement_svg((4, 4), arrangement.TRIANGLE, out / "triangle_4x4.svg")
print(f"wrote {out / 'plane_3x3.svg'} and {out / 'triangle_4x4.svg'}")
