"""Teaching sets of two functions on the 10x10 grid, checked against the definition on a small grid."""

from gridthresh import teaching
from gridthresh.exact_geom import Line
from gridthresh.gridfn import from_line

for line in (Line(55, 7, 5), Line(22, 3, 2)):
    f = from_line(line, (10, 10))
    prof = teaching.teaching_set(f)
    print(f"zeros where {line.a1}x1 + {line.a2}x2 <= {line.a0}")
    print(f.rows())
    print("teaching set:", ", ".join(f"{p}->{v}" for p, v in prof.points))
    print(f"size={prof.size} nu={prof.nu} kappa={prof.kappa}\n")

# on 4x4 every teaching set pins its function down, and no proper subset does
f = from_line(Line(3, 1, 1), (4, 4))
pts = [p for p, _ in teaching.teaching_set(f).points]
print("4x4, x1 + x2 <= 3:", pts)
print("teaches:", teaching.verify_teaching(f, pts))
print("any point droppable:", any(teaching.verify_teaching(f, pts[:k] + pts[k + 1:]) for k in range(len(pts))))
