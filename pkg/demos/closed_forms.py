"""Closed-form counts on a few grids, and how the mean teaching-set size drifts toward 7/2."""

import math

from gridthresh import formulas

for m, n in [(2, 2), (3, 3), (4, 5), (10, 10)]:
    rep = formulas.count_report((m, n))
    print(f"{m}x{n}: t={rep.t} t3={rep.t3} t4={rep.t4} sigma={rep.sigma_bar} u={rep.u}")

print()
for n in (10, 20, 40, 80):
    sigma = formulas.sigma_bar((n, n))
    print(f"sigma({n},{n}) = {float(sigma):.6f}   gap to 7/2 = {float(sigma) - 3.5:+.6f}")

# f1 counts ordered visible pairs, so f1 / n^4 tends to the coprime density
ratio = formulas.f_sum(1, 200, 200) / 200**4
print(f"\nf1(200,200) / 200^4 = {ratio:.5f}  vs 6/pi^2 = {6 / math.pi**2:.5f}")
