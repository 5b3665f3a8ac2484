"""Print the static correlation measures along the Werner family.

The Werner states sit on the line c = (-w, -w, -w).  Discord is nonzero
for every w > 0 even though the states are separable up to w = 1/3, and
all three measures meet at the maximally entangled corner w = 1.
"""

import numpy as np

from qcorr import d_a_optimized, report_bd


def main():
    print(f"{'w':>5s} {'I':>10s} {'J':>10s} {'D':>10s} {'d_A':>10s}  axis")
    for w in np.linspace(0.0, 1.0, 11):
        c = (-w, -w, -w)
        rep = report_bd(c)
        d_a = d_a_optimized(c)
        axis = rep.optimal_axis if rep.optimal_axis is not None else "-"
        print(f"{w:5.2f} {rep.mutual_info:10.6f} {rep.classical:10.6f} "
              f"{rep.discord:10.6f} {d_a:10.6f}  {axis}")

    print()
    print("anchor: c = (1, -1, 1)")
    rep = report_bd([1.0, -1.0, 1.0])
    print(f"  I = {rep.mutual_info:.6f}, J = {rep.classical:.6f}, D = {rep.discord:.6f}")


if __name__ == "__main__":
    main()
