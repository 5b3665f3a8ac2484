"""Two trajectories under the phase-flip channel on both qubits.

First run: c0 = (0.6, -0.6, 0.6).  The protected coefficient stays the
largest one for all t, so the classical correlations never move while
discord decays smoothly.

Second run: c0 = (1, -0.6, 0.6).  Now the decaying coefficient starts
above the protected one and discord is frozen until the two magnitudes
cross at t* = -ln(0.6)/2.  At the crossover the optimal measurement
axis jumps from 1 to 3 and the roles of J and D swap.
"""

import numpy as np

from qcorr import ChannelSpec, freezing_time, is_freezing_initial, trajectory


def show(c0, spec, t_grid):
    print(f"c0 = {tuple(c0)}, k = {spec.k}, gamma = {spec.gamma}")
    t_star = freezing_time(c0, spec)
    if is_freezing_initial(c0, spec):
        print(f"freezing conditions hold, crossover at t* = {t_star:.6f}")
    else:
        print("freezing conditions do not hold")
    print(f"{'t':>6s} {'I':>9s} {'J':>9s} {'D':>9s} {'d_A':>9s}  axis")
    for pt in trajectory(c0, spec, t_grid):
        rep = pt.report
        print(f"{pt.t:6.2f} {rep.mutual_info:9.6f} {rep.classical:9.6f} "
              f"{rep.discord:9.6f} {pt.d_a:9.6f}  {pt.optimal_axis}")
    print()


def main():
    spec = ChannelSpec(k=3, gamma=1.0)
    grid = np.linspace(0.0, 1.0, 11)
    show([0.6, -0.6, 0.6], spec, grid)
    show([1.0, -0.6, 0.6], spec, grid)


if __name__ == "__main__":
    main()
