"""Casimir pressure magnitude versus gap width for gold plates.

Sweeps |P(a)| at room temperature for the Drude, plasma and ideal-metal
models and prints a semilog-style table.  The real-metal curves fall well
below the ideal one at sub-micron gaps, where the finite plasma frequency
matters most.
"""

import numpy as np

import casimir as cs

gold = cs.gold_drude()
plasma = cs.Plasma(omega_p_ev=9.0)
ideal = cs.Ideal()

gaps_um = np.geomspace(0.5, 5.0, 11)

print(f"{'a [um]':>8} {'|P| Drude [Pa]':>16} {'|P| plasma [Pa]':>16} "
      f"{'|P| ideal [Pa]':>16} {'Drude/ideal':>12}")
for a_um in gaps_um:
    cfg = cs.ThermalGapConfig(T=300.0, a=a_um * 1e-6)
    p_drude = abs(cs.total_pressure(cfg, gold).total)
    p_plasma = abs(cs.total_pressure(cfg, plasma).total)
    p_ideal = abs(cs.total_pressure(cfg, ideal).total)
    print(f"{a_um:8.3f} {p_drude:16.6e} {p_plasma:16.6e} "
          f"{p_ideal:16.6e} {p_drude / p_ideal:12.4f}")

print("\nThe 350 K curve overlaps the 300 K one on a semilog plot:")
for a_um in (0.5, 1.0, 2.0, 5.0):
    cfg300 = cs.ThermalGapConfig(T=300.0, a=a_um * 1e-6)
    cfg350 = cs.ThermalGapConfig(T=350.0, a=a_um * 1e-6)
    r = abs(cs.total_pressure(cfg350, gold).total /
            cs.total_pressure(cfg300, gold).total)
    print(f"  a = {a_um:4.1f} um:  |P(350)| / |P(300)| = {r:.4f}")
