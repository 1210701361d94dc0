"""Which Matsubara modes carry the force, as a function of gap width.

Reproduces the mode-decomposition table for gold at room temperature:
at a = 1 um the m = 1 mode dominates (the heuristic m ~ 1/(2 pi aT)
estimate), while beyond ~3 um the classical m = 0 term takes over and
the problem becomes effectively high-temperature.
"""

import casimir as cs

gold = cs.gold_drude()

header = f"{'a [um]':>7}" + "".join(f"{f'm={m}':>9}" for m in range(8))
print(header)
for a_um in (0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0):
    cfg = cs.ThermalGapConfig(T=300.0, a=a_um * 1e-6)
    res = cs.total_pressure(cfg, gold)
    cells = "".join(f"{res.fraction(m):9.2f}" for m in range(8))
    print(f"{a_um:7.1f}{cells}")

print("\nDominant-mode heuristic round(1/(2 pi aT)):")
for a_um in (0.5, 1.0, 3.0):
    print(f"  a = {a_um:3.1f} um -> m ~ {cs.dominant_mode(a_um * 1e-6, 300.0)}")
