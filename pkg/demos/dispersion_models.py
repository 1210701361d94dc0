"""The permittivity model zoo on the imaginary frequency axis.

Shows eps(i zeta) for Drude, plasma and tabulated gold, the
Bloch-Grueneisen temperature dependence of the relaxation frequency, the
spectral-function sum rule, and the zero-mode product
lim zeta^2 (eps - 1) that separates Drude-like from plasma-like response.
"""

import numpy as np

import casimir as cs
from casimir.constants import ev_to_rad_s

gold = cs.gold_drude()
plasma = cs.Plasma(omega_p_ev=9.0)

# a synthetic "measured" table sampled from the Drude curve
zs = np.geomspace(1e12, 1e17, 120)
table = cs.Tabulated(cs.PermittivityTable(zs, cs.eps_drude(zs, gold)),
                     zero_mode_class="drude_like")

print(f"{'zeta [rad/s]':>13} {'Drude':>12} {'plasma':>12} {'tabulated':>12}")
for z in np.geomspace(1e13, 1e16, 7):
    print(f"{z:13.2e} {gold.eps(z):12.4e} {plasma.eps(z):12.4e} "
          f"{table.eps(z):12.4e}")

print("\nBloch-Grueneisen relaxation frequency (theta_D = 170 K, "
      "calibrated to 35.6 meV at 300 K):")
bg = cs.BlochGruneisen()
for T in (50.0, 150.0, 300.0, 350.0, 500.0):
    print(f"  nu({T:5.0f} K) = {cs.nu_bloch_gruneisen(T, bg) * 1e3:7.3f} meV")

gamma = ev_to_rad_s(0.035)
print(f"\nspectral sum rule at gamma = {gamma:.4e} rad/s: "
      f"{cs.sum_rule_check(gamma):.9f} (exact: 1)")

print("\nzero-mode product lim zeta^2 (eps - 1):")
print(f"  Drude gold : {cs.zero_mode_product(gold):.1f} rad^2/s^2 "
      f"(TE zero mode absent)")
print(f"  plasma     : {cs.zero_mode_product(plasma):.4e} rad^2/s^2 "
      f"(= omega_p^2 = {plasma.omega_p_rad_s**2:.4e})")
