"""Build the fermion spectrum: free leptons first, then two calibrations.

The charged leptons need nothing beyond the input constants, because
their auxiliary base is (3/2) * B6. The quarks need one calibrated base
(solved from the d row) and the top needs one more lump (solved from its
own row). Everything else in the table is then a prediction.
"""

from dimorb import (
    AuxBaseSet,
    ModelConstants,
    TABLE,
    Unit,
    calibrate,
    composition,
    fermion_mass,
    full_spectrum,
    lepton_aux_base,
)

constants = ModelConstants()

print("== leptons, no calibration ==")
lepton_bases = AuxBaseSet.lepton_only(constants)
print(f"lepton aux base = 1.5 * B6 = {lepton_aux_base(constants)}")
for name, stated in (("mu", 105.6), ("tau", 1786.0)):
    mass = fermion_mass(composition(name), lepton_bases, constants)
    off = abs(mass.mev - stated) / stated
    print(f"{name:4} computed {mass.mev:10.4f} MeV   stated {stated:7.1f}   off by {off:.2e}")

print()
print("== calibration ==")
result = calibrate(constants)  # d row anchors the quark base, t row the lump
bases = result.bases
print(f"quark base (level 7) = {bases.quark_base_7}")
print(f"top lump (level 8)   = {bases.top_lump_8.to(Unit.GEV)}")
print("anchor residuals:", {k: f"{v:.1e}" for k, v in result.residuals.items()})
print("held-out rows:    ", {k: f"{v:.1e}" for k, v in result.non_anchor_residuals.items()})

print()
print("== the full table ==")
print(f"{'name':7}{'orbitals':29}{'computed':>12} {'stated':>10}  note")
for (name, mass), row in zip(full_spectrum(constants, bases), TABLE):
    shown = mass.to(row.display_unit)
    stated = row.table_mass.to(row.display_unit)
    print(f"{name:7}{row.orbitals:29}{shown.magnitude:>12.6g} {stated.magnitude:>10.6g}"
          f"  {row.note}")

print()
print("== structural differences ==")
masses = dict(full_spectrum(constants, bases))
print(f"d - u   = {masses['d'].mev - masses['u'].mev:.6f} MeV  (three electrons)")
print(f"tau - mu = {masses['tau'].mev - masses['mu'].mev:.4f} MeV  (24 * B6)")
print(f"s - d   = {masses['s'].mev - masses['d'].mev:.4f} MeV  (16 quark bases)")
