"""Walk the gauge-boson mass ladder from the electron to the Planck scale.

The ladder needs three anchors: the electron mass fixes the two lowest
levels, the Z0 mass fixes the electroweak level, and every level above
that climbs by a factor 1/alpha^2. This script prints the ladder, checks
it against the top-down power-law approximation, and shows the
electroweak mixing view that absorbs the Z0 anchor.
"""

import math

from dimorb import (
    LadderAlphas,
    ModelConstants,
    Unit,
    boson_ladder,
    closed_form_mass,
    dimensional_fermion_mass,
    electroweak_mix,
)


def section(title):
    print()
    print(title)
    print("-" * len(title))


def main():
    constants = ModelConstants()
    ladder = boson_ladder(constants)

    section("The seven levels")
    print(f"{'d':>2}  {'gauge':8} {'mass':>12}  symmetry")
    for row in ladder:
        mass = row.mass.to(Unit.GEV).magnitude
        print(f"{int(row.orbital):>2}  {row.gauge.value:8} {mass:>12.5g}  {row.symmetry}")

    section("Anchors")
    alpha = constants.alpha_e
    me = constants.m_electron.mev
    print(f"bottom:      B5 = alpha * Me  = {alpha * me:.6g} MeV")
    print(f"strong:      B6 = Me / alpha  = {me / alpha:.6g} MeV")
    print(f"electroweak: B7 = M_Z         = {constants.m_z}")

    section("Climbing factor")
    print(f"1 / alpha^2 = {1.0 / alpha**2:.6f}")
    for d in range(8, 12):
        ratio = ladder.mass(d).mev / ladder.mass(d - 1).mev
        print(f"B{d} / B{d - 1} = {ratio:.6f}")

    section("Against the top-down power law")
    print("the closed form starts at the Planck reference and descends by")
    print("alpha^2 per level; the Z0 anchor breaks the uniform ratio, so the")
    print("two paths agree only to within an order of magnitude")
    print(f"{'d':>2} {'ladder':>12} {'closed form':>12} {'ratio':>7}")
    for row in ladder:
        d = int(row.orbital)
        exact = row.mass.to(Unit.GEV).magnitude
        approx = closed_form_mass(d, constants).to(Unit.GEV).magnitude
        print(f"{d:>2} {exact:>12.4g} {approx:>12.4g} {exact / approx:>7.3f}")

    section("Electroweak mixing view")
    mix = electroweak_mix(constants)
    print(f"theta_w       = {mix.theta_w_deg} degrees (input)")
    print(f"alpha_w       = {mix.alpha_w:.6g}")
    print(f"sin^2 theta_w = {mix.sin2_theta_w:.6g}")
    check = mix.alpha_w**2 * math.cos(math.radians(mix.theta_w_deg))
    check *= constants.m_z.to(Unit.GEV).magnitude
    print(f"alpha_w^2 * cos(theta_w) * M_Z = {check:.6g} GeV  (recovers B6)")

    section("Per-step couplings")
    steps = LadderAlphas.from_constants(constants)
    for d in range(6, 12):
        tag = "  <- electroweak step" if d == 7 else ""
        print(f"alpha_{d} = {steps.alpha(d):.8f}{tag}")

    section("Fermion partners")
    print("each level hosts a fermion partner one factor of alpha below its boson")
    for d in (6, 7, 11):
        partner = dimensional_fermion_mass(d, constants).to(Unit.GEV).magnitude
        print(f"F{d} = B{d} * alpha = {partner:.6g} GeV")


if __name__ == "__main__":
    main()
