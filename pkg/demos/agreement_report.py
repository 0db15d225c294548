"""Hold the model against observed values and render the report.

Uses the built-in reference set (top mass, mixing angle, baryonic mass
fraction, Planck scale), then shows the same comparison machinery on a
custom observed file for the charged leptons.
"""

from dimorb import (
    ModelConstants,
    baryon_fractions,
    boson_ladder,
    calibrate,
    compare_all,
    default_observed,
    electroweak_mix,
    format_observed_csv,
    full_spectrum,
    parse_observed,
    render,
)

constants = ModelConstants()
bases = calibrate(constants).bases


def report_for(observed):
    return compare_all(
        full_spectrum(constants, bases),
        boson_ladder(constants),
        electroweak_mix(constants),
        baryon_fractions(),
        observed,
    )


print("== the built-in reference set ==")
print(format_observed_csv(default_observed()))

report = report_for(default_observed())
print("== markdown ==")
print(render(report))

print("== csv ==")
print(render(report, "csv"))

print("== json ==")
print(render(report, "json"))

# any observed file with the same header works; names select the claims
lepton_csv = """\
name,value,unit,uncertainty,source
muon,105.6,MeV,0.5,reference table
tau,1786,MeV,5,reference table
"""

print("== a custom lepton file ==")
lepton_report = report_for(parse_observed(lepton_csv))
print(render(lepton_report.rows, "markdown"))

worst = max(lepton_report.rows, key=lambda row: row.rel_error)
print(f"worst lepton row: {worst.name} at {worst.rel_error:.2e} relative")
