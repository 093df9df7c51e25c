"""Autocorrelations and diffraction spectra of weighted return time combs.

The library covers three families of interval maps: rigid rotations with
rational or irrational rotation number, the linear maps x -> kx mod 1, and
piecewise monotone expanding maps handled through an Ulam discretisation of
the transfer operator.  Rotations produce pure point spectra; the mixing maps
produce a single atom at zero plus an absolutely continuous density.
"""

from .autocorrelation import (
    XiSequence,
    rational_xi_cycle,
    xi_distance,
    xi_empirical,
    xi_linear_identity,
    xi_mixing,
    xi_rotation_irrational,
    xi_rotation_rational,
)
from .combs import (
    COMB_HEADER,
    CoefficientSeq,
    WeightedComb,
    build_comb,
    finite_autocorrelation,
    periodogram,
    read_comb_csv,
    write_comb_csv,
)
from .convergence import (
    RotationItem,
    RotationSequenceSpec,
    diffraction_drift,
    midpoint_indicator_discrepancy,
    rational_engine_equality,
    sqrt2_convergents,
    xi_convergence_run,
)
from .diffraction import (
    Atom,
    DiffractionSpectrum,
    estimate_spectrum,
    linear_identity_density,
    linear_identity_series_density,
    mixing_diffraction,
    rotation_diffraction_irrational,
    rotation_diffraction_rational,
    top_atoms,
)
from .dynamics import (
    LEBESGUE,
    AtomicOrbit,
    Branch,
    Lebesgue,
    LinearMod,
    PiecewiseMonotone,
    RigidRotation,
    TransferStationary,
    frac,
    iterate,
    orbit,
    preimage_intervals,
    random_orbit,
    rotation_rational,
    sample,
)
from .observables import (
    Polynomial,
    Step,
    Tabulated,
    circle_autocorrelation,
    cyclic_samples,
    fourier_coefficient,
    identity,
    indicator,
    integrate,
    integrate_squared,
    is_identity,
    sup_distance,
)
from .transfer import (
    SpectralData,
    UlamOperator,
    analyze,
    build_ulam,
    correlation_coefficients,
    linear_identity_coefficients,
    stationary_density,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Atom",
    "AtomicOrbit",
    "Branch",
    "COMB_HEADER",
    "CoefficientSeq",
    "DiffractionSpectrum",
    "LEBESGUE",
    "Lebesgue",
    "LinearMod",
    "PiecewiseMonotone",
    "Polynomial",
    "RigidRotation",
    "RotationItem",
    "RotationSequenceSpec",
    "SpectralData",
    "Step",
    "Tabulated",
    "TransferStationary",
    "UlamOperator",
    "WeightedComb",
    "XiSequence",
    "analyze",
    "build_comb",
    "build_ulam",
    "circle_autocorrelation",
    "correlation_coefficients",
    "cyclic_samples",
    "diffraction_drift",
    "estimate_spectrum",
    "finite_autocorrelation",
    "fourier_coefficient",
    "frac",
    "identity",
    "indicator",
    "integrate",
    "integrate_squared",
    "is_identity",
    "iterate",
    "linear_identity_coefficients",
    "linear_identity_density",
    "linear_identity_series_density",
    "midpoint_indicator_discrepancy",
    "mixing_diffraction",
    "orbit",
    "periodogram",
    "preimage_intervals",
    "random_orbit",
    "rational_engine_equality",
    "rational_xi_cycle",
    "read_comb_csv",
    "rotation_diffraction_irrational",
    "rotation_diffraction_rational",
    "rotation_rational",
    "sample",
    "sqrt2_convergents",
    "stationary_density",
    "sup_distance",
    "top_atoms",
    "write_comb_csv",
    "xi_convergence_run",
    "xi_distance",
    "xi_empirical",
    "xi_linear_identity",
    "xi_mixing",
    "xi_rotation_irrational",
    "xi_rotation_rational",
]
