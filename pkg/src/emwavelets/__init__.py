"""Complex-source pulsed beams and their spheroidal antenna sources.

A point source displaced to imaginary coordinates i*a turns the Euclidean
distance into the complex distance sigma = p - i*q, whose branch cuts are
oblate spheroidal membranes spanning the circle sigma = 0.  Driving such a
source with the analytic signal of a pulse produces tightly collimated,
causally radiated beams; this package evaluates them (scalar and
electromagnetic), the induced surface charge/current densities on the
spheroid, and a battery of numerical identity checks.
"""

from .errors import (
    ConfigError,
    EmwaveletsError,
    LightConePoleError,
    NearRimError,
    NoSolutionError,
    OnBranchCircleError,
    OnCutError,
    PoleOnPathError,
    QuadratureDivergenceError,
    RimSingularityError,
    SubRadiatingError,
    TooCloseToCutError,
)
from .geometry import (
    BranchCut,
    ComplexDistanceSample,
    CustomCut,
    FlatDisk,
    LowerSpheroid,
    OblateCoords,
    SmoothSpheroid,
    SourceConfig,
    UpperSpheroid,
    complex_distance,
    complex_distance_principal,
    cut_sign,
    frame,
    from_oblate,
    smooth_cut_function,
    spheroid_point,
    to_oblate,
)
from .signals import (
    CauchySignal,
    SampledSignal,
    SignalSum,
    SpectralProfile,
    boundary_recovery,
    complex_time,
    diffraction_angle,
    mixed_signals,
    peak_strength,
    pulse_duration,
    spectral_profile,
    spectrum_cauchy,
)
from .scalar_wavelet import ScalarWavelet, interior_psi, psi, psi_sigma_derivs, wave_residual
from .em_fields import (
    EMFieldSample,
    LMNTriplet,
    PolarizationVector,
    far_field,
    field,
    field_curl_oracle,
    four_potential,
    helicity_residual,
    interior_field,
    joint_field,
    lmn,
    lorenz_residual,
    poynting_energy_far,
)
from .surface_sources import (
    SurfaceSourceSample,
    TildeTriplet,
    bandpass_response,
    coulomb_disk_sources,
    coulomb_field,
    coulomb_spheroid_sources,
    disk_angular_velocity,
    disk_charge_velocity,
    effective_aperture,
    field_jump,
    impulse_surface_sources,
    impulse_tilde_lmn,
    phase_sweep_magnetic_fraction,
    surface_sources_approx,
    surface_sources_exact,
    tilde_lmn,
)

__version__ = "0.1.0"
