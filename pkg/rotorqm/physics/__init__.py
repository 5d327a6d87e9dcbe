"""
Física de rotorqm - Funciones de Bessel, Sagnac clásico, capa cilíndrica y cilindro macizo.
"""
from .classical import (
	CanonicalMomentum,
	ClassicalSignal,
	ClosedPath,
	TimingResult,
	canonical_momentum,
	circulation_phase,
	classical_sagnac_phase,
	de_broglie_sagnac_phase,
	de_broglie_wavelength,
	gamma_factor,
	leading_order_delta_t,
	path_delta_t,
	path_trace,
	proper_time,
	proper_time_reflection_asymmetry,
	reflect_path,
	roundtrip_delta_t,
)
from .cylinder3d import (
	CylinderMode,
	anomalous_interference,
	beat_cycle_average,
	beat_period,
	cylinder_energy,
	cylinder_mode,
	dirichlet_energy,
	eigen_residual,
	mode_wavefunction,
	negative_energy_census_3d,
	neumann_energy,
	normalization_constant,
)
from .quadrature import QuadratureResult, integrate
from .shell import (
	CensusResult,
	InterferenceTrace,
	ShellCoefficients,
	ShellMomentum,
	SolutionClass,
	SpectrumFamily,
	SpectrumPoint,
	class2_energy,
	classify,
	classify_discriminant,
	equivalent_flux_radius,
	flux_equivalent_omega,
	flux_spectrum,
	geometric_potential,
	negative_energy_census_shell,
	omega_quantization,
	periodic_cap_psi_energy,
	periodic_cap_psi_momentum,
	periodic_lower_psi_energy,
	rotation_coefficient,
	sector_interference,
	shell_coefficients,
	shell_residual,
	shell_wavefunction,
	spectrum_family,
)
from .specfun import (
	BesselZeroTable,
	ZeroKind,
	bessel_j,
	bessel_j_prime,
	bessel_prime_zero,
	bessel_zero,
	clear_cache,
	zero_table,
	zero_table_rows,
)

__all__ = [
	# Bessel
	"BesselZeroTable",
	"ZeroKind",
	"bessel_j",
	"bessel_j_prime",
	"bessel_prime_zero",
	"bessel_zero",
	"clear_cache",
	"zero_table",
	"zero_table_rows",
	# Cuadratura
	"QuadratureResult",
	"integrate",
	# Sagnac clásico
	"CanonicalMomentum",
	"ClassicalSignal",
	"ClosedPath",
	"TimingResult",
	"canonical_momentum",
	"circulation_phase",
	"classical_sagnac_phase",
	"de_broglie_sagnac_phase",
	"de_broglie_wavelength",
	"gamma_factor",
	"leading_order_delta_t",
	"path_delta_t",
	"path_trace",
	"proper_time",
	"proper_time_reflection_asymmetry",
	"reflect_path",
	"roundtrip_delta_t",
	# Capa
	"CensusResult",
	"InterferenceTrace",
	"ShellCoefficients",
	"ShellMomentum",
	"SolutionClass",
	"SpectrumFamily",
	"SpectrumPoint",
	"class2_energy",
	"classify",
	"classify_discriminant",
	"equivalent_flux_radius",
	"flux_equivalent_omega",
	"flux_spectrum",
	"geometric_potential",
	"negative_energy_census_shell",
	"omega_quantization",
	"periodic_cap_psi_energy",
	"periodic_cap_psi_momentum",
	"periodic_lower_psi_energy",
	"rotation_coefficient",
	"sector_interference",
	"shell_coefficients",
	"shell_residual",
	"shell_wavefunction",
	"spectrum_family",
	# Cilindro
	"CylinderMode",
	"anomalous_interference",
	"beat_cycle_average",
	"beat_period",
	"cylinder_energy",
	"cylinder_mode",
	"dirichlet_energy",
	"eigen_residual",
	"mode_wavefunction",
	"negative_energy_census_3d",
	"neumann_energy",
	"normalization_constant",
]
