"""Exact localized equivariant quadratic DT series of oriented toric threefolds."""

__version__ = "0.1.0"

from .dtinv import (DTReport, EmbeddingParams, bott_residue_c3, classical_dt_series,
                    cone_weights, localization_oracle, quadratic_dt_series,
                    select_weights, tau_independence_check)
from .errors import DegenerateWeights, FanError, InadmissibleWeights
from .fan import (Fan, cone_frames, load_fan, octant_fan, orientation_check,
                  sigma_orbit_representatives, star_subdivide, validate_fan,
                  weight_matrices)
from .partitions import Partition3D, enumerate_partitions, is_downward_closed
from .series import PowerSeries, macmahon, series_exp, series_log, series_mul, series_pow, substitute
from .vertex import (LaurentZ3, WeightChar, q_lattice, specialize, split_minus, split_plus,
                     trace_lattice, vertex_measure_classical, vertex_measure_quadratic)
from .witt import epsilon, euler_ratio, sign_product

__all__ = [
    "DTReport", "EmbeddingParams", "bott_residue_c3", "classical_dt_series", "cone_weights",
    "localization_oracle", "quadratic_dt_series", "select_weights", "tau_independence_check",
    "DegenerateWeights", "FanError", "InadmissibleWeights",
    "Fan", "cone_frames", "load_fan", "octant_fan", "orientation_check",
    "sigma_orbit_representatives", "star_subdivide", "validate_fan", "weight_matrices",
    "Partition3D", "enumerate_partitions", "is_downward_closed",
    "PowerSeries", "macmahon", "series_exp", "series_log", "series_mul", "series_pow",
    "substitute",
    "LaurentZ3", "WeightChar", "q_lattice", "specialize", "split_minus", "split_plus",
    "trace_lattice", "vertex_measure_classical", "vertex_measure_quadratic",
    "epsilon", "euler_ratio", "sign_product",
]
