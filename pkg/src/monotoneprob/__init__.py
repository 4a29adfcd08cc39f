"""Exact operator-valued monotone probability over rational matrix algebras."""

from .algebra import (BMatrix, DimensionError, MatrixModel, ModelFormatError, Q,
                      load_model, matrix_units, parse_rational, random_matrix,
                      random_mean_zero_model, random_model)
from .clt import CLTQuery, MeanZeroError, clt_limit, clt_oracle
from .cumulants import (cumulant, cumulants_from_moments, dot_polynomial,
                        moment_system_from_cumulants, moments_from_cumulants)
from .moments import (CumulantSystem, EvaluationError, FormalWord, MomentSystem,
                      dot_moment, dot_system, functional_pi, mixed_moment,
                      mixed_moment_all_paths)
from .partitions import (OrderedPartition, PartitionError, SetPartition,
                         a_pi_count, a_pi_polynomial, enumerate_partitions,
                         interpolation_blocks, is_monotone,
                         linear_extension_count, monotone_partitions,
                         nc_partition_of_sequence, nests,
                         non_crossing_partitions, ordered_from_sequence, q_map)
from .polynomials import MPoly, zero_constant_matrix_coeffs, zero_constant_scalar_coeffs
from .series import (SeriesElement, diff_eq_residuals, double_odot_terms,
                     from_cumulants, from_moments, identity_series,
                     muraki_oracle, muraki_sum, odot, odot_term_count,
                     random_series, semigroup_residual, series_equal,
                     series_is_zero, series_sub, series_sum, series_table,
                     star, sum_parameter_family, t_family)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
