"""Exact local L-factors, eigenvalue identities, Saito-Kurokawa lifts,
archimedean gamma factors and distinguishing algorithms for degree-2
Siegel cusp eigenforms."""

from .errors import Gsp4Error
from .scalars import SqrtRational, default_tolerance, half_power, scalars_close
from .series import (
    SeriesPoly,
    TruncatedDirichletSeries,
    dirichlet_convolve,
    euler_expand,
    series_invert,
)
from .satake import (
    ClassicalSatake,
    NormalizedSatake,
    SatakeSystem,
    SpinMultiset,
    StdMultiset,
    denormalize,
    eigenvalues_from_spin_multiset,
    from_eigenvalues,
    normalize,
    satake_equivalent,
    spin_multiset,
    std_multiset,
)
from .euler import (
    LocalFactor,
    eigen_series_local,
    normalized_eigen_series_local,
    rankin_reciprocal,
    rescale,
    spin_reciprocal_eigen,
    spin_reciprocal_satake,
    std_reciprocal,
)
from .hecke import (
    EigenvalueSystem,
    a_coefficients,
    lambda_n,
    lambda_p3,
    lambda_p4,
    lambda_prime_power,
    lemma14_check,
    normalized_lambda_n,
)
from .sk import (
    EllipticEigenform,
    QuadChar,
    dim_sk,
    kronecker,
    sk_eigenvalue,
    sk_spin_coefficients,
    sk_trace_relation,
    sk_twisted_coefficients,
)
from .weil import (
    GammaAtom,
    WeilIrrep,
    WeilRepSum,
    gamma_eval,
    l_factor,
    pole_free_strip,
    rankin_arch_factors,
    spin_arch_param,
    std_arch_param,
    tensor,
)
from .distinguish import (
    DistinguishReport,
    distinguish_level,
    distinguishing_index,
    explicit_main_term,
    first_coefficient_disagreement,
    rankin_lambda,
    smallest_coprime_prime,
    weighted_prime_sum,
)

__version__ = "0.1.0"
