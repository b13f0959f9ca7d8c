"""Schur-Szego composition, Narayana polynomials, and certified root analysis."""

from .exactpoly import (
    RationalMatrix,
    RationalPoly,
    binomial,
    elementary_symmetric_prefix,
    interpolate,
    kernel,
    power_sum,
    solve_linear,
)
from .css import (
    INFINITY,
    AffineMapQ,
    CompositionFactor,
    build_phi,
    composition_factor,
    css_compose,
    css_compose_multi,
    factor_symmetric_functions,
)
from .narayana import (
    NarayanaTriangle,
    catalan,
    dyck_peak_count,
    narayana_number,
    narayana_poly_direct,
    narayana_poly_recurrence,
    triangle_matrix,
)
from .spectra import (
    ExpansionEstimate,
    SpectrumReport,
    eigenpolynomial,
    eigenvalues_closed_form,
    extract_q,
    m_transform,
    richardson_limit,
    sigma_system_solve,
    spectrum_report,
    verify_mjnj,
)
from .roots import (
    RootIsolation,
    interlace_check,
    is_hyperbolic,
    isolate_roots,
    poly_gcd,
    refine,
    roots_float,
    sturm_count,
)
from .asymptotics import (
    RecurrenceSpec,
    StepCDF,
    cauchy_transform,
    cdf_kappa,
    characteristic_roots,
    density_rho,
    empirical_cdf,
    equimodular_check,
    ks_distance,
    plemelj_density,
    poincare_ratio,
    psi_limit,
    psi_n,
    theta_limit,
    theta_n,
)

__version__ = "0.1.0"
