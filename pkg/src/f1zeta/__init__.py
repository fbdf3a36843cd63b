"""Deformed multivariable zeta functions of Hurwitz-Igusa type for F1-schemes."""

from .abelian import (
    F1Scheme,
    FgAbelianGroup,
    FiniteAbelianGroup,
    Point,
    count_points,
    exponent_lcm,
    hom_count,
    hom_count_torsion,
    mu_bruteforce,
    mu_exact,
    mu_power,
    normalize_torsion,
)
from .assembly import (
    EvalParams,
    SeriesResult,
    direct_series_oracle,
    euler_product_oracle,
    soule_disc_series,
    zeta_hi_group,
    zeta_hi_scheme,
    zeta_igusa,
)
from .hurwitz import HurwitzConfig, bernoulli, bernoulli_poly, hurwitz_zeta, riemann_zeta
from .poles import (
    PoleDatum,
    order_at,
    pole_divisor_report,
    pole_locations,
    rationality_report,
    residue_numeric,
)
from .schemes import emit_scheme, load_scheme, parse_scheme

__version__ = "0.1.0"
