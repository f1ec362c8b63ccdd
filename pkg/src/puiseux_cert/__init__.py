"""Exact certificates that a common zero of a polynomial system is not isolated.

Given a system f, a common zero xi and a finite Puiseux vector Theta centered
at xi, the certifiers check sufficient conditions (high vanishing order of
f(Theta) plus bound gates on the precision L) and report which prefix of
Theta is guaranteed to start a parametrization of a solution curve.
"""

from .audit import audit_certificate, audit_mismatches
from .bivariate import (
    BivariateQuery,
    PrefixCertificate,
    lemma_prefix_certificate,
    lemma_regular_refinement,
    proposition_common_curve,
    proposition_regular_refinement,
)
from .bounds import (
    BoundReport,
    bezout_degree_bound,
    bezout_noether_bound,
    degree_bounds,
    mixed_volume,
    mixedvol_degree_bound,
    noether_bounds,
    normalized_volume,
    sparse_degree_bound,
    sparse_noether_bound,
)
from .certificates import Verdict
from .multivar import (
    CurvePrefixCertificate,
    NonIsolationCertificate,
    SystemQuery,
    certify_curve_prefix,
    certify_nonisolated,
)
from .newton import Branch, expand_branches, newton_polygon_edges, regular_lift
from .parse import PolySyntaxError, poly_parse
from .poly import MultiPoly, UniPoly, root_multiplicity
from .puiseux import INF, PuiseuxPoly, PuiseuxVector, substitute, vanishing_order_profile
from .resultant import gcd_bivariate, resultant_y

__version__ = "0.1.0"

__all__ = [
    "INF",
    "BivariateQuery",
    "BoundReport",
    "Branch",
    "CurvePrefixCertificate",
    "MultiPoly",
    "NonIsolationCertificate",
    "PolySyntaxError",
    "PrefixCertificate",
    "PuiseuxPoly",
    "PuiseuxVector",
    "SystemQuery",
    "UniPoly",
    "Verdict",
    "audit_certificate",
    "audit_mismatches",
    "bezout_degree_bound",
    "bezout_noether_bound",
    "certify_curve_prefix",
    "certify_nonisolated",
    "degree_bounds",
    "expand_branches",
    "gcd_bivariate",
    "lemma_prefix_certificate",
    "lemma_regular_refinement",
    "mixed_volume",
    "mixedvol_degree_bound",
    "newton_polygon_edges",
    "noether_bounds",
    "normalized_volume",
    "poly_parse",
    "proposition_common_curve",
    "proposition_regular_refinement",
    "regular_lift",
    "resultant_y",
    "root_multiplicity",
    "sparse_degree_bound",
    "sparse_noether_bound",
    "substitute",
    "vanishing_order_profile",
]
