"""Exact tools for empty cyclic simplices: cyclotomic and circulant families."""

from .circulant import (
    GeneralCirculant,
    ThresholdReport,
    UVector,
    brute_force_is_empty,
    brute_force_points,
    circulant_to_cyclic,
    continuants,
    facet_volume_and_group,
    is_empty_circulant,
    m0,
    skip_circulant,
    u_vector,
    volume,
    width_circulant,
)
from .cyclic import (
    CyclicSimplex,
    equivalent,
    facet_volumes,
    from_line,
    is_empty,
    lattice_points_in,
    new_cyclic,
    signed_form,
    to_line,
    white_simplex,
)
from .cyclotomic import (
    RootOrbit,
    SearchRecord,
    SweepOptions,
    composite_sweep,
    cyclotomic_simplex,
    histogram,
    principal_primitive_orbits,
    roots_of_unity,
    simplex_from_orbit,
    sweep,
)
from .errors import EmptySimplexError
from .tables import verify_tables
from .width import (
    WidthCertificate,
    certificate_is_valid,
    embedded_width_at_most,
    lattice_width,
    parse_certificate,
    width_at_most,
    width_at_most_mitm,
)

__version__ = "1.0.0"

__all__ = [
    "CyclicSimplex",
    "EmptySimplexError",
    "GeneralCirculant",
    "RootOrbit",
    "SearchRecord",
    "SweepOptions",
    "ThresholdReport",
    "UVector",
    "WidthCertificate",
    "brute_force_is_empty",
    "brute_force_points",
    "certificate_is_valid",
    "circulant_to_cyclic",
    "composite_sweep",
    "continuants",
    "cyclotomic_simplex",
    "embedded_width_at_most",
    "equivalent",
    "facet_volume_and_group",
    "facet_volumes",
    "from_line",
    "histogram",
    "is_empty",
    "is_empty_circulant",
    "lattice_points_in",
    "lattice_width",
    "m0",
    "new_cyclic",
    "parse_certificate",
    "principal_primitive_orbits",
    "roots_of_unity",
    "signed_form",
    "simplex_from_orbit",
    "skip_circulant",
    "sweep",
    "to_line",
    "u_vector",
    "verify_tables",
    "volume",
    "white_simplex",
    "width_at_most",
    "width_at_most_mitm",
    "width_circulant",
]
