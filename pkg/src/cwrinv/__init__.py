"""CWR invariant of alternating links: cycle polynomials of weighted Tait graphs."""

from .catalog import KnotRecord, distinguishing_report, load_catalog, verify_against_expected
from .cwr import CwrValue, compute_cwr, crossing_number, derive_wrp, mirror_value, parse_cwr, render_cwr, writhe
from .diagram import PlanarDiagram, connected_sum, insert_twists, mirror, parse_pd
from .poly import BivarPoly, parse_poly, render_poly
from .tait import tait_graphs

__version__ = "0.1.0"

__all__ = [
    "BivarPoly",
    "CwrValue",
    "KnotRecord",
    "PlanarDiagram",
    "compute_cwr",
    "connected_sum",
    "crossing_number",
    "derive_wrp",
    "distinguishing_report",
    "insert_twists",
    "load_catalog",
    "mirror",
    "mirror_value",
    "parse_cwr",
    "parse_pd",
    "parse_poly",
    "render_cwr",
    "render_poly",
    "tait_graphs",
    "verify_against_expected",
    "writhe",
]
