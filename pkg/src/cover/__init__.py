"""Periodic covers, windows, the deck average and the cover exact sequence."""

from .periodic import CoverCochain, PeriodicCover, Window, build_window, required_radius, translations
from .cutoff import (
    CUTOFF_KINDS,
    CutoffWeights,
    CertificateTerm,
    KernelCertificate,
    cutoff,
    deck_average,
    section,
    kernel_certificate,
)
from .sequence import (
    ConnectingClass,
    coinvariant_ranks,
    coinvariant_compact_cohomology,
    coinvariant_ranks_report,
    stable_radius,
    connecting_map,
    cutoff_independence_witness,
    cover_exact_sequence,
    theta_class,
    h0_check,
    iota_injectivity_check,
    corollary_check,
)
from .library import cubical_cover, euclidean_cover, line, plane, space, strip, bundled_cover, BUNDLED_COVERS
from .formats import CoverDocument, load_cover

__all__ = [
    "CoverCochain",
    "PeriodicCover",
    "Window",
    "build_window",
    "required_radius",
    "translations",
    "CUTOFF_KINDS",
    "CutoffWeights",
    "CertificateTerm",
    "KernelCertificate",
    "cutoff",
    "deck_average",
    "section",
    "kernel_certificate",
    "ConnectingClass",
    "coinvariant_ranks",
    "coinvariant_compact_cohomology",
    "coinvariant_ranks_report",
    "stable_radius",
    "connecting_map",
    "cutoff_independence_witness",
    "cover_exact_sequence",
    "theta_class",
    "h0_check",
    "iota_injectivity_check",
    "corollary_check",
    "cubical_cover",
    "euclidean_cover",
    "line",
    "plane",
    "space",
    "strip",
    "bundled_cover",
    "BUNDLED_COVERS",
    "CoverDocument",
    "load_cover",
]
