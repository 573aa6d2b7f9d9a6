"""Named real surfaces with their expected Hilbert-square verdicts."""

from .entries import (
    ENTRIES,
    MAXIMAL_CUBIC_REAL_LOCI,
    CatalogEntry,
    CatalogResult,
    FanoReport,
    evaluate,
    export_catalog,
    fano_irregular_report,
    fano_regular_verdict,
    run_catalog,
)

__all__ = [
    'ENTRIES',
    'MAXIMAL_CUBIC_REAL_LOCI',
    'CatalogEntry',
    'CatalogResult',
    'FanoReport',
    'evaluate',
    'export_catalog',
    'fano_irregular_report',
    'fano_regular_verdict',
    'run_catalog',
]
