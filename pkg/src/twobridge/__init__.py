"""Delta-unknotting bounds and a2 for two-bridge knots in Conway form."""
from __future__ import annotations

from .bounds import DeltaBoundReport, bound_report, dg_bounds, lower_bound, u_delta_closed
from .catalog import catalog_lookup
from .conway import ConwayWord, SchubertPair, Verdict, equivalent, evaluate_fraction, parse_word
from .invariants import a2, a2_skein
from .lab import express_in_family, verify_table1, verify_table2

__all__ = [
    "ConwayWord", "DeltaBoundReport", "SchubertPair", "Verdict", "a2", "a2_skein",
    "bound_report", "catalog_lookup", "dg_bounds", "equivalent", "evaluate_fraction",
    "express_in_family", "lower_bound", "parse_word", "u_delta_closed", "verify_table1",
    "verify_table2",
]
