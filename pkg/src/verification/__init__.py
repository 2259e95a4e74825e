from .families import (
    FamilyParams, trinomial, binomial_p3, binomial_k4, dickson_n_pl2,
    predict_trinomial_pp, predict_binomial_pp_p3, predict_result1_pp
)
from .theorems import (
    TheoremReport, CellOptions, Grid, verify_cell, scan, check_periodicity, verify_theorem
)
from .report_collector import ReportCollector
from .scan_runner import ScanRunner

__all__ = [
    'FamilyParams', 'trinomial', 'binomial_p3', 'binomial_k4', 'dickson_n_pl2',
    'predict_trinomial_pp', 'predict_binomial_pp_p3', 'predict_result1_pp',
    'TheoremReport', 'CellOptions', 'Grid', 'verify_cell', 'scan', 'check_periodicity',
    'verify_theorem', 'ReportCollector', 'ScanRunner'
]
