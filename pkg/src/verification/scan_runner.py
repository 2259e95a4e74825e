import logging
import time
from typing import Any, Dict, List, Optional, Sequence

from src.utils.config import load_config
from src.verification.report_collector import ReportCollector
from src.verification.theorems import (
    THEOREMS, CellOptions, Grid, TheoremReport, check_periodicity, scan, theorem_grid,
)

logger = logging.getLogger(__name__)


class ScanRunner:
    """Config-driven front for scans and named theorem runs.

    Explicit arguments win over the YAML config, which wins over built-in
    defaults. Every run is timed and memory-sampled; both only go to the log
    so that rendered reports stay byte-identical between runs.
    """

    def __init__(self, config_path: Optional[str] = None, config: Optional[Dict[str, Any]] = None):
        self.config = config if config is not None else load_config(config_path)
        self.collector = ReportCollector()

    def cell_options(self, oracle: str = "brute", q_cap: Optional[int] = None,
                     hermite_cap: Optional[int] = None) -> CellOptions:
        limits = self.config["limits"]
        return CellOptions(
            oracle=oracle,
            q_cap=q_cap if q_cap is not None else limits["q_cap"],
            hermite_cap=hermite_cap if hermite_cap is not None else limits["hermite_q_cap"],
            exact_limit=limits["exact_binomial_limit"],
        )

    def _workers(self, workers: Optional[int]) -> int:
        return max(1, workers if workers is not None else self.config["scan"]["workers"])

    def _progress(self) -> Optional[bool]:
        # None lets the scan decide from whether stderr is a terminal
        return None if self.config["scan"]["progress"] else False

    def _timed(self, label: str, run) -> List[TheoremReport]:
        self.collector.start_memory_monitoring()
        start = time.time()
        reports = run()
        elapsed = time.time() - start
        memory = self.collector.stop_memory_monitoring()
        logger.info("%s: %d cells in %.2fs, peak RSS %.1f MB", label, len(reports), elapsed,
                    memory["peak_mb"])
        self.collector.record(reports)
        return reports

    def run_scan(self, grid: Grid, family: str, oracle: str = "brute", q_cap: Optional[int] = None,
                 workers: Optional[int] = None, hermite_cap: Optional[int] = None) -> List[TheoremReport]:
        options = self.cell_options(oracle, q_cap, hermite_cap)
        return self._timed(f"scan {family}", lambda: scan(
            grid, family, options, self._workers(workers), self._progress()))

    def run_theorem(self, name: str, p_list: Optional[Sequence[int]] = None, e_max: Optional[int] = None,
                    l_max: Optional[int] = None, oracle: str = "brute", q_cap: Optional[int] = None,
                    workers: Optional[int] = None, hermite_cap: Optional[int] = None) -> List[TheoremReport]:
        configured = self.config["theorems"].get(name, {})
        family, grid = theorem_grid(
            name,
            p_list=p_list if p_list else configured.get("p_list"),
            e_max=e_max if e_max is not None else configured.get("e_max"),
            l_max=l_max if l_max is not None else configured.get("l_max"),
        )
        options = self.cell_options(oracle, q_cap, hermite_cap)
        return self._timed(name, lambda: scan(
            grid, family, options, self._workers(workers), self._progress()))

    def run_all_theorems(self, names: Optional[Sequence[str]] = None, **kwargs) -> Dict[str, List[TheoremReport]]:
        """Run each named claim (all of them by default) in declaration order."""
        return {name: self.run_theorem(name, **kwargs) for name in (names or THEOREMS)}

    def periodicity_failures(self) -> list:
        mismatches = check_periodicity(self.collector.reports)
        for low, high in mismatches:
            logger.warning("verdict changes between l=%d and l=%d for %s %s", low.params.l,
                           high.params.l, low.family, low.params.as_tuple())
        return mismatches

    def export_results(self, output_dir: Optional[str] = None, stem: str = "reports"):
        output_dir = output_dir or self.config["output"]["output_dir"]
        self.collector.export(output_dir, stem)
        logger.info("wrote %s/%s.json and %s.csv", output_dir.rstrip("/"), stem, stem)
