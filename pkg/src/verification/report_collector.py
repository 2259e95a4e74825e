import io
import json
import os
from collections import Counter
from dataclasses import asdict, dataclass
from typing import Any, Dict, Iterable, List, Optional

import pandas as pd
import psutil
from tabulate import tabulate

from src.utils.errors import DomainError
from src.verification.theorems import TheoremReport

CSV_COLUMNS = ["p", "e", "l", "k", "family", "predicted", "observed", "agree", "witness"]
FORMATS = ("json", "jsonl", "csv", "text")


@dataclass
class ScanSummary:
    cells: int = 0
    agreeing: int = 0
    disagreeing: int = 0
    predicted_pp: int = 0
    observed_pp: int = 0
    identity_failures: int = 0


def format_witness(witness: Optional[Dict[str, Any]]) -> str:
    """Render as kind:data, e.g. collision:0,1; empty for permutations."""
    if not witness:
        return ""
    return f"{witness['kind']}:{','.join(str(v) for v in witness['data'])}"


class ReportCollector:
    """Accumulates theorem reports and serializes them deterministically."""

    def __init__(self):
        self.reports: List[TheoremReport] = []
        self.process = psutil.Process(os.getpid())
        self.memory_samples: List[float] = []

    def start_memory_monitoring(self):
        self.memory_samples = []
        self.sample_memory()

    def sample_memory(self):
        try:
            self.memory_samples.append(self.process.memory_info().rss / 1024 / 1024)
        except psutil.Error:
            pass

    def stop_memory_monitoring(self) -> Dict[str, float]:
        self.sample_memory()
        if not self.memory_samples:
            return {"peak_mb": 0.0, "avg_mb": 0.0}
        return {
            "peak_mb": max(self.memory_samples),
            "avg_mb": sum(self.memory_samples) / len(self.memory_samples),
        }

    def record(self, reports: Iterable[TheoremReport]):
        self.reports.extend(reports)

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def failures(self) -> List[TheoremReport]:
        return [r for r in self.reports if not r.passed]

    def get_summary_statistics(self) -> Dict[str, Any]:
        per_family: Dict[str, ScanSummary] = {}
        for r in self.reports:
            s = per_family.setdefault(r.family, ScanSummary())
            s.cells += 1
            s.agreeing += int(r.agree)
            s.disagreeing += int(not r.agree)
            s.predicted_pp += int(r.predicted)
            s.observed_pp += int(r.observed)
            s.identity_failures += int(r.identity_ok is False)
        witness_kinds = Counter(r.witness["kind"] for r in self.reports if r.witness)
        return {
            "cells": len(self.reports),
            "passed": sum(r.passed for r in self.reports),
            "families": {name: asdict(s) for name, s in sorted(per_family.items())},
            "witness_kinds": dict(sorted(witness_kinds.items())),
        }

    # -- serialization --------------------------------------------------------

    def rows(self) -> List[Dict[str, Any]]:
        return [r.to_row() for r in self.reports]

    def to_json(self) -> str:
        data = {"reports": self.rows(), "summary": self.get_summary_statistics()}
        return json.dumps(data, indent=2, sort_keys=False) + "\n"

    def to_jsonl(self) -> str:
        return "".join(json.dumps(row) + "\n" for row in self.rows())

    def to_dataframe(self) -> pd.DataFrame:
        df = pd.DataFrame(self.rows(), columns=CSV_COLUMNS)
        df["witness"] = df["witness"].map(format_witness)
        return df

    def to_csv(self) -> str:
        buffer = io.StringIO()
        self.to_dataframe().to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()

    def to_text(self) -> str:
        table = tabulate(self.to_dataframe().values.tolist(), headers=CSV_COLUMNS, tablefmt="simple")
        summary = self.get_summary_statistics()
        return f"{table}\n\n{summary['passed']}/{summary['cells']} cells agree\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "jsonl":
            return self.to_jsonl()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise DomainError(f"unknown output format {fmt!r}; expected one of {', '.join(FORMATS)}")

    def export(self, output_dir: str, stem: str):
        os.makedirs(output_dir, exist_ok=True)
        with open(os.path.join(output_dir, f"{stem}.json"), "w") as f:
            f.write(self.to_json())
        with open(os.path.join(output_dir, f"{stem}.csv"), "w") as f:
            f.write(self.to_csv())
