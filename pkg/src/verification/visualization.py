import os
from typing import Dict, List, Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
import pandas as pd
import seaborn as sns
from tabulate import tabulate

from src.verification.theorems import TheoremReport


class Visualizer:
    """Verdict heatmaps and agreement summaries for scan reports."""

    def __init__(self, output_dir: str = "results/plots"):
        self.output_dir = output_dir
        os.makedirs(output_dir, exist_ok=True)
        sns.set_style("whitegrid")
        plt.rcParams["figure.figsize"] = (12, 8)

    @staticmethod
    def _frame(reports: Sequence[TheoremReport]) -> pd.DataFrame:
        return pd.DataFrame([r.to_row() for r in reports])

    def plot_verdict_grid(self, reports: Sequence[TheoremReport], family: str,
                          output_file: Optional[str] = None) -> str:
        """
        One panel per prime: rows are (e, k), columns are l. A cell is 1 when
        the polynomial permutes F_q; disagreeing cells are marked with an x.
        """
        df = self._frame([r for r in reports if r.family == family])
        if df.empty:
            raise ValueError(f"no {family} reports to plot")
        primes = sorted(df["p"].unique())
        fig, axes = plt.subplots(1, len(primes), figsize=(6 * len(primes), 6), squeeze=False)

        for ax, p in zip(axes[0], primes):
            sub = df[df["p"] == p].assign(observed=lambda d: d["observed"].astype(int))
            grid = sub.pivot_table(index=["e", "k"], columns="l", values="observed", aggfunc="first")
            sns.heatmap(grid, ax=ax, cmap="RdYlGn", vmin=0, vmax=1, cbar=False,
                        linewidths=0.5, linecolor="white")
            bad = sub[~sub["agree"]]
            rows = list(grid.index)
            cols = list(grid.columns)
            for _, r in bad.iterrows():
                ax.text(cols.index(r["l"]) + 0.5, rows.index((r["e"], r["k"])) + 0.5, "x",
                        ha="center", va="center", color="black", fontsize=14)
            ax.set_title(f"{family}, p = {p}")
            ax.set_xlabel("l")
            ax.set_ylabel("(e, k)")

        plt.tight_layout()
        path = os.path.join(self.output_dir, output_file or f"{family}_verdicts.png")
        plt.savefig(path, dpi=150, bbox_inches="tight")
        plt.close()
        return path

    def plot_agreement_summary(self, reports_by_name: Dict[str, List[TheoremReport]],
                               output_file: str = "agreement_summary.png") -> str:
        names = list(reports_by_name)
        agreeing = [sum(r.passed for r in reports_by_name[n]) for n in names]
        failing = [len(reports_by_name[n]) - a for n, a in zip(names, agreeing)]

        fig, ax = plt.subplots(figsize=(12, 6))
        x = np.arange(len(names))
        ax.bar(x, agreeing, label="agree", color="tab:green")
        ax.bar(x, failing, bottom=agreeing, label="disagree", color="tab:red")
        ax.set_xticks(x)
        ax.set_xticklabels(names)
        ax.set_ylabel("cells")
        ax.set_title("Predicted vs observed permutation behaviour")
        ax.legend()

        plt.tight_layout()
        path = os.path.join(self.output_dir, output_file)
        plt.savefig(path, dpi=150, bbox_inches="tight")
        plt.close()
        return path

    def create_summary_table(self, reports_by_name: Dict[str, List[TheoremReport]],
                             output_file: str = "summary_table.txt") -> str:
        table_data = []
        for name, reports in reports_by_name.items():
            table_data.append([
                name,
                reports[0].family if reports else "",
                len(reports),
                sum(r.observed for r in reports),
                sum(r.passed for r in reports),
            ])
        headers = ["Claim", "Family", "Cells", "Permutations", "Agree"]
        table = tabulate(table_data, headers=headers, tablefmt="grid")

        with open(os.path.join(self.output_dir, output_file), "w") as f:
            f.write("Verification Summary\n")
            f.write("=" * 60 + "\n\n")
            f.write(table + "\n")
        return table
