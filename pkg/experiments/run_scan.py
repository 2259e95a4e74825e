#!/usr/bin/env python3
import argparse
import os
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.utils.logging_utils import setup_logging
from src.verification.scan_runner import ScanRunner
from src.verification.theorems import THEOREMS
from src.verification.visualization import Visualizer


def main():
    parser = argparse.ArgumentParser(description="Verify every named classification over its default grid")
    parser.add_argument("--config", type=str, default="config/verification_config.yaml",
                        help="Path to verification configuration file")
    parser.add_argument("--output", type=str, default="results/",
                        help="Output directory for results")
    parser.add_argument("--theorem", action="append", choices=list(THEOREMS),
                        help="Restrict to one claim (repeatable)")
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--plots", action="store_true",
                        help="Generate verdict heatmaps")

    args = parser.parse_args()
    setup_logging()

    print("=" * 80)
    print("Reversed Dickson Permutation Scan")
    print("=" * 80)
    print()

    runner = ScanRunner(config_path=args.config)
    names = args.theorem or list(THEOREMS)
    print(f"Verifying {', '.join(names)}...")
    results = runner.run_all_theorems(names, workers=args.workers)

    print("\nExporting results...")
    runner.export_results(output_dir=args.output, stem="scan")

    if args.plots:
        print("\nGenerating visualizations...")
        visualizer = Visualizer(output_dir=os.path.join(args.output, "plots"))
        for name, reports in results.items():
            if reports:
                visualizer.plot_verdict_grid(reports, reports[0].family, output_file=f"{name}_verdicts.png")
        visualizer.plot_agreement_summary(results)
        print(visualizer.create_summary_table(results))
        print(f"Plots saved to {visualizer.output_dir}")

    failures = runner.collector.failures()
    broken = runner.periodicity_failures()
    print("\n" + "=" * 80)
    print(f"{len(runner.collector.reports) - len(failures)}/{len(runner.collector.reports)} cells agree")
    if broken:
        print(f"{len(broken)} period pairs disagree")
    print(f"Results saved to {args.output}")
    print("=" * 80)
    return 0 if not failures and not broken else 1


if __name__ == "__main__":
    sys.exit(main())
