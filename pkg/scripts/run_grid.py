#!/usr/bin/env python3
"""Run the benchmark grid and write CSV + Markdown reports.

The default grid covers N in {100, 500}, K in {2, 3, 4},
m_bar in {1, 5, 10, 20} and p in {0.8, 0.5, 0.2}; --full adds N=1000,
which multiplies the K=4 runtime considerably.
"""

import argparse

from musearch.simulation import ScenarioConfig, run_scenario_grid


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="grid_results")
    parser.add_argument("--seed", type=int, default=20160801)
    parser.add_argument("--repetitions", type=int, default=1)
    parser.add_argument("--full", action="store_true", help="include N=1000")
    args = parser.parse_args()

    n_values = (100, 500, 1000) if args.full else (100, 500)
    cfg = ScenarioConfig(
        n_values=n_values,
        k_values=(2, 3, 4),
        m_bar_values=(1, 5, 10, 20),
        p_values=(0.8, 0.5, 0.2),
        seed=args.seed,
        repetitions=args.repetitions,
    )
    report = run_scenario_grid(cfg)
    csv_path, md_path = report.write(args.out_dir)
    print(report.to_markdown())
    print(f"wrote {csv_path} and {md_path}")


if __name__ == "__main__":
    main()
