"""Differential testing: the solver against a brute-force oracle.

First a clean sweep over every labeled 4-vertex graph, then the same sweep
with a deliberately broken solver injected, to show how disagreements are
bucketed and persisted as reproducible counterexample files.
"""

from __future__ import annotations

import tempfile
from pathlib import Path

from kfactor import DiffConfig, run_difftest
from kfactor.solver import NO_FACTOR, SolveOutcome


def blind_solver(g, k):
    """Claims nothing ever has a factor. Completeness disaster, sound though."""
    return SolveOutcome(NO_FACTOR, None, reason="not looking")


def main() -> None:
    with tempfile.TemporaryDirectory() as out:
        print("=== the real solver, all 64 labeled graphs on 4 vertices, k in 1..3")
        cfg = DiffConfig(mode="exhaustive", n=4, k_values=(1, 2, 3), out_dir=out)
        report = run_difftest(cfg)
        print(report.render(include_timing=False))
        print(f"exit code {report.exit_code()} (0 = clean)")
        print()

        print("=== same sweep with a solver that always answers 'no factor'")
        report = run_difftest(cfg, solve_fn=blind_solver)
        print(report.render(include_timing=False))
        print(f"exit code {report.exit_code()} (1 = completeness gaps)")
        print()

        files = sorted(Path(out).iterdir())
        print(f"=== {len(files)} counterexample files were written; one of them:")
        print(files[0].read_text())


if __name__ == "__main__":
    main()
