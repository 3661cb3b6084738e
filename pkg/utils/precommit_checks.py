#!/usr/bin/env python3
"""
Pre-commit checks for the positroid toolkit.

Runs flake8, black (check mode), mypy and the fast pytest selection, then
refreshes the coverage badge in docs/index.md. ``--slow`` also runs the
exhaustive suites at their full bounds.
"""

import argparse
import json
import re
import subprocess
import sys
from pathlib import Path
from typing import List, Tuple

project_root = Path(__file__).parent.parent.resolve()

BADGE = re.compile(r"\[!\[Coverage\]\([^)]+\)\]\([^)]+\)")


def run_command(cmd: List[str], description: str) -> Tuple[bool, str]:
    """Run a tool from the project root and return (success, combined output)."""
    if cmd[0] == "python":
        cmd[0] = sys.executable
    try:
        result = subprocess.run(cmd, capture_output=True, text=True, cwd=project_root)
    except OSError as e:
        return False, f"cannot run {description}: {e}"
    return result.returncode == 0, result.stdout + result.stderr


def check(cmd: List[str], description: str) -> bool:
    print(f"Running {description}...")
    success, output = run_command(cmd, description)
    if success:
        print(f"✅ {description} passed")
    else:
        print(f"❌ {description} failed:")
        print(output)
    return success


def update_badge() -> None:
    try:
        with open(project_root / "coverage.json", "r") as f:
            pct = json.load(f)["totals"]["percent_covered"]
    except (OSError, KeyError, ValueError) as e:
        print(f"❌ No coverage data: {e}")
        return
    badge = (
        f"[![Coverage](https://img.shields.io/badge/coverage-{pct:.0f}%25-brightgreen)]"
        "(https://pytest-cov.readthedocs.io/)"
    )
    index_path = project_root / "docs" / "index.md"
    content = index_path.read_text()
    index_path.write_text(BADGE.sub(badge, content))
    print(f"✅ Coverage badge updated ({pct:.0f}%)")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--slow", action="store_true", help="also run the full-bound suites"
    )
    args = parser.parse_args()

    print("\n--- Pre-commit Checks ---")
    results = [
        check(["flake8", "positroid", "tests"], "flake8"),
        check(["black", "--check", "positroid", "tests", "utils"], "black"),
        check(["mypy", "positroid"], "mypy"),
        check(["python", "-m", "pytest", "--cov-report=json"], "pytest"),
    ]
    if args.slow:
        results.append(
            check(["python", "-m", "pytest", "-m", "slow", "--no-cov"], "slow suites")
        )
    if all(results):
        update_badge()
        print("\n✅ All pre-commit checks passed!")
        return 0
    print("\n❌ Some pre-commit checks failed.")
    return 1


if __name__ == "__main__":
    sys.exit(main())
