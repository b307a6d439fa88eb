#!/usr/bin/env python3
"""Refresh the frozen golden outputs in tests/data/golden/.

Runs the full comparison pipeline on the bundled fixture config and
copies the deterministic report artifacts (manifest, stats, rankings,
profiles, topic tables, bigram tables, frames) into the golden tree.
Run this only when an intentional behavior change moves the outputs,
and review the diff before committing.

Usage, from the repository root:  python scripts/refresh_golden.py
"""

from __future__ import annotations

import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from semframe.cli import load_run_config, run_compare  # noqa: E402

FIXTURES = ROOT / "tests" / "data" / "fixtures"
GOLDEN = ROOT / "tests" / "data" / "golden"

KEEP = ["manifest.json", "stats.csv"]
PER_CORPUS = ["rankings.csv", "profile.json", "topic_words.csv", "bigrams.csv", "frame.json"]


def main() -> None:
    cfg = load_run_config(FIXTURES / "config.json")
    with tempfile.TemporaryDirectory() as tmp:
        cfg.output_dir = Path(tmp) / "run"
        manifest = run_compare(cfg)
        if GOLDEN.exists():
            shutil.rmtree(GOLDEN)
        GOLDEN.mkdir(parents=True)
        for name in KEEP:
            shutil.copy2(cfg.output_dir / name, GOLDEN / name)
        for label in manifest["corpora"]:
            (GOLDEN / label).mkdir()
            for name in PER_CORPUS:
                shutil.copy2(cfg.output_dir / label / name, GOLDEN / label / name)
    count = sum(1 for p in GOLDEN.rglob("*") if p.is_file())
    print(f"froze {count} golden files under {GOLDEN}")


if __name__ == "__main__":
    main()
