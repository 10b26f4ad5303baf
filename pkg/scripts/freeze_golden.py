#!/usr/bin/env python3
"""
Regenerate the golden map files under corpus/golden from their seeds.

Usage:
    python scripts/freeze_golden.py
    python scripts/freeze_golden.py --out-dir /tmp/golden
    python scripts/freeze_golden.py --check
"""
import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from planemaps.cli import map_file_text  # noqa: E402
from planemaps.sampling import random_map  # noqa: E402

DEFAULT_OUT_DIR = Path(__file__).resolve().parent.parent / 'corpus' / 'golden'

# (d1, d2, seed, coeff_bound)
GOLDEN_CASES = [
    (2, 2, 42, 10),
    (3, 2, 7, 10),
]


def golden_name(d1: int, d2: int, seed: int) -> str:
    return f"gen_{d1}_{d2}_seed{seed}.map"


def golden_text(d1: int, d2: int, seed: int, coeff_bound: int) -> str:
    F = random_map(d1, d2, seed, coeff_bound)
    return map_file_text(F, f"gen d1={d1} d2={d2} seed={seed} coeff_bound={coeff_bound}")


def freeze(out_dir: Path, check: bool = False) -> list:
    """Write (or with check, compare) every golden file; returns the names that differ."""
    out_dir = Path(out_dir)
    if not check:
        out_dir.mkdir(parents=True, exist_ok=True)
    stale = []
    for d1, d2, seed, bound in GOLDEN_CASES:
        path = out_dir / golden_name(d1, d2, seed)
        text = golden_text(d1, d2, seed, bound)
        if check:
            if not path.exists() or path.read_text() != text:
                stale.append(path.name)
                print(f"  {path.name}: differs")
            else:
                print(f"  {path.name}: ok")
        else:
            path.write_text(text)
            print(f"  Written: {path}")
    return stale


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description='Regenerate golden map files')
    parser.add_argument('--out-dir', type=str, default=str(DEFAULT_OUT_DIR),
                        help='Directory for the golden files')
    parser.add_argument('--check', action='store_true',
                        help='Compare instead of writing')
    args = parser.parse_args(argv)

    print(f"\n{'='*60}")
    print(f"Golden files in {args.out_dir}")
    print(f"{'='*60}")
    stale = freeze(Path(args.out_dir), args.check)
    if stale:
        print(f"Error: {len(stale)} golden file(s) out of date")
        return 4
    return 0


if __name__ == '__main__':
    sys.exit(main())
