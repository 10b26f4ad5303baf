#!/usr/bin/env python3
"""
Run the planemaps command-line front end from a checkout.

Usage:
    python scripts/planemaps.py gen --d1 3 --d2 2 --seed 7
    python scripts/planemaps.py analyze --in corpus/golden/gen_3_2_seed7.map
    python scripts/planemaps.py verify --d1 1:3 --d2 1:3 --seeds 3

Environment variables (set in .env file):
    PLANEMAPS_BUDGET - default S-pair budget
    PLANEMAPS_PRIME - prime used by --field prime
    PLANEMAPS_COEFF_BOUND - default --coeff-bound
    PLANEMAPS_SEED - default --seed
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from planemaps.cli import main  # noqa: E402

if __name__ == '__main__':
    sys.exit(main())
