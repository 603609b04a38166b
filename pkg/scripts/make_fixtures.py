"""Regenerate the JSON fixtures under fixtures/."""

import sys
from pathlib import Path

from qlift.fixtures import write_fixtures

if __name__ == "__main__":
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "fixtures"
    for path in write_fixtures(target):
        print(path)
