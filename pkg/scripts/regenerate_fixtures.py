"""Rebuild the search-generated labelings shipped in dantimagic/data/fixtures."""

from __future__ import annotations

from pathlib import Path

import dantimagic
from dantimagic.fixtures import write_fixtures

if __name__ == "__main__":
    target = Path(dantimagic.__file__).parent / "data" / "fixtures"
    for path in write_fixtures(target, canonical=True):
        print(path)
