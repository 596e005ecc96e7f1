#!/usr/bin/env python3
"""Write the complex fixtures, a sample cut/paste script, and the default
catalogs as files under fixtures/ for command-line use."""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from skkinv import fixtures
from skkinv.simplicial import complex_to_json
from skkinv.virtual_bordism import DEFAULT_CATALOGS, catalog_to_json

SAMPLE_SCRIPT = """\
# cut the torus open along a non-separating curve, then close it again
cut 0 nonsep
paste 0~1
"""


def main():
    out = ROOT / "fixtures"
    out.mkdir(exist_ok=True)
    for name, factory in fixtures.FIXTURES.items():
        (out / f"{name}.json").write_text(complex_to_json(factory()) + "\n")
        print(f"wrote fixtures/{name}.json")
    (out / "torus_roundtrip.cutpaste").write_text(SAMPLE_SCRIPT)
    print("wrote fixtures/torus_roundtrip.cutpaste")
    for dim, factory in DEFAULT_CATALOGS.items():
        (out / f"catalog_dim{dim}.json").write_text(catalog_to_json(factory()) + "\n")
        print(f"wrote fixtures/catalog_dim{dim}.json")


if __name__ == "__main__":
    main()
