#!/usr/bin/env python3
"""Show that the splitting depends on the boundary-capping choices.

The disk cobordism from nothing to the 7-sphere can be capped by another
8-disk (closing to the 8-sphere) or by the complement of an open disk in
the complex projective 4-space (closing to the projective space itself).
The bordism invariant exp(p2) then takes the values 1 and exp(10) on the
same cobordism.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from skkinv.skk import b_sigma_dependence_demo
from skkinv.virtual_bordism import dim8_catalog


def main():
    catalog = dim8_catalog()
    disk_value, cp_value = b_sigma_dependence_demo(catalog)
    print(f"capping S7 with D8:           S(exp(p2))(D8) = {disk_value}")
    print(f"capping S7 with CP4 minus D8: S(exp(p2))(D8) = {cp_value}")


if __name__ == "__main__":
    main()
