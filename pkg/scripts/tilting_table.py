#!/usr/bin/env python3
"""Print the dominant tilting classes of a root system over a dominant box.

Usage: python scripts/tilting_table.py [SPEC] [RADIUS]
"""

import itertools
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from exotictilt import build_root_system
from exotictilt import tiltmult
from exotictilt.cli import kclass_str, weight_str


def main():
    spec = sys.argv[1] if len(sys.argv) > 1 else "A2"
    radius = int(sys.argv[2]) if len(sys.argv) > 2 else 2
    rs = build_root_system(spec)
    print(f"# dominant tilting classes, {rs.spec}, dominant box radius {radius}")
    for lam in itertools.product(range(radius + 1), repeat=rs.rank):
        cls = tiltmult.dominant_tilting_class(rs, lam)
        print(f"T{weight_str(lam)} = {kclass_str(cls)}")


if __name__ == "__main__":
    main()
