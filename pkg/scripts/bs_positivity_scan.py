#!/usr/bin/env python3
"""Randomized scan of Bott-Samelson classes for coefficient positivity.

Usage: python scripts/bs_positivity_scan.py [SPEC] [COUNT] [SEED]
"""

import random
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from exotictilt import build_root_system
from exotictilt import affweyl, exotic_k
from exotictilt.cli import kclass_str


def main():
    spec = sys.argv[1] if len(sys.argv) > 1 else "B2"
    count = int(sys.argv[2]) if len(sys.argv) > 2 else 50
    seed = int(sys.argv[3]) if len(sys.argv) > 3 else 0
    rs = build_root_system(spec)
    rng = random.Random(seed)
    order = affweyl.generator_order(rs)
    omegas = list(affweyl.omega_elements(rs).values())
    worst = 0
    for k in range(count):
        omega = omegas[k % len(omegas)]
        seq = [rng.choice(order) for _ in range(rng.randint(0, 6))]
        cls = exotic_k.bott_samelson_class(rs, omega, seq)
        if not cls.is_nonneg():
            print(f"NEGATIVE coefficient: omega.t={omega.t} seq={seq}")
            print(kclass_str(cls))
            sys.exit(1)
        worst = max(worst, len(cls.terms))
    print(f"{count} Bott-Samelson classes in {rs.spec}: all coefficients in "
          f"Z>=0[v,v^-1]; largest support {worst}")


if __name__ == "__main__":
    main()
