"""Cosemisimple decomposition of small corings.

The trivial coring over M2(GF(3)) has a single block whose simple comodule has
dimension 2 and whose division ring is GF(3). FIX-TWOBLOCK splits into two
blocks of dimension 1. The trivial coring over the dual
numbers GF(2)[e]/(e^2) is not cosemisimple.
"""

from coring_lab.cosemisimple import decompose, is_cosemisimple
from coring_lab.fixtures import build


def describe(name):
    coring = build(name).corings["C"]
    if not is_cosemisimple(coring):
        print(f"{name}: not cosemisimple")
        return
    result = decompose(coring, seed=0)
    print(f"{name}: {len(result.blocks)} block(s)")
    for i, block in enumerate(result.blocks):
        print(
            f"  block {i}: dim {block.dim}, simple comodule dim {block.sigma.dim}, "
            f"division ring dim {block.division_algebra.dim}, can bijective {block.can.is_bijective()}"
        )


def main():
    for name in ("FIX-MAT", "FIX-TWOBLOCK", "FIX-DUALNUM"):
        describe(name)


if __name__ == "__main__":
    main()
