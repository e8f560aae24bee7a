"""GF(9) over GF(3) seen through the dual of a crossed product.

The trace map is a grouplike of the coring R* with coinvariants GF(3). The
canonical map A (x)_T A -> R* is bijective, so the extension is Galois. The
composite R -> End(_T A) is compared with the span of the maps
u -> a sigma(u) over the field automorphisms sigma.
"""

from coring_lab.comodule import canonical_map, coinvariants, is_galois, kanzaki_composite
from coring_lab.coring import verify_grouplike
from coring_lab.fixtures import build


def main():
    fx = build("FIX-XPROD")
    F = fx.field
    coring = fx.corings["Rstar"]
    _, trace = fx.grouplikes["trace"]
    comodule = fx.comodules["A_g"]
    print(f"trace is grouplike: {verify_grouplike(coring, trace)}")
    print(f"coinvariants: dimension {coinvariants(comodule, trace).shape[0]} over GF(3)")

    can = canonical_map(comodule)
    print(f"can: rank {can.rank} of {coring.dim}, Galois {is_galois(comodule)}")

    images = kanzaki_composite(can, coring)
    print(f"R -> End(_T A): rank {F.rank(images.reshape(images.shape[0], -1))}")


if __name__ == "__main__":
    main()
