"""Sweedler coring of GF(2) -> GF(4) and its descent data.

The coring A (x)_B A for B = GF(2) and A = GF(4) has a grouplike 1 (x) 1 whose
coinvariants recover B. The script then runs the descent checks with the test
modules shipped in the fixture.
"""

from coring_lab.comodule import canonical_map, coinvariants, descent_verify
from coring_lab.coring import check_coring
from coring_lab.fixtures import build


def main():
    fx = build("FIX-SW")
    coring = fx.corings["C"]
    print(f"dim A (x)_B A = {coring.dim}")
    print(f"coring axioms: {'pass' if check_coring(coring).ok else 'fail'}")

    comodule = fx.comodules["A_g"]
    _, g = fx.grouplikes["g"]
    print(f"coinvariants of g: dimension {coinvariants(comodule, g).shape[0]}")

    can = canonical_map(comodule)
    print(f"can: rank {can.rank}, bijective {can.is_bijective()}, dim T = {can.endo.T.dim}")

    report = descent_verify(fx.bimodules["Sigma"], test_modules=[fx.bimodules["B"], fx.bimodules["B2"]])
    for check in report.checks:
        print(f"  {'PASS' if check.ok else 'FAIL'}  {check.name}")


if __name__ == "__main__":
    main()
