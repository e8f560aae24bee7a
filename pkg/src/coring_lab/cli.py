"""Command line interface: ``coring-lab <command> <fixture> [--seed N] [--json] [--test-modules LIST]``.

The fixture is a JSON file or the name of a built-in fixture (e.g. FIX-SW).
Exit codes: 0 all checks pass, 1 some check fails, 2 input error, 3 undecided.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from .algebra import check_algebra
from .coend import build_adjunction, coend_coring, f_equals_can_report
from .comodule import (
    canonical_comatrix_comodule,
    canonical_map,
    check_comodule,
    coinvariants,
    default_test_modules,
    descent_verify,
    generator_report,
    grouplike_can_value,
    grouplike_comodule,
)
from .coring import (
    ComatrixCoring,
    check_coring,
    check_hat_anti_iso,
    check_right_dual_anti_iso,
    dual_coring,
    grouplike_search,
    sweedler_coring,
    verify_grouplike,
)
from .cosemisimple import decompose
from .field import TooLargeToEnumerate, Undecided
from .fixtures import BUILDERS, shipped_path
from .io import Fixture, FixtureError, load
from .modules import NotProjective
from .report import Report

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_UNDECIDED = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return [_jsonable(v) for v in x.tolist()]
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (str, float)) or x is None:
        return x
    return str(x)


# -- checks run on every object of a fixture -------------------------------------------


def _algebra_checks(fx: Fixture, rep: Report, prefix: str = ""):
    for name, alg in fx.algebras.items():
        res = check_algebra(alg)
        rep.add(f"{prefix}algebra {name}", res.ok, res.message, res.witness)
    for name, hom in fx.homs.items():
        res = hom.check()
        rep.add(f"{prefix}algebra hom {name}", res.ok, res.message, res.witness)
    for name, bim in fx.bimodules.items():
        res = bim.check()
        rep.add(f"{prefix}bimodule {name}", res.ok, res.message, res.witness)


def _coring_checks(fx: Fixture, rep: Report, prefix: str = ""):
    for name, cor in fx.corings.items():
        res = check_coring(cor)
        bad = res.first_failure()
        rep.add(f"{prefix}coring {name}", res.ok, "" if bad is None else f"{bad.name}: {bad.message}", None if bad is None else bad.witness)
    for name, (cname, g) in fx.grouplikes.items():
        rep.add(f"{prefix}grouplike {name}", verify_grouplike(fx.corings[cname], g))
    for name, com in fx.comodules.items():
        res = check_comodule(com)
        bad = res.first_failure()
        rep.add(f"{prefix}comodule {name}", res.ok, "" if bad is None else f"{bad.name}: {bad.message}", None if bad is None else bad.witness)
    for name, hom in fx.coring_homs.items():
        res = hom.check()
        bad = res.first_failure()
        rep.add(f"{prefix}coring hom {name}", res.ok, "" if bad is None else f"{bad.name}: {bad.message}", None if bad is None else bad.witness)


def _load_checks(fx: Fixture, rep: Report):
    _algebra_checks(fx, rep, "load: ")
    _coring_checks(fx, rep, "load: ")


# -- commands -----------------------------------------------------------------------------


def cmd_check_algebra(fx, args, rep):
    _algebra_checks(fx, rep)


def cmd_check_coring(fx, args, rep):
    _coring_checks(fx, rep)


def cmd_comatrix(fx, args, rep):
    sigma = fx.role("bimodule", "bimodules")
    cm = ComatrixCoring(sigma)
    rep.facts["dim_coring"] = cm.dim
    rep.facts["dual_basis_size"] = cm.dual_basis.size
    rep.add("dual basis", cm.dual_basis.check().ok)
    rep.extend(check_coring(cm), "coring: ")
    rep.extend(check_hat_anti_iso(cm), "hat: ")
    rep.extend(check_right_dual_anti_iso(cm), "right dual: ")
    rep.extend(check_comodule(canonical_comatrix_comodule(cm)), "canonical comodule: ")


def cmd_sweedler(fx, args, rep):
    h = fx.role("hom", "homs")
    sw = sweedler_coring(h)
    rep.facts["dim_coring"] = sw.dim
    rep.extend(check_coring(sw), "coring: ")
    rep.add("comatrix comparison is a coring iso", sw.comparison.check().ok and sw.comparison.is_bijective())
    A = h.target
    rep.add("1 (x) 1 grouplike", verify_grouplike(sw, sw.bimodule.pure(A.unit, A.unit)))


def cmd_dual_coring(fx, args, rep):
    h = fx.role("hom", "homs")
    cor = dual_coring(h)
    rep.facts["dim_coring"] = cor.dim
    rep.extend(check_coring(cor), "coring: ")


def cmd_grouplike(fx, args, rep):
    if "grouplike" in fx.roles or len(fx.grouplikes) == 1:
        gname = fx.roles.get("grouplike") or next(iter(fx.grouplikes))
        cname, g = fx.grouplikes[gname]
        cor = fx.corings[cname]
        rep.add(f"grouplike {gname}", verify_grouplike(cor, g))
        m = grouplike_comodule(cor, g)
        rep.facts["dim_coinvariants"] = coinvariants(m, g).shape[0]
    else:
        cor = fx.role("coring", "corings")
    found = grouplike_search(cor)
    rep.facts["grouplikes_found"] = len(found)
    rep.facts["grouplikes"] = [cor.field.format_array(x) for x in found]


def cmd_can(fx, args, rep):
    m = fx.role("comodule", "comodules")
    can = canonical_map(m)
    rep.extend(can.report, "can: ")
    rep.facts["dim_T"] = can.endo.T.dim
    if args.galois:
        ok = can.is_bijective()
        rep.add("Galois", ok, f"rank {can.rank}/{m.coring.dim}")
    if m.module.dim == m.coring.base.dim and "grouplike" in fx.roles:
        _, g = fx.grouplikes[fx.roles["grouplike"]]
        rep.add("can(1 (x) 1) = g", m.field.equal(grouplike_can_value(can), g))


def _test_modules(fx: Fixture, args, sigma):
    if args.test_modules:
        names = [n.strip() for n in args.test_modules.split(",") if n.strip()]
        if names == ["default"]:
            return default_test_modules(sigma.left_alg)
        return [fx._get("bimodules", n) for n in names]
    if fx.test_modules:
        return [fx.bimodules[n] for n in fx.test_modules]
    return default_test_modules(sigma.left_alg)


def cmd_descent(fx, args, rep):
    sigma = fx.role("bimodule", "bimodules")
    mods = _test_modules(fx, args, sigma)
    for X in mods:
        if X.right_alg is not sigma.left_alg:
            raise InputError(f"test module {X.name} is not a right module over the left algebra of Sigma")
    rep.extend(descent_verify(sigma, test_modules=mods))


def cmd_generator_report(fx, args, rep):
    rep.extend(generator_report(fx.role("comodule", "comodules")))


def cmd_cosemisimple(fx, args, rep):
    res = decompose(fx.role("coring", "corings"), seed=args.seed)
    rep.extend(res.report)
    for k, b in enumerate(res.blocks):
        rep.facts[f"block{k}: embedding"] = fx.field.format_array(b.embedding)


def cmd_coend_crosscheck(fx, args, rep):
    if "bimodule" in fx.roles or len(fx.bimodules) == 1:
        sigma = fx.role("bimodule", "bimodules")
        adj = build_adjunction(sigma)
        rep.extend(adj.report, "adjunction: ")
        ce = coend_coring(sigma, adjunction=adj)
        rep.add("coend Delta, eps = comatrix Delta, eps", ce.matches_comatrix())
        rep.extend(check_coring(ce.coring), "coend coring: ")
    if "comodule" in fx.roles:
        rep.extend(f_equals_can_report(fx.role("comodule", "comodules")), "comodule: ")
    if not rep.checks:
        raise InputError("coend-crosscheck needs a 'bimodule' or 'comodule' role")


COMMANDS = {
    "check-algebra": cmd_check_algebra,
    "check-coring": cmd_check_coring,
    "comatrix": cmd_comatrix,
    "sweedler": cmd_sweedler,
    "dual-coring": cmd_dual_coring,
    "grouplike": cmd_grouplike,
    "can": cmd_can,
    "descent": cmd_descent,
    "generator-report": cmd_generator_report,
    "cosemisimple": cmd_cosemisimple,
    "coend-crosscheck": cmd_coend_crosscheck,
}
CHECK_COMMANDS = {"check-algebra", "check-coring"}


# -- driver --------------------------------------------------------------------------------


def resolve_fixture(spec: str) -> Fixture:
    path = Path(spec)
    if not path.exists() and spec in BUILDERS:
        path = shipped_path(spec)
    try:
        return load(path)
    except OSError as exc:
        raise FixtureError(f"cannot read {spec}: {exc.strerror or exc}") from None


def run(command: str, fixture: str, seed: int = 0, test_modules: str | None = None, galois: bool = False) -> Report:
    """Execute one command on one fixture and return its report."""
    args = argparse.Namespace(seed=seed, test_modules=test_modules, galois=galois)
    fx = resolve_fixture(fixture)
    rep = Report(command)
    rep.facts["fixture"] = fx.name
    if command not in CHECK_COMMANDS:
        _load_checks(fx, rep)
        if not rep.ok:
            return rep
    COMMANDS[command](fx, args, rep)
    return rep


def format_text(rep: Report) -> str:
    lines = [f"command: {rep.title}"]
    width = max((len(c.name) for c in rep.checks), default=0)
    for c in rep.checks:
        line = f"  {'PASS' if c.ok else 'FAIL'}  {c.name.ljust(width)}"
        if c.message:
            line += f"  {c.message}"
        if not c.ok and c.witness is not None:
            line += f"  witness={json.dumps(_jsonable(c.witness), sort_keys=True)}"
        lines.append(line.rstrip())
    for k, v in rep.facts.items():
        lines.append(f"  {k}: {json.dumps(_jsonable(v))}")
    lines.append(f"result: {'PASS' if rep.ok else 'FAIL'}")
    return "\n".join(lines)


def format_json(rep: Report) -> str:
    data = {
        "command": rep.title,
        "ok": rep.ok,
        "checks": [{"name": c.name, "ok": c.ok, "message": c.message, "witness": _jsonable(c.witness)} for c in rep.checks],
        "facts": _jsonable(rep.facts),
    }
    return json.dumps(data, indent=1, sort_keys=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coring-lab", description="Construct and verify corings, comodules and Galois data exactly.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("fixture", help="fixture JSON file or built-in fixture name (" + ", ".join(BUILDERS) + ")")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized searches (default 0)")
    parser.add_argument("--json", action="store_true", help="emit the report as JSON")
    parser.add_argument("--test-modules", default=None, help="comma-separated bimodule names, or 'default'")
    parser.add_argument("--galois", action="store_true", help="for 'can': also decide whether the comodule is Galois")
    parser.add_argument("--timing", action="store_true", help="append wall time (makes output run-dependent)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed < 0 or args.seed >= 2**64:
        parser.error("--seed must be an unsigned 64-bit integer")
    start = time.perf_counter()
    try:
        rep = run(args.command, args.fixture, args.seed, args.test_modules, args.galois)
    except (FixtureError, InputError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (Undecided, TooLargeToEnumerate) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except NotProjective as exc:
        rep = Report(args.command)
        rep.add("projectivity", False, f"NotProjective: {exc}")
    if args.timing:
        rep.facts["wall_time_s"] = round(time.perf_counter() - start, 3)
    print(format_json(rep) if args.json else format_text(rep))
    return EXIT_PASS if rep.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
