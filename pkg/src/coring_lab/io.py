"""Fixture files: a versioned JSON format holding algebras, modules, corings and comodules.

Every scalar is a string ("3/2" over Q, "4" over GF(p)) so exactness survives
serialization.  Corings and comodules are stored as construction recipes that
refer to other objects by name; explicit comultiplications and coactions are
stored in pair coordinates, i.e. as coefficient arrays of b_c (x) b_k, which
do not depend on the presentation chosen for the tensor product.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from .algebra import Algebra, AlgebraHom
from .comodule import (
    RightComodule,
    canonical_comatrix_comodule,
    grouplike_comodule,
    regular_comodule,
    trivial_comodule,
)
from .coring import (
    ComatrixCoring,
    Coring,
    CoringHom,
    dual_coring,
    idempotent_ideal_coring,
    sweedler_coring,
    trivial_coring,
)
from .field import Field
from .modules import Bimodule, TensorProduct

SCHEMA = "coring-lab/1"
SECTIONS = ("algebras", "homs", "bimodules", "corings", "comodules", "grouplikes", "coring_homs")


class FixtureError(ValueError):
    """Malformed fixture: bad JSON, unknown reference or inconsistent shape."""


def _pairs_of(F: Field, tp: TensorProduct, mat) -> np.ndarray:
    """Pair coordinates [c, k, q] of the columns of ``mat`` (vectors of ``tp``)."""
    images = F.tensordot(tp.section_blocks, F.cast(mat), (2, 0))  # (g, n, q)
    return F.einsum("ci,ikq->ckq", tp.generators, images)


@dataclass
class Fixture:
    """Named objects built over one field, plus the recipes that rebuild them."""

    name: str
    field: Field
    description: str = ""
    algebras: dict[str, Algebra] = field(default_factory=dict)
    homs: dict[str, AlgebraHom] = field(default_factory=dict)
    bimodules: dict[str, Bimodule] = field(default_factory=dict)
    corings: dict[str, Coring] = field(default_factory=dict)
    comodules: dict[str, RightComodule] = field(default_factory=dict)
    grouplikes: dict[str, tuple[str, np.ndarray]] = field(default_factory=dict)
    coring_homs: dict[str, CoringHom] = field(default_factory=dict)
    test_modules: list[str] = field(default_factory=list)
    roles: dict[str, str] = field(default_factory=dict)
    entries: dict[str, dict[str, dict]] = field(default_factory=lambda: {s: {} for s in SECTIONS})

    # -- lookups ----------------------------------------------------------------

    def _get(self, section: str, name: str):
        table = getattr(self, section)
        if name not in table:
            raise FixtureError(f"{section}: unknown name {name!r}")
        return table[name]

    def role(self, role: str, section: str):
        """The object assigned to ``role``, or the only object of its section."""
        if role in self.roles:
            return self._get(section, self.roles[role])
        table = getattr(self, section)
        if len(table) == 1:
            return next(iter(table.values()))
        raise FixtureError(f"fixture {self.name} has no {role!r} role")

    def name_of(self, section: str, obj) -> str:
        return next(k for k, v in getattr(self, section).items() if v is obj)

    # -- builders (shared by Python fixtures and the loader) ---------------------

    def _scalars(self, data, shape=None, what=""):
        try:
            arr = self.field.parse_array(data)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise FixtureError(f"{what}: {exc}") from None
        if shape is not None and arr.shape != tuple(shape):
            raise FixtureError(f"{what}: expected shape {tuple(shape)}, got {arr.shape}")
        return arr

    def add_algebra(self, name: str, alg: Algebra) -> Algebra:
        self.algebras[name] = alg
        self.entries["algebras"][name] = {
            "labels": list(alg.labels),
            "struct": self.field.format_array(alg.struct),
            "unit": self.field.format_array(alg.unit),
        }
        return alg

    def add_hom(self, name: str, source: str, target: str, matrix) -> AlgebraHom:
        src, tgt = self._get("algebras", source), self._get("algebras", target)
        mat = self._scalars(matrix, (tgt.dim, src.dim), f"homs.{name}.matrix")
        hom = AlgebraHom(src, tgt, mat)
        self.homs[name] = hom
        self.entries["homs"][name] = {"source": source, "target": target, "matrix": self.field.format_array(mat)}
        return hom

    def add_bimodule(self, name: str, left: str, right: str, lact, ract) -> Bimodule:
        la, ra = self._get("algebras", left), self._get("algebras", right)
        lact = self._scalars(lact, None, f"bimodules.{name}.lact")
        ract = self._scalars(ract, None, f"bimodules.{name}.ract")
        m = lact.shape[1] if lact.ndim == 3 else 0
        if lact.shape != (la.dim, m, m) or ract.shape != (ra.dim, m, m):
            raise FixtureError(f"bimodules.{name}: action shapes {lact.shape}, {ract.shape} do not match the algebras")
        bim = Bimodule(la, ra, lact, ract, name=name)
        self.bimodules[name] = bim
        self.entries["bimodules"][name] = {
            "left": left,
            "right": right,
            "lact": self.field.format_array(lact),
            "ract": self.field.format_array(ract),
        }
        return bim

    def add_coring(self, name: str, recipe: dict) -> Coring:
        construct = recipe.get("construct")
        F = self.field
        if construct == "trivial":
            cor = trivial_coring(self._get("algebras", recipe["algebra"]))
        elif construct == "comatrix":
            cor = ComatrixCoring(self._get("bimodules", recipe["bimodule"]), name=name)
        elif construct == "sweedler":
            cor = sweedler_coring(self._get("homs", recipe["hom"]))
        elif construct == "dual":
            cor = dual_coring(self._get("homs", recipe["hom"]))
        elif construct == "idempotent_ideal":
            alg = self._get("algebras", recipe["algebra"])
            cor = idempotent_ideal_coring(alg, self._scalars(recipe["idempotent"], (alg.dim,), f"corings.{name}.idempotent"))
        elif construct == "explicit":
            base = self._get("algebras", recipe["base"])
            bim = self._get("bimodules", recipe["bimodule"])
            n = bim.dim
            pairs = self._scalars(recipe["delta_pairs"], (n, n, n), f"corings.{name}.delta_pairs")
            eps = self._scalars(recipe["eps"], (base.dim, n), f"corings.{name}.eps")
            sq = TensorProduct(bim, bim)
            cor = Coring(base, bim, sq.embed(pairs), eps, square=sq, name=name)
        else:
            raise FixtureError(f"corings.{name}: unknown construct {construct!r}")
        cor.name = name
        self.corings[name] = cor
        self.entries["corings"][name] = dict(recipe)
        return cor

    def add_explicit_coring(self, name: str, base: str, bimodule: str, delta, eps, square: TensorProduct | None = None) -> Coring:
        """Store a coring whose Delta is given in the coordinates of ``square`` (default C (x) C)."""
        bim = self._get("bimodules", bimodule)
        sq = square if square is not None else TensorProduct(bim, bim)
        pairs = _pairs_of(self.field, sq, delta)
        return self.add_coring(name, {
            "construct": "explicit",
            "base": base,
            "bimodule": bimodule,
            "delta_pairs": self.field.format_array(pairs),
            "eps": self.field.format_array(eps),
        })

    def add_comodule(self, name: str, recipe: dict) -> RightComodule:
        construct = recipe.get("construct")
        cor = self._get("corings", recipe["coring"])
        if construct == "regular":
            com = regular_comodule(cor)
        elif construct == "canonical":
            if not isinstance(cor, ComatrixCoring):
                raise FixtureError(f"comodules.{name}: canonical needs a comatrix coring")
            com = canonical_comatrix_comodule(cor)
        elif construct == "trivial":
            com = trivial_comodule(cor, self._get("bimodules", recipe["module"]))
        elif construct == "grouplike":
            cname, g = self._get("grouplikes", recipe["grouplike"])
            if cname != recipe["coring"]:
                raise FixtureError(f"comodules.{name}: grouplike belongs to coring {cname!r}")
            com = grouplike_comodule(cor, g)
        elif construct == "explicit":
            mod = self._get("bimodules", recipe["module"])
            MC = TensorProduct(mod, cor.bimodule)
            pairs = self._scalars(recipe["rho_pairs"], (mod.dim, cor.dim, mod.dim), f"comodules.{name}.rho_pairs")
            com = RightComodule(cor, mod, MC.embed(pairs), target=MC)
        else:
            raise FixtureError(f"comodules.{name}: unknown construct {construct!r}")
        com.name = name
        self.comodules[name] = com
        self.entries["comodules"][name] = dict(recipe)
        return com

    def add_explicit_comodule(self, name: str, coring: str, module: str, rho, target: TensorProduct | None = None) -> RightComodule:
        """Store a comodule whose coaction is given in the coordinates of ``target`` (default M (x) C)."""
        cor = self._get("corings", coring)
        mod = self._get("bimodules", module)
        MC = target if target is not None else TensorProduct(mod, cor.bimodule)
        pairs = _pairs_of(self.field, MC, rho)
        return self.add_comodule(name, {
            "construct": "explicit",
            "coring": coring,
            "module": module,
            "rho_pairs": self.field.format_array(pairs),
        })

    def add_grouplike(self, name: str, coring: str, coords=None, functional=None) -> np.ndarray:
        cor = self._get("corings", coring)
        entry: dict[str, Any] = {"coring": coring}
        if functional is not None:
            dual = getattr(cor, "dual", None)
            if dual is None:
                raise FixtureError(f"grouplikes.{name}: functional form needs a dual coring")
            fmat = self._scalars(functional, dual.functionals.shape[1:], f"grouplikes.{name}.functional")
            g = dual.coords(fmat)
            entry["functional"] = self.field.format_array(fmat)
        else:
            g = self._scalars(coords, (cor.dim,), f"grouplikes.{name}.coords")
            entry["coords"] = self.field.format_array(g)
        self.grouplikes[name] = (coring, g)
        self.entries["grouplikes"][name] = entry
        return g

    def add_coring_hom(self, name: str, source: str, target: str, matrix) -> CoringHom:
        src, tgt = self._get("corings", source), self._get("corings", target)
        mat = self._scalars(matrix, (tgt.dim, src.dim), f"coring_homs.{name}.matrix")
        hom = CoringHom(src, tgt, mat)
        self.coring_homs[name] = hom
        self.entries["coring_homs"][name] = {"source": source, "target": target, "matrix": self.field.format_array(mat)}
        return hom

    # -- serialization ----------------------------------------------------------

    def to_dict(self) -> dict:
        out = {"schema": SCHEMA, "name": self.name, "description": self.description, "field": str(self.field)}
        for s in SECTIONS:
            out[s] = {k: v for k, v in self.entries[s].items()}
        out["test_modules"] = list(self.test_modules)
        out["roles"] = dict(self.roles)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Fixture":
        if not isinstance(data, dict):
            raise FixtureError("top level must be a JSON object")
        if data.get("schema") != SCHEMA:
            raise FixtureError(f"schema must be {SCHEMA!r}, got {data.get('schema')!r}")
        try:
            F = Field.parse(data["field"])
        except (KeyError, ValueError) as exc:
            raise FixtureError(f"field: {exc}") from None
        fx = cls(data.get("name", ""), F, data.get("description", ""))
        try:
            for name, e in data.get("algebras", {}).items():
                struct = fx._scalars(e["struct"], None, f"algebras.{name}.struct")
                d = struct.shape[0]
                if struct.shape != (d, d, d):
                    raise FixtureError(f"algebras.{name}.struct: expected a cube, got {struct.shape}")
                unit = fx._scalars(e["unit"], (d,), f"algebras.{name}.unit")
                fx.add_algebra(name, Algebra(F, struct, unit, labels=e.get("labels"), name=name))
            for name, e in data.get("homs", {}).items():
                fx.add_hom(name, e["source"], e["target"], e["matrix"])
            for name, e in data.get("bimodules", {}).items():
                fx.add_bimodule(name, e["left"], e["right"], e["lact"], e["ract"])
            # grouplikes refer to corings and comodules refer to grouplikes
            for name, e in data.get("corings", {}).items():
                fx.add_coring(name, e)
            for name, e in data.get("grouplikes", {}).items():
                fx.add_grouplike(name, e["coring"], coords=e.get("coords"), functional=e.get("functional"))
            for name, e in data.get("comodules", {}).items():
                fx.add_comodule(name, e)
            for name, e in data.get("coring_homs", {}).items():
                fx.add_coring_hom(name, e["source"], e["target"], e["matrix"])
        except KeyError as exc:
            raise FixtureError(f"missing field {exc}") from None
        fx.test_modules = list(data.get("test_modules", []))
        for t in fx.test_modules:
            fx._get("bimodules", t)
        fx.roles = dict(data.get("roles", {}))
        return fx


def dumps(fx: Fixture) -> str:
    return json.dumps(fx.to_dict(), indent=1, ensure_ascii=False) + "\n"


def loads(text: str) -> Fixture:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FixtureError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return Fixture.from_dict(data)


def load(path) -> Fixture:
    return loads(Path(path).read_text(encoding="utf-8"))


def save(fx: Fixture, path) -> None:
    Path(path).write_text(dumps(fx), encoding="utf-8")
