"""Instance files: JSON in, validated objects out.

Loading only checks structure (shapes, key consistency); everything
mathematical (associativity, automorphisms, module axioms) happens when
the instance is built, so `validate` can point at the offending data.

Schema (top level, all optional except `field`):
  field          {"rationals": true} | {"prime": p}
  algebra        {"structure": {"dim", "constants": [[i,j,k,scalar],...],
                  "unit": [...], "idempotents": [[...],...]?}}
               | {"quiver": {"vertices", "arrows": [[s,t],...],
                  "relations": [{"terms": [[coeff, [arrow,...]],...]},...],
                  "bound"}}
  idempotent     [scalar,...] | {"vertices": [v,...]}
  group          {"matrices": [...], "labels": [...]?, "table": [[...]]?}
  modules        {name: {"dim", "action": [matrix,...]}}
  linearizations {name: {"module": name, "maps": [matrix,...]}}
  triangular     {"R": algebra-spec, "S": algebra-spec,
                  "N": {"dim", "left": [...], "right": [...]}}
  bounds         {"pd_bound": 10, "ext_k": 4, "tor_i": 4}
Scalars are "num/den" strings or plain integers.
"""

import json
from dataclasses import dataclass, field as dc_field

from skewrec.algebra import Algebra
from skewrec.action import new_group_action
from skewrec.errors import ParseError, SchemaError, UsageError
from skewrec.linalg import Field
from skewrec.modules import Bimodule, RightModule
from skewrec.quiver import QuiverPresentation, path_algebra
from skewrec.skew import Linearization
from skewrec.triangular import triangular_algebra

DEFAULT_BOUNDS = {"pd_bound": 10, "ext_k": 4, "tor_i": 4}


@dataclass
class InstanceSpec:
    label: str
    raw: dict
    bounds: dict = dc_field(default_factory=lambda: dict(DEFAULT_BOUNDS))


def load_spec(path):
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ParseError(path, str(exc))
    except json.JSONDecodeError as exc:
        raise ParseError(path, f"line {exc.lineno}: {exc.msg}")
    label = raw.get("label") or str(path)
    return parse_spec(raw, label)


def parse_spec(raw, label):
    if not isinstance(raw, dict):
        raise SchemaError("$", "instance must be a JSON object")
    if "field" not in raw:
        raise SchemaError("field", "missing")
    fld = raw["field"]
    if not isinstance(fld, dict) or not (
            fld.get("rationals") is True or isinstance(fld.get("prime"), int)):
        raise SchemaError("field", 'expected {"rationals": true} or {"prime": p}')
    alg = raw.get("algebra")
    if alg is not None:
        forms = [k for k in ("structure", "quiver") if k in alg]
        if len(forms) != 1:
            raise SchemaError("algebra", "exactly one of structure/quiver required")
        if "structure" in alg:
            st = alg["structure"]
            for key in ("dim", "constants", "unit"):
                if key not in st:
                    raise SchemaError(f"algebra.structure.{key}", "missing")
            if len(st["unit"]) != st["dim"]:
                raise SchemaError("algebra.structure.unit", "wrong length")
            for c in st["constants"]:
                if len(c) != 4:
                    raise SchemaError("algebra.structure.constants",
                                      "entries are [i, j, k, scalar]")
        else:
            qv = alg["quiver"]
            for key in ("vertices", "arrows", "bound"):
                if key not in qv:
                    raise SchemaError(f"algebra.quiver.{key}", "missing")
    elif "triangular" not in raw:
        raise SchemaError("algebra", "missing (and no triangular data)")
    if "triangular" in raw:
        tri = raw["triangular"]
        for key in ("R", "S", "N"):
            if key not in tri:
                raise SchemaError(f"triangular.{key}", "missing")
        for key in ("dim", "left", "right"):
            if key not in tri["N"]:
                raise SchemaError(f"triangular.N.{key}", "missing")
    if "group" in raw and "matrices" not in raw["group"]:
        raise SchemaError("group.matrices", "missing")
    idem = raw.get("idempotent")
    if idem is not None and isinstance(idem, dict):
        if "vertices" not in idem:
            raise SchemaError("idempotent", "expected a vector or {vertices: [...]}")
        if alg is None or "quiver" not in alg:
            raise SchemaError("idempotent.vertices",
                              "vertex subsets need a quiver presentation")
    for name, m in (raw.get("modules") or {}).items():
        if "dim" not in m or "action" not in m:
            raise SchemaError(f"modules.{name}", "needs dim and action")
    for name, lin in (raw.get("linearizations") or {}).items():
        if "module" not in lin or "maps" not in lin:
            raise SchemaError(f"linearizations.{name}", "needs module and maps")
        if lin["module"] not in (raw.get("modules") or {}):
            raise SchemaError(f"linearizations.{name}.module",
                              f'unknown module "{lin["module"]}"')
    bounds = dict(DEFAULT_BOUNDS)
    for k, v in (raw.get("bounds") or {}).items():
        if k not in DEFAULT_BOUNDS or not isinstance(v, int) or v < 0:
            raise SchemaError(f"bounds.{k}", "unknown key or bad value")
        bounds[k] = v
    return InstanceSpec(label=label, raw=raw, bounds=bounds)


@dataclass
class BuiltInstance:
    label: str
    field: Field
    algebra: Algebra
    idempotent: list = None
    action: object = None
    modules: dict = dc_field(default_factory=dict)
    linearizations: dict = dc_field(default_factory=dict)
    triangular: object = None
    bounds: dict = dc_field(default_factory=lambda: dict(DEFAULT_BOUNDS))


def _build_field(raw):
    fld = raw["field"]
    return Field.rationals() if fld.get("rationals") else Field.prime(fld["prime"])


def _build_algebra(f, alg):
    if "structure" in alg:
        st = alg["structure"]
        dim = st["dim"]
        table = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, val in st["constants"]:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise SchemaError("algebra.structure.constants", "index out of range")
            table[i][j][k] = f.coerce(val)
        idem = st.get("idempotents")
        return Algebra(f, table, [f.coerce(x) for x in st["unit"]],
                       idempotents=idem)
    qv = alg["quiver"]
    pres = QuiverPresentation(
        vertices=qv["vertices"],
        arrows=[tuple(a) for a in qv["arrows"]],
        relations=qv.get("relations") or [],
        bound=qv["bound"],
        arrow_labels=qv.get("arrow_labels"))
    return path_algebra(f, pres)[0]


def build_instance(spec):
    """Construct every object named in the spec, running deep validation."""
    raw = spec.raw
    f = _build_field(raw)
    tri = None
    if "triangular" in raw:
        tdata = raw["triangular"]
        r = _build_algebra(f, tdata["R"])
        s = _build_algebra(f, tdata["S"])
        n = Bimodule(s, r, tdata["N"]["dim"],
                     [[[f.coerce(x) for x in row] for row in m]
                      for m in tdata["N"]["left"]],
                     [[[f.coerce(x) for x in row] for row in m]
                      for m in tdata["N"]["right"]])
        tri = triangular_algebra(r, s, n)
    if raw.get("algebra") is not None:
        algebra = _build_algebra(f, raw["algebra"])
        if tri is not None and algebra.table != tri.total.table:
            raise SchemaError("triangular",
                              "triangular data does not match the algebra")
    else:
        algebra = tri.total
    idem = raw.get("idempotent")
    evec = None
    if idem is not None:
        if isinstance(idem, dict):
            evec = [0] * algebra.dim
            for v in idem["vertices"]:
                if not 0 <= v < len(algebra.idempotents):
                    raise SchemaError("idempotent.vertices", "vertex out of range")
                evec = [f.add(a, b) for a, b in zip(evec, algebra.idempotents[v])]
        else:
            if len(idem) != algebra.dim:
                raise SchemaError("idempotent", "wrong length")
            evec = [f.coerce(x) for x in idem]
        if not algebra.is_idempotent(evec):
            from skewrec.errors import NotIdempotent
            raise NotIdempotent(evec)
    elif tri is not None:
        evec = list(tri.corner_e)
    action = None
    if "group" in raw:
        grp = raw["group"]
        action = new_group_action(
            algebra, grp["matrices"], labels=grp.get("labels"),
            table=grp.get("table"))
    modules = {}
    for name, m in (raw.get("modules") or {}).items():
        modules[name] = RightModule(algebra, m["dim"], m["action"])
    linearizations = {}
    for name, lin in (raw.get("linearizations") or {}).items():
        if action is None:
            raise SchemaError(f"linearizations.{name}", "no group given")
        li = Linearization(modules[lin["module"]], lin["maps"])
        li.validate(action)
        linearizations[name] = li
    return BuiltInstance(label=spec.label, field=f, algebra=algebra,
                         idempotent=evec, action=action, modules=modules,
                         linearizations=linearizations, triangular=tri,
                         bounds=dict(spec.bounds))
