"""Bundled instance corpus.

Each entry is a raw instance dict in the JSON schema of skewrec.specio,
so the command line and the test suite exercise exactly the loader path
a user would.  Instances come in pairs over Q and over F_101 (101 being
larger than every algebra dimension that appears, including the skew
group algebras); one extra instance runs a C_3 action over F_13.
"""

import json
from pathlib import Path


def _diag(entries):
    n = len(entries)
    return [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]


def _ident(n):
    return _diag([1] * n)


def _field(p):
    return {"rationals": True} if p == 0 else {"prime": p}


def _ground_field(p):
    # one-dimensional algebra: the field itself
    return {
        "algebra": {"quiver": {"vertices": 1, "arrows": [], "relations": [],
                               "bound": 2}},
        "group": {"matrices": [_ident(1)], "labels": ["e"]},
        "idempotent": [1],
    }


def _dual_numbers(p):
    # k[x]/(x^2), basis (e, x); C2 flips x
    return {
        "algebra": {"quiver": {"vertices": 1, "arrows": [[0, 0]],
                               "relations": [{"terms": [[1, [0, 0]]]}],
                               "bound": 3, "arrow_labels": ["x"]}},
        "group": {"matrices": [_ident(2), _diag([1, -1])],
                  "labels": ["e", "s"]},
        "idempotent": [1, 0],
        "modules": {
            "simple": {"dim": 1, "action": [[[1]], [[0]]]},
        },
        "linearizations": {
            "simple-trivial": {"module": "simple", "maps": [[[1]], [[1]]]},
            "simple-sign": {"module": "simple", "maps": [[[1]], [[-1]]]},
        },
    }


def _cusp(p):
    # k[x]/(x^3), basis (e, x, x^2); C2 flips x
    return {
        "algebra": {"quiver": {"vertices": 1, "arrows": [[0, 0]],
                               "relations": [{"terms": [[1, [0, 0, 0]]]}],
                               "bound": 4, "arrow_labels": ["x"]}},
        "group": {"matrices": [_ident(3), _diag([1, -1, 1])],
                  "labels": ["e", "s"]},
        "idempotent": [1, 0, 0],
    }


def _a2(p):
    # path algebra of 0 -> 1 with a trivially acting C2 (the group algebra)
    return {
        "algebra": {"quiver": {"vertices": 2, "arrows": [[0, 1]],
                               "relations": [], "bound": 2,
                               "arrow_labels": ["a"]}},
        "group": {"matrices": [_ident(3), _ident(3)], "labels": ["e", "g"],
                  "table": [[0, 1], [1, 0]]},
        "idempotent": {"vertices": [1]},
        "modules": {
            "s0": {"dim": 1, "action": [[[1]], [[0]], [[0]]]},
            "s1": {"dim": 1, "action": [[[0]], [[1]], [[0]]]},
        },
    }


def _a3(p):
    # 0 -> 1 -> 2, basis (e0, e1, e2, a, b, ab); C2 negates both arrows
    return {
        "algebra": {"quiver": {"vertices": 3, "arrows": [[0, 1], [1, 2]],
                               "relations": [], "bound": 3,
                               "arrow_labels": ["a", "b"]}},
        "group": {"matrices": [_ident(6), _diag([1, 1, 1, -1, -1, 1])],
                  "labels": ["e", "s"]},
        "idempotent": {"vertices": [2]},
    }


def _ut2_structure(p):
    # upper triangular 2x2 matrices by structure constants; the basis is
    # ordered (E22, E12, E11) so that it matches the triangular layout
    # [R | N | S] with R the E22 corner and S the E11 corner
    constants = [
        [0, 0, 0, 1],   # E22 E22 = E22
        [1, 0, 1, 1],   # E12 E22 = E12   (right R-action on N)
        [2, 1, 1, 1],   # E11 E12 = E12   (left S-action on N)
        [2, 2, 2, 1],   # E11 E11 = E11
    ]
    k_alg = {"structure": {"dim": 1, "constants": [[0, 0, 0, 1]], "unit": [1]}}
    return {
        "algebra": {"structure": {"dim": 3, "constants": constants,
                                  "unit": [1, 0, 1],
                                  "idempotents": [[1, 0, 0], [0, 0, 1]]}},
        "group": {"matrices": [_ident(3), _diag([1, -1, 1])],
                  "labels": ["e", "s"]},
        "idempotent": [0, 0, 1],
        "triangular": {
            "R": k_alg, "S": k_alg,
            "N": {"dim": 1, "left": [[[1]]], "right": [[[1]]]},
        },
    }


def _dual_times_k(p):
    # k[x]/(x^2) x k: loop at vertex 0, basis (e0, e1, x);
    # the idempotent sits in the semisimple factor
    return {
        "algebra": {"quiver": {"vertices": 2, "arrows": [[0, 0]],
                               "relations": [{"terms": [[1, [0, 0]]]}],
                               "bound": 3, "arrow_labels": ["x"]}},
        "group": {"matrices": [_ident(3), _diag([1, 1, -1])],
                  "labels": ["e", "s"]},
        "idempotent": {"vertices": [1]},
    }


def _nakayama_a3(p):
    # 0 -> 1 -> 2 with the composite killed: basis (e0, e1, e2, a, b)
    return {
        "algebra": {"quiver": {"vertices": 3, "arrows": [[0, 1], [1, 2]],
                               "relations": [{"terms": [[1, [0, 1]]]}],
                               "bound": 3, "arrow_labels": ["a", "b"]}},
        "group": {"matrices": [_ident(5), _diag([1, 1, 1, -1, 1])],
                  "labels": ["e", "s"]},
        "idempotent": {"vertices": [1]},
    }


def _nakayama_cyclic(p):
    # cyclic quiver 0 <-> 1 with paths of length 3 killed:
    # basis (e0, e1, a, b, ab, ba); self-injective, radical cube zero
    return {
        "algebra": {"quiver": {"vertices": 2, "arrows": [[0, 1], [1, 0]],
                               "relations": [{"terms": [[1, [0, 1, 0]]]},
                                             {"terms": [[1, [1, 0, 1]]]}],
                               "bound": 4, "arrow_labels": ["a", "b"]}},
        "group": {"matrices": [_ident(6), _diag([1, 1, -1, 1, -1, -1])],
                  "labels": ["e", "s"]},
        "idempotent": {"vertices": [0]},
    }


def _tri_dual(p):
    # [[k[x]/(x^2), 0], [k, k]] with x acting as zero on N;
    # total basis (1_R, x, n, 1_S), C2 flips x and n
    dual = {"structure": {"dim": 2,
                          "constants": [[0, 0, 0, 1], [0, 1, 1, 1],
                                        [1, 0, 1, 1]],
                          "unit": [1, 0]}}
    k_alg = {"structure": {"dim": 1, "constants": [[0, 0, 0, 1]], "unit": [1]}}
    return {
        "triangular": {
            "R": dual, "S": k_alg,
            "N": {"dim": 1, "left": [[[1]]], "right": [[[1]], [[0]]]},
        },
        "group": {"matrices": [_ident(4), _diag([1, -1, -1, 1])],
                  "labels": ["e", "s"]},
    }


def _tri_a2(p):
    # [[A2, 0], [S0, k]]: R hereditary of global dimension 1, N = the
    # simple at the source; total basis (e0, e1, a, n, 1_S)
    a2 = {"quiver": {"vertices": 2, "arrows": [[0, 1]], "relations": [],
                     "bound": 2, "arrow_labels": ["a"]}}
    k_alg = {"structure": {"dim": 1, "constants": [[0, 0, 0, 1]], "unit": [1]}}
    return {
        "triangular": {
            "R": a2, "S": k_alg,
            "N": {"dim": 1, "left": [[[1]]],
                  "right": [[[1]], [[0]], [[0]]]},
        },
        "group": {"matrices": [_ident(5), _diag([1, 1, -1, -1, 1])],
                  "labels": ["e", "s"]},
    }


def _cusp_c3_f13():
    # k[x]/(x^3) over F_13 with x -> 3x of order three (3^3 = 27 = 1)
    return {
        "field": {"prime": 13},
        "algebra": {"quiver": {"vertices": 1, "arrows": [[0, 0]],
                               "relations": [{"terms": [[1, [0, 0, 0]]]}],
                               "bound": 4, "arrow_labels": ["x"]}},
        "group": {"matrices": [_ident(3), _diag([1, 3, 9]), _diag([1, 9, 3])],
                  "labels": ["e", "s", "s2"]},
        "idempotent": [1, 0, 0],
    }


_BUILDERS = {
    "ground-field": _ground_field,
    "dual-numbers": _dual_numbers,
    "cusp": _cusp,
    "a2": _a2,
    "a3": _a3,
    "ut2": _ut2_structure,
    "dual-times-k": _dual_times_k,
    "nakayama-a3": _nakayama_a3,
    "nakayama-cyclic": _nakayama_cyclic,
    "tri-dual": _tri_dual,
    "tri-a2": _tri_a2,
}

FIELDS = ((0, "q"), (101, "f101"))


def bundled_specs():
    """Ordered {label: raw instance dict} for the whole corpus."""
    out = {}
    for name, builder in _BUILDERS.items():
        for p, suffix in FIELDS:
            raw = builder(p)
            raw = json.loads(json.dumps(raw))  # deep copy, json-clean
            raw["field"] = _field(p)
            label = f"{name}-{suffix}"
            raw["label"] = label
            out[label] = raw
    raw = _cusp_c3_f13()
    raw["label"] = "cusp-c3-f13"
    out["cusp-c3-f13"] = raw
    return out


def negative_fixtures():
    """Instances that must be rejected, with the expected error kind."""
    non_assoc = {
        "label": "broken-associativity",
        "field": {"rationals": True},
        "algebra": {"structure": {
            "dim": 3,
            "constants": [
                [0, 0, 0, 1], [0, 1, 1, 1], [0, 2, 2, 1],
                [1, 0, 1, 1], [2, 0, 2, 1],
                [1, 1, 2, 1],   # b1 b1 = b2
                [1, 2, 0, 1],   # b1 b2 = b0, but b2 b1 = 0
            ],
            "unit": [1, 0, 0]}},
    }
    non_auto = {
        "label": "broken-automorphism",
        "field": {"rationals": True},
        "algebra": {"quiver": {"vertices": 1, "arrows": [[0, 0]],
                               "relations": [{"terms": [[1, [0, 0]]]}],
                               "bound": 3}},
        "group": {"matrices": [[[1, 0], [1, 1]]]},   # x -> 1 + x
    }
    non_invariant = {
        "label": "broken-invariance",
        "field": {"rationals": True},
        "algebra": {"quiver": {"vertices": 2, "arrows": [], "relations": [],
                               "bound": 2}},
        "group": {"matrices": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]},
        "idempotent": {"vertices": [0]},
    }
    return {
        "broken-associativity": ("AssociativityViolation", non_assoc),
        "broken-automorphism": ("NotAutomorphism", non_auto),
        "broken-invariance": ("NotInvariant", non_invariant),
    }


def write_corpus(directory):
    """Dump the corpus and fixtures as JSON files (used to ship data/)."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for label, raw in bundled_specs().items():
        (directory / f"{label}.json").write_text(
            json.dumps(raw, indent=2, sort_keys=True) + "\n")
    for label, (_kind, raw) in negative_fixtures().items():
        (directory / f"{label}.json").write_text(
            json.dumps(raw, indent=2, sort_keys=True) + "\n")
