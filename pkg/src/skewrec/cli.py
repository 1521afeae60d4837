"""Command line: run checkers over instance files and emit reports.

Exit codes: 0 when nothing failed (inconclusive verdicts only warn),
2 when a requested check failed, 1 on input or validation errors.  Under
`all`, criterion failures (mathematical facts about the instance, e.g.
"no singular equivalence here") do not affect the exit code; theorem
cross-check failures always do.
"""

import argparse
import json
import sys

from skewrec import __version__
from skewrec.errors import SkewrecError
from skewrec.instances import bundled_specs
from skewrec.linalg import Matrix
from skewrec.recollement import (equivariant_cross_check,
                                 homological_embedding_check, recollement_data,
                                 singular_equivalence_criterion,
                                 tor_vanishing_transfer, gldim_cross_check)
from skewrec.report import FAIL, INCONCLUSIVE, PASS, CheckReport
from skewrec.skew import skew_group_algebra, lift_idempotent
from skewrec.specio import build_instance, load_spec, parse_spec
from skewrec.triangular import gldim_corollary_check, peirce_triangular_check

COMMANDS = ("validate", "skew", "recollement", "singular-equiv", "gldim",
            "hom-embedding", "tor-transfer", "peirce", "all")


def _validation_report(inst):
    meas = {
        "algebra_dim": inst.algebra.dim,
        "modules": sorted(inst.modules),
        "linearizations": sorted(inst.linearizations),
    }
    if inst.field.p == 0 or inst.field.p > inst.algebra.dim:
        meas["radical_dim"] = inst.algebra.radical().dim
    if inst.action is not None:
        meas["group_order"] = inst.action.order
        meas["order_invertible"] = inst.action.order_invertible()
    if inst.idempotent is not None and inst.action is not None:
        if not inst.action.is_invariant_idempotent(inst.idempotent):
            from skewrec.errors import NotInvariant
            bad = next(g for g in range(inst.action.order)
                       if inst.action.apply(g, inst.idempotent)
                       != inst.idempotent)
            raise NotInvariant(bad)
        meas["idempotent_invariant"] = True
    if inst.triangular is not None:
        meas["triangular_dims"] = list(inst.triangular.dims)
    return CheckReport(name="validate", instance=inst.label,
                       kind="construction", measurements=meas, verdict=PASS)


def _skew_report(inst, skew):
    a, act = inst.algebra, inst.action
    f = a.field
    total = skew.total
    meas = {
        "base_dim": a.dim,
        "group_order": act.order,
        "total_dim": total.dim,
        "dim_is_product": total.dim == a.dim * act.order,
    }
    ok = meas["dim_is_product"]
    if act.order_invertible() and (f.p == 0 or f.p > total.dim):
        rad_base = a.radical().dim
        rad_total = total.radical().dim
        meas["radical_base"] = rad_base
        meas["radical_total"] = rad_total
        meas["radical_transfer"] = rad_total == act.order * rad_base
        ok = ok and meas["radical_transfer"]
    trivial = all(act.mats[g] == Matrix.identity(f, a.dim)
                  for g in range(act.order))
    meas["trivial_action"] = trivial
    if trivial:
        commutes = True
        for i in range(a.dim):
            bi = skew.embed(a.basis_vector(i))
            for g in range(act.order):
                gv = skew.group_element_vector(g)
                if total.multiply(bi, gv) != total.multiply(gv, bi):
                    commutes = False
        meas["group_algebra_commutes"] = commutes
        ok = ok and commutes
    return CheckReport(name="skew-construction", instance=inst.label,
                       kind="construction",
                       hypotheses={"order_invertible": act.order_invertible()},
                       measurements=meas,
                       verdict=PASS if ok else FAIL)


def _recollement_report(inst):
    data = recollement_data(inst.algebra, inst.idempotent)
    meas = {
        "middle_dim": data.middle.dim,
        "corner_dim": data.corner.dim,
        "ideal_dim": data.ideal.dim,
        "quotient_dim": data.quotient.dim,
        "dims_consistent": data.quotient.dim + data.ideal.dim == data.middle.dim,
    }
    return CheckReport(name="recollement-data", instance=inst.label,
                       kind="construction", measurements=meas,
                       verdict=PASS if meas["dims_consistent"] else FAIL)


def checks_for(command, inst, seed=0, bound=None, ext_k=None):
    """Run one command's checkers over a built instance."""
    bound = bound if bound is not None else inst.bounds["pd_bound"]
    ext_k = ext_k if ext_k is not None else inst.bounds["ext_k"]
    tor_i = inst.bounds["tor_i"]
    label = inst.label
    reports = []
    skew = None

    def get_skew():
        nonlocal skew
        if skew is None:
            skew = skew_group_algebra(inst.algebra, inst.action)
        return skew

    if command in ("validate", "all"):
        reports.append(_validation_report(inst))
    if command in ("skew", "all") and inst.action is not None:
        reports.append(_skew_report(inst, get_skew()))
    if command in ("recollement", "all") and inst.idempotent is not None:
        reports.append(_recollement_report(inst))
    if command in ("singular-equiv", "all") and inst.idempotent is not None:
        data = recollement_data(inst.algebra, inst.idempotent)
        base = singular_equivalence_criterion(data, bound, seed=seed,
                                              instance=label)
        reports.append(base)
        if inst.action is not None and inst.action.order_invertible() \
                and inst.action.is_invariant_idempotent(inst.idempotent):
            cross = equivariant_cross_check(inst.algebra, inst.idempotent,
                                            inst.action, bound, seed=seed,
                                            instance=label, skew=get_skew())
            reports.append(cross)
    if command in ("gldim", "all") and inst.action is not None \
            and inst.action.order_invertible():
        reports.append(gldim_cross_check(inst.algebra, inst.action, bound,
                                         seed=seed, instance=label,
                                         skew=get_skew()))
    if command in ("hom-embedding", "all") and inst.idempotent is not None:
        action = None
        if inst.action is not None and inst.action.order_invertible() \
                and inst.action.is_invariant_idempotent(inst.idempotent):
            action = inst.action
        reports.append(homological_embedding_check(
            inst.algebra, inst.idempotent, action, k_max=ext_k, seed=seed,
            instance=label, skew=get_skew() if action else None))
    if command in ("tor-transfer", "all") and inst.idempotent is not None \
            and inst.action is not None and inst.action.order_invertible() \
            and inst.action.is_invariant_idempotent(inst.idempotent):
        reports.append(tor_vanishing_transfer(
            inst.algebra, inst.idempotent, inst.action, i_max=tor_i,
            seed=seed, instance=label, skew=get_skew()))
    if command in ("peirce", "all") and inst.triangular is not None \
            and inst.action is not None:
        rep, _ = peirce_triangular_check(inst.triangular, inst.action,
                                         instance=label)
        reports.append(rep)
        if inst.action.order_invertible():
            reports.append(gldim_corollary_check(inst.triangular, inst.action,
                                                 bound, seed=seed,
                                                 instance=label))
    return reports


def run(command, specs, seed=0, bound=None, ext_k=None):
    """Execute a command over parsed instance specs.

    Returns (exit_code, documents); documents is one report dict per
    instance, in input order.
    """
    docs = []
    exit_code = 0
    warnings = 0
    for spec in specs:
        inst = build_instance(spec)
        reports = checks_for(command, inst, seed=seed, bound=bound,
                             ext_k=ext_k)
        for rep in reports:
            if rep.verdict == INCONCLUSIVE:
                warnings += 1
            if rep.verdict == FAIL:
                if command != "all" or rep.kind != "criterion":
                    exit_code = 2
        docs.append({
            "instance": spec.label,
            "version": __version__,
            "checks": [r.to_json_dict() for r in reports],
        })
    return exit_code, docs, warnings


def render_table(docs):
    lines = []
    for doc in docs:
        for chk in doc["checks"]:
            lines.append(f"{doc['instance']:<24} {chk['name']:<44} "
                         f"{chk['verdict']}")
    return "\n".join(lines) + "\n"


def render_json(docs):
    payload = docs[0] if len(docs) == 1 else docs
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="skewrec",
        description="exact checks for skew group algebras and recollements")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("paths", nargs="*", help="instance JSON files")
    parser.add_argument("--bundled", action="store_true",
                        help="run over the bundled corpus")
    parser.add_argument("--instance", action="append", default=[],
                        help="bundled instance label (repeatable)")
    parser.add_argument("--bound", type=int, default=None,
                        help="projective-dimension cutoff")
    parser.add_argument("--ext-k", type=int, default=None,
                        help="largest Ext degree to compare")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for the isomorphism searches")
    parser.add_argument("--format", choices=("json", "table"), default="json")
    parser.add_argument("--out", default=None, help="write the report here")
    args = parser.parse_args(argv)

    specs = []
    try:
        for path in args.paths:
            specs.append(load_spec(path))
        corpus = bundled_specs() if (args.bundled or args.instance) else {}
        if args.bundled:
            for label, raw in corpus.items():
                specs.append(parse_spec(raw, label))
        for label in args.instance:
            if label not in corpus:
                print(f"skewrec: unknown bundled instance {label!r}",
                      file=sys.stderr)
                return 1
            specs.append(parse_spec(corpus[label], label))
        if not specs:
            print("skewrec: no instances given (use paths or --bundled)",
                  file=sys.stderr)
            return 1
        code, docs, warnings = run(args.command, specs, seed=args.seed,
                                   bound=args.bound, ext_k=args.ext_k)
    except SkewrecError as exc:
        print(f"skewrec: error: {exc}", file=sys.stderr)
        return 1
    text = render_table(docs) if args.format == "table" else render_json(docs)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if warnings:
        print(f"skewrec: {warnings} inconclusive verdict(s) at the configured "
              f"bound", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
