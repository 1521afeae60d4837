"""Idempotent recollement data and the theorem checkers.

For an idempotent e of an algebra L this assembles the corner eLe, the
ideal LeL and the quotient L/LeL, then measures the projective-dimension
criteria that govern whether multiplication by e induces a singular
equivalence, and compares them with the same measurements over the skew
group algebra.  A criterion Fail is only ever issued with a certificate
(stable syzygy periodicity); bound exhaustion alone stays Inconclusive.
"""

import random
from dataclasses import dataclass

from skewrec.action import quotient_action, restrict_action_to_corner
from skewrec.errors import NotInvariant, UsageError
from skewrec.linalg import Matrix, Subspace
from skewrec.modules import (RightModule, Bimodule, certify_infinite_pd,
                             inflate_module, pd_with_chain, regular_module,
                             top_module, tor_dim, transport_module,
                             zero_module)
from skewrec.report import FAIL, INCONCLUSIVE, PASS, CheckReport
from skewrec.skew import (corner_compat_check, equivariant_module, induce,
                          lift_idempotent, skew_group_algebra)


@dataclass
class RecollementData:
    middle: object
    idempotent: list
    corner: object
    corner_embed: Matrix
    ideal: Subspace
    quotient: object
    quotient_proj: Matrix

    @property
    def lift_columns(self):
        return self.ideal.complement_columns()


def recollement_data(lam, e):
    e = [lam.field.coerce(x) for x in e]
    corner, embed = lam.corner_algebra(e)
    ideal = lam.two_sided_ideal(e)
    quotient, proj = lam.quotient_algebra(ideal)
    return RecollementData(lam, e, corner, embed, ideal, quotient, proj)


def quotient_top_as_middle_module(data):
    """(L/LeL)/rad as a right module over the middle algebra."""
    if data.quotient.dim == 0:
        return zero_module(data.middle)
    t = top_module(data.quotient)
    return inflate_module(t, data.quotient_proj, data.middle)


def corner_side_module(data):
    """L e as a right module over the corner eLe."""
    lam, corner = data.middle, data.corner
    f = lam.field
    if corner.dim == 0:
        return zero_module(corner)
    span = Subspace.span(f, lam.dim, lam.right_mul_matrix(data.idempotent))
    mats = []
    for a in range(corner.dim):
        img = span.basis @ lam.right_mul_matrix(data.corner_embed.rows[a])
        rows = [span.coords(img.rows[r]) for r in range(img.nrows)]
        mats.append(Matrix(f, rows, span.dim) if span.dim
                    else Matrix.zeros(f, 0, 0))
    return RightModule(corner, span.dim, mats)


def corner_bimodule(lam, e, corner, embed):
    """e L as an (eLe, L)-bimodule."""
    f = lam.field
    span = Subspace.span(f, lam.dim, lam.left_mul_matrix(e))
    d = span.dim
    left = []
    for a in range(corner.dim):
        img = span.basis @ lam.left_mul_matrix(embed.rows[a])
        rows = [span.coords(img.rows[r]) for r in range(img.nrows)]
        left.append(Matrix(f, rows, d) if d else Matrix.zeros(f, 0, 0))
    right = []
    for j in range(lam.dim):
        img = span.basis @ lam.right_matrices()[j]
        rows = [span.coords(img.rows[r]) for r in range(img.nrows)]
        right.append(Matrix(f, rows, d) if d else Matrix.zeros(f, 0, 0))
    return Bimodule(corner, lam, d, left, right)


def singular_equivalence_criterion(data, bound, seed=0, instance="instance"):
    """pd of the quotient top over the middle, and of Le over the corner.

    Pass needs both finite; Fail needs a certified infinite side; any
    uncertified ExceedsBound leaves the verdict Inconclusive.
    """
    rng = random.Random(seed)
    top = quotient_top_as_middle_module(data)
    pd_top, chain_top = pd_with_chain(top, bound, rng=rng)
    cor = corner_side_module(data)
    pd_cor, chain_cor = pd_with_chain(cor, bound, rng=rng)
    measurements = {
        "pd_quotient_top_over_middle": pd_top,
        "pd_corner_module": pd_cor,
    }
    witnesses = {}
    certified = []
    for label, pd, chain in (("quotient_top", pd_top, chain_top),
                             ("corner_module", pd_cor, chain_cor)):
        if not pd.is_finite:
            wit = certify_infinite_pd(chain, rng)
            if wit is not None:
                certified.append(label)
                witnesses[f"{label}_periodicity"] = list(wit)
    measurements["certified_infinite"] = certified
    if pd_top.is_finite and pd_cor.is_finite:
        verdict, bound_out = PASS, None
    elif certified:
        verdict, bound_out = FAIL, None
    else:
        verdict, bound_out = INCONCLUSIVE, bound
    return CheckReport(
        name="singular-equivalence-criterion", instance=instance,
        kind="criterion",
        hypotheses={"idempotent": True, "bound": bound},
        measurements=measurements, verdict=verdict,
        inconclusive_bound=bound_out,
        witnesses=witnesses or None)


def _require_invariant(action, e):
    if not action.is_invariant_idempotent(e):
        bad = next(g for g in range(action.order)
                   if action.apply(g, e) != e)
        raise NotInvariant(bad)


def equivariant_cross_check(lam, e, action, bound, seed=0, instance="instance",
                            skew=None):
    """Criterion agreement between (L, e) and (LG, e 1_G)."""
    e = [lam.field.coerce(x) for x in e]
    _require_invariant(action, e)
    action.require_order_invertible()
    base = singular_equivalence_criterion(recollement_data(lam, e), bound,
                                          seed=seed, instance=instance)
    skew = skew or skew_group_algebra(lam, action)
    e1 = lift_idempotent(skew, e)
    lifted = singular_equivalence_criterion(recollement_data(skew.total, e1),
                                            bound, seed=seed, instance=instance)
    agree = base.verdict == lifted.verdict
    return CheckReport(
        name="equivariant-singular-equivalence-cross-check", instance=instance,
        kind="cross_check",
        hypotheses={"invariant_idempotent": True,
                    "order_invertible": True, "bound": bound},
        measurements={
            "base": base.measurements,
            "skew": lifted.measurements,
            "base_verdict": base.verdict,
            "skew_verdict": lifted.verdict,
        },
        verdict=PASS if agree else FAIL,
        witnesses=None if agree else {"disagreement": [base.verdict,
                                                       lifted.verdict]})


def gldim_cross_check(lam, action, bound, seed=0, instance="instance",
                      skew=None):
    """gl.dim(L) vs gl.dim(LG) measured as pd of the semisimple top."""
    from skewrec.modules import global_dimension_upper
    action.require_order_invertible()
    rng = random.Random(seed)
    g_base = global_dimension_upper(lam, bound, rng=rng)
    skew = skew or skew_group_algebra(lam, action)
    g_skew = global_dimension_upper(skew.total, bound, rng=rng)
    same = g_base == g_skew
    return CheckReport(
        name="global-dimension-cross-check", instance=instance,
        kind="cross_check",
        hypotheses={"order_invertible": True, "bound": bound},
        measurements={"gldim_base": g_base, "gldim_skew": g_skew},
        verdict=PASS if same else FAIL,
        witnesses=None if same else {"gldim_base": g_base.to_json(),
                                     "gldim_skew": g_skew.to_json()})


def _deflate_to_quotient(m, data):
    """Reinterpret a middle-algebra module killed by the ideal over L/LeL."""
    for v in data.ideal.basis.rows:
        if not m.rho(v).is_zero():
            raise UsageError("test module is not annihilated by the ideal")
    mats = [m.rho(data.middle.basis_vector(c)) for c in data.lift_columns]
    return RightModule(data.quotient, m.dim, mats)


def default_embedding_test_modules(data):
    """Top of the quotient and the quotient regular module."""
    out = []
    if data.quotient.dim:
        out.append(("quotient_top", top_module(data.quotient)))
        out.append(("quotient_regular", regular_module(data.quotient)))
    return out


def _ext_comparison(quot_modules, middle, proj, k_max):
    """Ext dimension tables over the quotient and over the middle algebra."""
    from skewrec.modules import Resolution, ext_table
    table = []
    ok = True
    first_divergence = None
    inflated = [(xn, inflate_module(x, proj, middle)) for xn, x in quot_modules]
    res_q = [Resolution(x) for _xn, x in quot_modules]
    res_m = [Resolution(x) for _xn, x in inflated]
    for i, (xn, x) in enumerate(quot_modules):
        for j, (yn, y) in enumerate(quot_modules):
            cols_q = ext_table(x, y, k_max, res=res_q[i])
            cols_m = ext_table(inflated[i][1], inflated[j][1], k_max,
                               res=res_m[i])
            for n in range(k_max + 1):
                dq, dl = cols_q[n], cols_m[n]
                table.append({"pair": [xn, yn], "n": n,
                              "quotient_ext": dq, "middle_ext": dl})
                if dq != dl:
                    ok = False
                    if first_divergence is None:
                        first_divergence = {"pair": [xn, yn], "n": n,
                                            "quotient_ext": dq,
                                            "middle_ext": dl}
    return ok, table, first_divergence


def _skew_projection(skew_mid, skew_quot, proj):
    """LG -> (L/LeL)G induced by the quotient map, as a matrix."""
    f = skew_mid.base.field
    ngrp = skew_mid.action.order
    rows = []
    for i in range(skew_mid.base.dim):
        for g in range(ngrp):
            row = [0] * skew_quot.total.dim
            for q, x in enumerate(proj.rows[i]):
                if x:
                    row[q * ngrp + g] = x
            rows.append(row)
    return Matrix(f, rows, skew_quot.total.dim)


def homological_embedding_check(lam, e, action=None, k_max=4, test_modules=None,
                                seed=0, instance="instance", skew=None):
    """Ext-dimension agreement for the inclusion Mod L/LeL -> Mod L.

    With an action, the same comparison runs over the skew level
    ((L/LeL)G against LG, with induced test modules) and the verdict is
    the agreement of the two levels.
    """
    e = [lam.field.coerce(x) for x in e]
    data = recollement_data(lam, e)
    if test_modules is None:
        mods = default_embedding_test_modules(data)
    else:
        mods = [(name, _deflate_to_quotient(m, data)) for name, m in test_modules]
    base_ok, base_table, base_div = _ext_comparison(
        mods, data.middle, data.quotient_proj, k_max)
    n0_equal = all(row["quotient_ext"] == row["middle_ext"]
                   for row in base_table if row["n"] == 0)
    measurements = {
        "base_table": base_table,
        "base_embedding_holds": base_ok,
        "ext0_always_equal": n0_equal,
    }
    witnesses = {}
    if base_div:
        witnesses["base_divergence"] = base_div
    if action is None:
        return CheckReport(
            name="homological-embedding", instance=instance, kind="criterion",
            hypotheses={"k_max": k_max},
            measurements=measurements,
            verdict=PASS if base_ok else FAIL,
            witnesses=witnesses or None)
    _require_invariant(action, e)
    action.require_order_invertible()
    skew_mid = skew or skew_group_algebra(lam, action)
    act_q = quotient_action(action, data.quotient, data.quotient_proj,
                            data.lift_columns)
    skew_quot = skew_group_algebra(data.quotient, act_q)
    pi_g = _skew_projection(skew_mid, skew_quot, data.quotient_proj)
    skew_mods = [(f"ind_{name}", induce(skew_quot, m)) for name, m in mods]
    skew_ok, skew_table, skew_div = _ext_comparison(
        skew_mods, skew_mid.total, pi_g, k_max)
    if skew_div:
        witnesses["skew_divergence"] = skew_div
    measurements["skew_table"] = skew_table
    measurements["skew_embedding_holds"] = skew_ok
    agree = base_ok == skew_ok
    return CheckReport(
        name="homological-embedding-transfer", instance=instance,
        kind="cross_check",
        hypotheses={"k_max": k_max, "invariant_idempotent": True,
                    "order_invertible": True},
        measurements=measurements,
        verdict=PASS if agree else FAIL,
        witnesses=witnesses or None)


def tor_vanishing_transfer(lam, e, action, x=None, linearization=None,
                           i_max=4, seed=0, instance="instance", skew=None):
    """Tor vanishing pattern of (X, eL) over eLe against the skew level."""
    e = [lam.field.coerce(x0) for x0 in e]
    _require_invariant(action, e)
    action.require_order_invertible()
    data = recollement_data(lam, e)
    corner = data.corner
    if x is None:
        x = top_module(corner) if corner.dim else zero_module(corner)
    bim = corner_bimodule(lam, e, corner, data.corner_embed)
    base_pattern = [tor_dim(x, bim, i) for i in range(1, i_max + 1)]
    tor0 = tor_dim(x, bim, 0)

    skew_mid = skew or skew_group_algebra(lam, action)
    compat_report, compat = corner_compat_check(skew_mid, e, instance=instance)
    if compat_report.verdict != PASS:
        raise UsageError("corner compatibility failed; cannot transport")
    skew_c = compat.skew_corner
    if linearization is not None:
        x_skew = equivariant_module(skew_c, linearization)
    else:
        x_skew = induce(skew_c, x)
    x2 = transport_module(x_skew, compat.iso_inverse, compat.corner2)
    bim2 = corner_bimodule(skew_mid.total, compat.e_lifted, compat.corner2,
                           compat.corner2_embed)
    skew_pattern = [tor_dim(x2, bim2, i) for i in range(1, i_max + 1)]
    agree = [(a == 0) == (b == 0) for a, b in zip(base_pattern, skew_pattern)]
    return CheckReport(
        name="tor-vanishing-transfer", instance=instance, kind="cross_check",
        hypotheses={"invariant_idempotent": True, "order_invertible": True,
                    "i_max": i_max,
                    "equivariant_test_module": linearization is not None},
        measurements={"base_tor": base_pattern, "skew_tor": skew_pattern,
                      "tor0_base": tor0,
                      "vanishing_agrees": all(agree)},
        verdict=PASS if all(agree) else FAIL,
        witnesses=None if all(agree) else {
            "first_mismatch": agree.index(False) + 1})
