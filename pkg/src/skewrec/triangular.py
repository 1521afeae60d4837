"""Triangular matrix algebras [[R, 0], [N, S]] and their skew Peirce checks.

The total algebra has basis [R | N | S] with multiplication
(r, n, s)(r', n', s') = (r r', n r' + s n', s s'), N a left-S right-R
bimodule.  The distinguished corner idempotent is (0, 0, 1_S); group
actions fixing it preserve all three Peirce blocks.
"""

from dataclasses import dataclass

from skewrec.algebra import Algebra
from skewrec.errors import ActionDoesNotFixE, NotModuleMap, UsageError
from skewrec.linalg import Matrix, Subspace
from skewrec.modules import (Bimodule, RightModule, global_dimension_upper,
                             projective_dimension)
from skewrec.recollement import recollement_data, singular_equivalence_criterion
from skewrec.report import FAIL, INCONCLUSIVE, PASS, CheckReport
from skewrec.skew import corner_compat_check, lift_idempotent, skew_group_algebra


@dataclass
class TriangularAlgebra:
    r: Algebra
    s: Algebra
    n: Bimodule
    total: Algebra
    corner_e: list

    @property
    def dims(self):
        return self.r.dim, self.n.dim, self.s.dim

    def embed_r(self, vec):
        return list(vec) + [0] * (self.n.dim + self.s.dim)

    def embed_n(self, vec):
        return [0] * self.r.dim + list(vec) + [0] * self.s.dim

    def embed_s(self, vec):
        return [0] * (self.r.dim + self.n.dim) + list(vec)


def triangular_algebra(r, s, n):
    """Assemble [[R, 0], [N, S]] and verify its Peirce structure."""
    if n.left_algebra is not s or n.right_algebra is not r:
        raise UsageError("bimodule must be a left-S right-R bimodule")
    if r.field != s.field:
        raise UsageError("R and S must share the ground field")
    f = r.field
    nr, nn, ns = r.dim, n.dim, s.dim
    dim = nr + nn + ns
    zero = [0] * dim

    def rpart(vec):
        return list(vec) + [0] * (nn + ns)

    def npart(vec):
        return [0] * nr + list(vec) + [0] * ns

    def spart(vec):
        return [0] * (nr + nn) + list(vec)

    table = [[list(zero) for _ in range(dim)] for _ in range(dim)]
    for i in range(nr):
        for j in range(nr):
            table[i][j] = rpart(r.table[i][j])
    for c in range(nn):
        for j in range(nr):
            table[nr + c][j] = npart(n.right_mats[j].rows[c])
    for t in range(ns):
        for c in range(nn):
            table[nr + nn + t][nr + c] = npart(n.left_mats[t].rows[c])
    for t in range(ns):
        for u in range(ns):
            table[nr + nn + t][nr + nn + u] = spart(s.table[t][u])
    unit = rpart(r.unit)
    for t, x in enumerate(s.unit):
        unit[nr + nn + t] = x
    idem = [rpart(e) for e in r.idempotents] + [spart(e) for e in s.idempotents]
    gens = ([rpart(g) for g in r.generator_vectors()]
            + [npart([1 if c == i else 0 for c in range(nn)]) for i in range(nn)]
            + [spart(g) for g in s.generator_vectors()])
    labels = None
    total = Algebra(f, table, unit, idempotents=idem, generators=gens,
                    basis_labels=labels)
    corner_e = spart(s.unit)
    tri = TriangularAlgebra(r, s, n, total, corner_e)
    _verify_peirce(tri)
    return tri


def _verify_peirce(tri):
    total, f = tri.total, tri.total.field
    e = tri.corner_e
    one_minus = [f.add(x, f.neg(y)) for x, y in zip(total.unit, e)]
    le, re = total.left_mul_matrix(e), total.right_mul_matrix(e)
    lf, rf = total.left_mul_matrix(one_minus), total.right_mul_matrix(one_minus)
    if Subspace.span(f, total.dim, lf @ re).dim != 0:
        raise UsageError("(1-e) A e must vanish in a triangular algebra")
    corner_s, _ = total.corner_algebra(e)
    if corner_s.table != tri.s.table:
        raise UsageError("corner at e does not reproduce S")
    corner_r, _ = total.corner_algebra(one_minus)
    if corner_r.table != tri.r.table:
        raise UsageError("corner at 1-e does not reproduce R")
    if Subspace.span(f, total.dim, le @ rf).dim != tri.n.dim:
        raise UsageError("block e A (1-e) does not match N")


def tensor_over(y, n):
    """Y tensor_S N for a right S-module Y and an (S, R)-bimodule N.

    Returns (dimension, projection matrix from Y (x) N, right R-action
    matrices on the quotient).
    """
    s, r = n.left_algebra, n.right_algebra
    if y.algebra is not s and y.algebra.table != s.table:
        raise UsageError("module is not over the bimodule's left algebra")
    f = s.field
    dy, dn = y.dim, n.dim
    amb = dy * dn
    rows = []
    for a in range(dy):
        ya = [0] * dy
        ya[a] = 1
        for i in range(s.dim):
            ys = y.act(ya, s.basis_vector(i))
            for c in range(dn):
                pc = [0] * dn
                pc[c] = 1
                sn = (Matrix.row_vector(f, pc) @ n.left_mats[i]).rows[0]
                row = [0] * amb
                for t, v in enumerate(ys):
                    if v:
                        row[t * dn + c] = f.add(row[t * dn + c], v)
                for t, v in enumerate(sn):
                    if v:
                        row[a * dn + t] = f.add(row[a * dn + t], f.neg(v))
                rows.append(row)
    bal = Subspace.span(f, amb, Matrix(f, rows, amb)) if rows else \
        Subspace.zero(f, amb)
    comp = bal.complement_columns()
    proj_rows = []
    for i in range(amb):
        v = [0] * amb
        v[i] = 1
        red = bal.reduce(v)
        proj_rows.append([red[c] for c in comp])
    proj = Matrix(f, proj_rows, len(comp)) if amb else Matrix.zeros(f, 0, 0)
    rmats = []
    for j in range(r.dim):
        rows2 = []
        for c in comp:
            a, t = divmod(c, dn)
            img = (Matrix.row_vector(f, n.right_mats[j].rows[t])).rows[0]
            vec = [0] * amb
            for t2, v in enumerate(img):
                vec[a * dn + t2] = v
            red = bal.reduce(vec)
            rows2.append([red[x] for x in comp])
        rmats.append(Matrix(f, rows2, len(comp)) if comp else
                     Matrix.zeros(f, 0, 0))
    return len(comp), proj, rmats


def triple_to_module(tri, x, y, fmap):
    """Module on X + Y from a triple (X, Y, f: Y tensor_S N -> X)."""
    r, s, n = tri.r, tri.s, tri.n
    if x.algebra is not r and x.algebra.table != r.table:
        raise UsageError("X must be a right R-module")
    if y.algebra is not s and y.algebra.table != s.table:
        raise UsageError("Y must be a right S-module")
    f = r.field
    tdim, tproj, trmats = tensor_over(y, n)
    if fmap.nrows != tdim or fmap.ncols != x.dim:
        raise UsageError("f has the wrong shape for Y tensor N -> X")
    for j in range(r.dim):
        if trmats[j] @ fmap != fmap @ x.mats[j]:
            raise NotModuleMap(j)
    dim = x.dim + y.dim
    mats = []
    for i in range(r.dim):
        rows = [[0] * dim for _ in range(dim)]
        for a in range(x.dim):
            for b in range(x.dim):
                rows[a][b] = x.mats[i].rows[a][b]
        mats.append(Matrix(f, rows, dim) if dim else Matrix.zeros(f, 0, 0))
    for c in range(n.dim):
        rows = [[0] * dim for _ in range(dim)]
        for a in range(y.dim):
            vec = [0] * (y.dim * n.dim)
            vec[a * n.dim + c] = 1
            img = ((Matrix.row_vector(f, vec) @ tproj) @ fmap).rows[0]
            for b, v in enumerate(img):
                rows[x.dim + a][b] = v
        mats.append(Matrix(f, rows, dim) if dim else Matrix.zeros(f, 0, 0))
    for t in range(s.dim):
        rows = [[0] * dim for _ in range(dim)]
        for a in range(y.dim):
            for b in range(y.dim):
                rows[x.dim + a][x.dim + b] = y.mats[t].rows[a][b]
        mats.append(Matrix(f, rows, dim) if dim else Matrix.zeros(f, 0, 0))
    return RightModule(tri.total, dim, mats)


def peirce_triangular_check(tri, action, instance="instance"):
    """Peirce decomposition of (triangular)G against the reconstruction.

    Verifies that the lifted corner keeps the off-diagonal block zero,
    rebuilds (RG, SG, NG) from the Peirce blocks, checks the two corner
    identifications, and exhibits an explicit algebra isomorphism from
    the reconstructed triangular algebra onto the skew group algebra.
    The dimension audit of the alternative hom-space description of NG
    is recorded without a verdict.
    """
    total, f = tri.total, tri.total.field
    e = tri.corner_e
    for g in range(action.order):
        if action.apply(g, e) != e:
            raise ActionDoesNotFixE(g)
    skew = skew_group_algebra(total, action)
    e1 = lift_idempotent(skew, e)
    one_minus = [f.add(x, f.neg(y)) for x, y in zip(total.unit, e)]
    f1 = lift_idempotent(skew, one_minus)
    tg = skew.total
    zero_block = Subspace.span(f, tg.dim,
                               tg.left_mul_matrix(f1) @ tg.right_mul_matrix(e1))
    rep_s, compat_s = corner_compat_check(skew, e, instance=instance)
    rep_r, compat_r = corner_compat_check(skew, one_minus, instance=instance)
    sg, sg_embed = compat_s.corner2, compat_s.corner2_embed
    rg, rg_embed = compat_r.corner2, compat_r.corner2_embed
    ng_span = Subspace.span(f, tg.dim,
                            tg.left_mul_matrix(e1) @ tg.right_mul_matrix(f1))
    left_mats = []
    for a in range(sg.dim):
        img = ng_span.basis @ tg.left_mul_matrix(sg_embed.rows[a])
        left_mats.append(Matrix(f, [ng_span.coords(rw) for rw in img.rows],
                                ng_span.dim) if ng_span.dim
                         else Matrix.zeros(f, 0, 0))
    right_mats = []
    for a in range(rg.dim):
        img = ng_span.basis @ tg.right_mul_matrix(rg_embed.rows[a])
        right_mats.append(Matrix(f, [ng_span.coords(rw) for rw in img.rows],
                                 ng_span.dim) if ng_span.dim
                          else Matrix.zeros(f, 0, 0))
    ng = Bimodule(sg, rg, ng_span.dim, left_mats, right_mats)
    tri2 = triangular_algebra(rg, sg, ng)
    iso_rows = ([list(rw) for rw in rg_embed.rows]
                + [list(rw) for rw in ng_span.basis.rows]
                + [list(rw) for rw in sg_embed.rows])
    iso = Matrix(f, iso_rows, tg.dim)
    iso_ok = iso.rank() == tri2.total.dim == tg.dim
    if iso_ok:
        unit_img = (Matrix.row_vector(f, tri2.total.unit) @ iso).rows[0]
        iso_ok = unit_img == tg.unit
    if iso_ok:
        for a in range(tri2.total.dim):
            for b in range(tri2.total.dim):
                prod = tri2.total.multiply(tri2.total.basis_vector(a),
                                           tri2.total.basis_vector(b))
                lhs = (Matrix.row_vector(f, prod) @ iso).rows[0]
                rhs = tg.multiply(iso.rows[a], iso.rows[b])
                if lhs != rhs:
                    iso_ok = False
                    break
            if not iso_ok:
                break
    audit = {
        "hom_formula_dim": tg.dim - sg.dim,
        "peirce_block_dim": ng_span.dim,
    }
    ok = (zero_block.dim == 0 and rep_s.verdict == PASS
          and rep_r.verdict == PASS and iso_ok
          and ng_span.dim == action.order * tri.n.dim)
    report = CheckReport(
        name="peirce-triangularity", instance=instance, kind="cross_check",
        hypotheses={"action_fixes_corner": True,
                    "group_order": action.order},
        measurements={
            "off_diagonal_block_dim": zero_block.dim,
            "dim_ng": ng_span.dim,
            "dim_n_times_order": action.order * tri.n.dim,
            "corner_compat_s": rep_s.verdict,
            "corner_compat_r": rep_r.verdict,
            "triangular_iso": iso_ok,
            "n_prime_dimension_audit": audit,
        },
        verdict=PASS if ok else FAIL)
    return report, (rg, sg, ng)


def gldim_corollary_check(tri, action, bound, seed=0, instance="instance"):
    """Exercise the two singular-equivalence implications for triangles.

    (i) gl.dim R finite forces the criterion at the lifted corner;
    (ii) gl.dim S and pd_R N finite force it at the complement.  A
    hypothesis whose measurement is only ExceedsBound is reported as
    vacuous, not asserted.
    """
    total, f = tri.total, tri.total.field
    e = tri.corner_e
    for g in range(action.order):
        if action.apply(g, e) != e:
            raise ActionDoesNotFixE(g)
    action.require_order_invertible()
    gr = global_dimension_upper(tri.r, bound)
    gs = global_dimension_upper(tri.s, bound)
    pdn = projective_dimension(tri.n.as_right_module(), bound)
    skew = skew_group_algebra(total, action)
    e1 = lift_idempotent(skew, e)
    one_minus = [f.add(x, f.neg(y)) for x, y in zip(total.unit, e)]
    f1 = lift_idempotent(skew, one_minus)
    measurements = {"gldim_r": gr, "gldim_s": gs, "pd_r_n": pdn}
    exercised, vacuous = [], []
    verdict = PASS
    inconclusive = False
    if gr.is_finite:
        crit = singular_equivalence_criterion(
            recollement_data(skew.total, e1), bound, seed=seed,
            instance=instance)
        measurements["criterion_at_corner"] = crit.measurements
        measurements["criterion_at_corner_verdict"] = crit.verdict
        exercised.append("finite_gldim_r_implies_corner_criterion")
        if crit.verdict == INCONCLUSIVE:
            inconclusive = True
        elif crit.verdict != PASS:
            verdict = FAIL
    else:
        vacuous.append("finite_gldim_r_implies_corner_criterion")
    if gs.is_finite and pdn.is_finite:
        crit = singular_equivalence_criterion(
            recollement_data(skew.total, f1), bound, seed=seed,
            instance=instance)
        measurements["criterion_at_complement"] = crit.measurements
        measurements["criterion_at_complement_verdict"] = crit.verdict
        exercised.append("finite_gldim_s_and_pd_n_imply_complement_criterion")
        if crit.verdict == INCONCLUSIVE:
            inconclusive = True
        elif crit.verdict != PASS:
            verdict = FAIL
    else:
        vacuous.append("finite_gldim_s_and_pd_n_imply_complement_criterion")
    measurements["exercised"] = exercised
    measurements["vacuous"] = vacuous
    if verdict == PASS and inconclusive:
        verdict = INCONCLUSIVE
    return CheckReport(
        name="triangular-gldim-corollary", instance=instance,
        kind="cross_check",
        hypotheses={"action_fixes_corner": True, "order_invertible": True,
                    "bound": bound},
        measurements=measurements, verdict=verdict,
        inconclusive_bound=bound if verdict == INCONCLUSIVE else None)
