"""Skew group algebras and the module correspondence.

The skew group algebra of an action has basis pairs (b_i, g), flattened
i-major (index = i * |G| + g), with multiplication

    (b_i g)(b_j h) = b_i * (b_j)^g * (g h).

Linearized modules, induction and restriction realize the equivalence
between modules over the skew group algebra and equivariant modules.
"""

from skewrec.algebra import Algebra
from skewrec.errors import (CocycleViolation, CompatibilityViolation,
                            NotIdempotent, NotInvariant, SkewrecError,
                            UsageError)
from skewrec.linalg import Matrix, Subspace
from skewrec.modules import RightModule


def same_algebra(a, b):
    return a is b or (a.field == b.field and a.unit == b.unit
                      and a.table == b.table)

class SkewAlgebra:

    def __init__(self, base, action, total, embed_base):
        self.base = base
        self.action = action
        self.total = total
        self.embed_base = embed_base

    @property
    def group_order(self):
        return self.action.order

    def flat(self, i, g):
        return i * self.action.order + g

    def embed(self, vec):
        return (Matrix.row_vector(self.base.field, list(vec))
                @ self.embed_base).rows[0]

    def group_element_vector(self, g):
        """1 * g as an element of the total algebra."""
        out = [0] * self.total.dim
        for i, x in enumerate(self.base.unit):
            if x:
                out[self.flat(i, g)] = x
        return out


def _roots_of_unity(field, n):
    """All n-th roots of unity, or None when x^n - 1 does not split."""
    if n == 1:
        return [field.one()]
    if field.p == 0:
        return [1, -1] if n == 2 else None
    roots = [r for r in range(1, field.p) if pow(r, n, field.p) == 1]
    return roots if len(roots) == n else None


def _cyclic_generator(action):
    """Index of a generator when the group is cyclic, with its power list."""
    ng = action.order
    for g in range(ng):
        powers = [action.identity]
        cur = action.identity
        for _ in range(ng):
            cur = action.mult[cur][g]
            if cur == action.identity:
                break
            powers.append(cur)
        if len(powers) == ng:
            return g, powers
    return None, None


def _refined_idempotents(base, action, dim):
    """Orthogonal idempotents e_v * f_chi when the characters are available.

    Needs every base idempotent to be fixed by the action (so that the
    products commute) and a cyclic group whose order of roots of unity
    the field supports; returns None otherwise and the plain embedded
    base idempotents are used.
    """
    ng = action.order
    if ng == 1 or not base.idempotents:
        return None
    for e in base.idempotents:
        if any(action.apply(g, e) != e for g in range(ng)):
            return None
    gen, powers = _cyclic_generator(action)
    if gen is None:
        return None
    roots = _roots_of_unity(base.field, ng)
    if roots is None or not base.field.invertible_int(ng):
        return None
    f = base.field
    inv_n = f.inv(f.coerce(ng))
    out = []
    for e in base.idempotents:
        for w in roots:
            winv = f.inv(f.coerce(w))
            vec = [0] * dim
            coeff = inv_n
            for k, g in enumerate(powers):
                for i, x in enumerate(e):
                    if x:
                        vec[i * ng + g] = f.mul(coeff, x)
                coeff = f.mul(coeff, winv)
            out.append(vec)
    return out


def skew_group_algebra(base, action):
    if not same_algebra(action.algebra, base):
        raise UsageError("action is not over the given algebra")
    f = base.field
    n = base.dim
    ng = action.order
    dim = n * ng
    zero = [0] * dim
    table = [[list(zero) for _ in range(dim)] for _ in range(dim)]
    for g in range(ng):
        sg = action.mats[g]
        for h in range(ng):
            gh = action.mult[g][h]
            for j in range(n):
                twisted = sg.rows[j]            # (b_j)^g in base coordinates
                for i in range(n):
                    prod = base.multiply(base.basis_vector(i), twisted)
                    vec = table[i * ng + g][j * ng + h]
                    for k, x in enumerate(prod):
                        if x:
                            vec[k * ng + gh] = x
    unit = [0] * dim
    for i, x in enumerate(base.unit):
        if x:
            unit[i * ng + action.identity] = x
    idem = _refined_idempotents(base, action, dim)
    if idem is None and base.idempotents:
        idem = []
        for e in base.idempotents:
            v = [0] * dim
            for i, x in enumerate(e):
                if x:
                    v[i * ng + action.identity] = x
            idem.append(v)
    gens = []
    for gvec in base.generator_vectors():
        v = [0] * dim
        for i, x in enumerate(gvec):
            if x:
                v[i * ng + action.identity] = x
        gens.append(v)
    for g in range(ng):
        v = [0] * dim
        for i, x in enumerate(base.unit):
            if x:
                v[i * ng + g] = x
        gens.append(v)
    labels = None
    if ng:
        base_labels = (base.basis_labels
                       or [f"b{i}" for i in range(n)])
        labels = [f"{base_labels[i]}*{action.labels[g]}"
                  for i in range(n) for g in range(ng)]
    total = Algebra(f, table, unit, idempotents=idem, generators=gens,
                    basis_labels=labels)
    embed_rows = []
    for i in range(n):
        v = [0] * dim
        v[i * ng + action.identity] = 1
        embed_rows.append(v)
    embed = Matrix(f, embed_rows, dim) if n else Matrix.zeros(f, 0, dim)
    skew = SkewAlgebra(base, action, total, embed)
    _check_embedding(skew)
    return skew


def _check_embedding(skew):
    base, total, embed = skew.base, skew.total, skew.embed_base
    if embed.rank() != base.dim:
        raise SkewrecError("base embedding is not injective")
    for i in range(base.dim):
        for j in range(base.dim):
            lhs = total.multiply(embed.rows[i], embed.rows[j])
            rhs = skew.embed(base.multiply(base.basis_vector(i),
                                           base.basis_vector(j)))
            if lhs != rhs:
                raise SkewrecError("base embedding is not multiplicative")


def lift_idempotent(skew, e):
    """e' = e * 1_G for a G-invariant idempotent e of the base."""
    f = skew.base.field
    e = [f.coerce(x) for x in e]
    if not skew.base.is_idempotent(e):
        raise NotIdempotent(e)
    if not skew.action.is_invariant_idempotent(e):
        bad = next(g for g in range(skew.action.order)
                   if skew.action.apply(g, e) != e)
        raise NotInvariant(bad)
    lifted = skew.embed(e)
    if not skew.total.is_idempotent(lifted):
        raise SkewrecError("lifted idempotent failed the idempotent check")
    return lifted


class Linearization:
    """Maps mu_g : M -> M^g with mu_id = 1 and mu_g mu_h = mu_{hg}."""

    def __init__(self, module, maps):
        self.module = module
        f = module.algebra.field
        self.maps = [m if isinstance(m, Matrix)
                     else Matrix(f, [[f.coerce(x) for x in row] for row in m],
                                 module.dim)
                     for m in maps]

    def validate(self, action):
        m = self.module
        f = m.algebra.field
        ng = action.order
        if len(self.maps) != ng:
            raise UsageError("one map per group element is required")
        ident = Matrix.identity(f, m.dim)
        if m.dim and self.maps[action.identity] != ident:
            raise CocycleViolation(action.identity, action.identity)
        for h in range(ng):
            for g in range(ng):
                if self.maps[h] @ self.maps[g] != self.maps[action.mult[h][g]]:
                    raise CocycleViolation(g, h)
        for g in range(ng):
            sinv = action.mats[action.inverse(g)]
            mu = self.maps[g]
            for i in range(m.algebra.dim):
                twisted = m.rho(sinv.rows[i])
                if m.mats[i] @ mu != mu @ twisted:
                    raise CompatibilityViolation(g, i)


def canonical_regular_linearization(skew):
    """mu_g = sigma_{g^{-1}} on the regular module; needs an abelian group."""
    if not skew.action.is_abelian():
        raise UsageError("the regular module has this canonical linearization "
                         "only for abelian groups")
    from skewrec.modules import regular_module
    reg = regular_module(skew.base)
    maps = [skew.action.mats[skew.action.inverse(g)]
            for g in range(skew.action.order)]
    return Linearization(reg, maps)


def equivariant_module(skew, lin):
    """The skew-algebra module carried by a linearized base module."""
    lin.validate(skew.action)
    m = lin.module
    ng = skew.action.order
    mats = []
    for i in range(skew.base.dim):
        for g in range(ng):
            mats.append(m.mats[i] @ lin.maps[g])
    return RightModule(skew.total, m.dim, mats)


def restrict(skew, mtot):
    """Forget the group part: b_i acts as b_i * 1_G."""
    if not same_algebra(mtot.algebra, skew.total):
        raise UsageError("module is not over this skew group algebra")
    mats = [mtot.mats[skew.flat(i, skew.action.identity)]
            for i in range(skew.base.dim)]
    return RightModule(skew.base, mtot.dim, mats)


def induce(skew, m):
    """M tensor RG: dimension |G| * dim M, with blocks twisted by the action."""
    if not same_algebra(m.algebra, skew.base):
        raise UsageError("module is not over the base algebra")
    f = skew.base.field
    ng = skew.action.order
    dim = m.dim * ng
    mats = []
    for j in range(skew.base.dim):
        for h in range(ng):
            rows = [[0] * dim for _ in range(dim)]
            for g in range(ng):
                gh = skew.action.mult[g][h]
                twisted = m.rho(skew.action.mats[g].rows[j])
                for t in range(m.dim):
                    src = t * ng + g
                    for t2 in range(m.dim):
                        x = twisted.rows[t][t2]
                        if x:
                            rows[src][t2 * ng + gh] = x
            mats.append(Matrix(f, rows, dim) if dim else Matrix.zeros(f, 0, 0))
    return RightModule(skew.total, dim, mats)


class CornerCompat:
    """Explicit identification (eRe)G = e'(RG)e' and its ingredients."""

    def __init__(self, corner, corner_embed, corner_action, skew_corner,
                 e_lifted, corner2, corner2_embed, iso, iso_inverse):
        self.corner = corner
        self.corner_embed = corner_embed
        self.corner_action = corner_action
        self.skew_corner = skew_corner
        self.e_lifted = e_lifted
        self.corner2 = corner2
        self.corner2_embed = corner2_embed
        self.iso = iso
        self.iso_inverse = iso_inverse


def corner_compat_check(skew, e, instance="instance"):
    """Build (eRe)G and e'(RG)e' and verify the basis map between them.

    The map sends (e r e, g) to the element (e r e) g of RG; the report
    records both dimensions and whether it is bijective, multiplicative
    and unital.  Returns (report, data) with the data reusable by other
    checkers; failures are report entries, not exceptions.
    """
    from skewrec.action import restrict_action_to_corner
    from skewrec.report import CheckReport, FAIL, PASS

    base, total, action = skew.base, skew.total, skew.action
    f = base.field
    e = [f.coerce(x) for x in e]
    corner, embed = base.corner_algebra(e)
    corner_action = restrict_action_to_corner(action, corner, embed, e)
    skew_corner = skew_group_algebra(corner, corner_action)
    e1 = lift_idempotent(skew, e)
    corner2, embed2 = total.corner_algebra(e1)
    ng = action.order
    rows = []
    for a in range(corner.dim):
        w = embed.rows[a]
        for g in range(ng):
            vec = [0] * total.dim
            for i, x in enumerate(w):
                if x:
                    vec[skew.flat(i, g)] = x
            rows.append(vec)
    iso = (Matrix(f, rows, total.dim) if rows
           else Matrix.zeros(f, 0, total.dim))
    span2 = Subspace.span(f, total.dim, embed2)
    measurements = {
        "dim_corner_skew": skew_corner.total.dim,
        "dim_skew_corner": corner2.dim,
        "group_order": ng,
        "dim_corner": corner.dim,
    }
    ok = skew_corner.total.dim == corner2.dim == ng * corner.dim
    image_ok = all(span2.contains(r) for r in iso.rows)
    bijective = image_ok and iso.rank() == skew_corner.total.dim == corner2.dim
    multiplicative = True
    witness = None
    if bijective:
        d = skew_corner.total.dim
        for a in range(d):
            for b in range(d):
                prod = skew_corner.total.multiply(
                    skew_corner.total.basis_vector(a),
                    skew_corner.total.basis_vector(b))
                lhs = (Matrix.row_vector(f, prod) @ iso).rows[0]
                rhs = total.multiply(iso.rows[a], iso.rows[b])
                if lhs != rhs:
                    multiplicative = False
                    witness = {"pair": [a, b]}
                    break
            if not multiplicative:
                break
        unit_img = (Matrix.row_vector(f, skew_corner.total.unit) @ iso).rows[0]
        if unit_img != e1:
            multiplicative = False
            witness = {"unit": True}
    measurements["image_in_corner"] = image_ok
    measurements["bijective"] = bijective
    measurements["multiplicative"] = multiplicative
    verdict = PASS if (ok and bijective and multiplicative) else FAIL
    iso_inverse = None
    if bijective:
        psi_rows = [span2.coords(r) for r in iso.rows]
        psi = Matrix(f, psi_rows, corner2.dim) if psi_rows else \
            Matrix.zeros(f, 0, corner2.dim)
        iso_inverse = psi.inverse()
    report = CheckReport(
        name="corner-compatibility", instance=instance, kind="cross_check",
        hypotheses={"invariant_idempotent": True},
        measurements=measurements, verdict=verdict, witnesses=witness)
    data = CornerCompat(corner, embed, corner_action, skew_corner, e1,
                        corner2, embed2, iso, iso_inverse)
    return report, data


def restriction_block_twists(skew, m):
    """Blocks of restrict(induce(m)): group slot g carries the twist by g^{-1}."""
    from skewrec.modules import twist_module
    restricted = restrict(skew, induce(skew, m))
    ng = skew.action.order
    blocks = []
    for g in range(ng):
        rows = []
        for i in range(skew.base.dim):
            mat = restricted.mats[i]
            rows.append(Matrix(skew.base.field,
                               [[mat.rows[t * ng + g][t2 * ng + g]
                                 for t2 in range(m.dim)]
                                for t in range(m.dim)], m.dim))
        blocks.append((rows, twist_module(m, skew.action.inverse(g),
                                          skew.action)))
    return blocks
