"""Path algebras of quivers with relations, truncated at a path length.

Paths compose left to right (p * q walks p first), so vertex idempotents
satisfy e_src * p = p = p * e_tgt.  The algebra is the span of paths of
length < bound modulo the ideal generated by the relations together with
all paths of length >= bound; the relation ideal is closed under arrow
multiplication inside the truncation, which suffices because relation
generators are parallel-path combinations.
"""

from dataclasses import dataclass, field

from skewrec.algebra import Algebra
from skewrec.errors import BoundTooSmall, RelationNotParallel, UsageError
from skewrec.linalg import Matrix, Subspace


@dataclass
class QuiverPresentation:
    vertices: int
    arrows: list                     # (source, target) pairs
    relations: list = field(default_factory=list)
    bound: int = 2                   # paths of length >= bound vanish
    arrow_labels: list = None

    def label(self, a):
        if self.arrow_labels and a < len(self.arrow_labels):
            return self.arrow_labels[a]
        return f"a{a}"


def _path_endpoints(q, arrows_seq, rel_index):
    if not arrows_seq:
        raise RelationNotParallel(rel_index, ": empty path")
    for a in arrows_seq:
        if not 0 <= a < len(q.arrows):
            raise RelationNotParallel(rel_index, f": arrow {a} out of range")
    for a, b in zip(arrows_seq, arrows_seq[1:]):
        if q.arrows[a][1] != q.arrows[b][0]:
            raise RelationNotParallel(rel_index, ": path is not composable")
    return q.arrows[arrows_seq[0]][0], q.arrows[arrows_seq[-1]][1]


def path_algebra(field_obj, q):
    """(Algebra, path labels) for a quiver presentation."""
    if q.bound < 2:
        raise BoundTooSmall(q.bound)
    for s, t in q.arrows:
        if not (0 <= s < q.vertices and 0 <= t < q.vertices):
            raise UsageError("arrow endpoint out of range")
    # enumerate paths of length < bound: (source, target, arrow tuple)
    paths = [(v, v, ()) for v in range(q.vertices)]
    frontier = list(paths)
    for _ in range(q.bound - 1):
        new = []
        for (s, t, seq) in frontier:
            for a, (asrc, atgt) in enumerate(q.arrows):
                if asrc == t:
                    new.append((s, atgt, seq + (a,)))
        paths.extend(new)
        frontier = new
    index = {p[2]: i for i, p in enumerate(paths) if len(p[2]) > 0}
    vertex_index = {p[0]: i for i, p in enumerate(paths) if not p[2]}
    npaths = len(paths)

    def mul_index(i, j):
        """Index of paths[i] * paths[j], or None when zero."""
        s1, t1, seq1 = paths[i]
        s2, t2, seq2 = paths[j]
        if t1 != s2:
            return None
        seq = seq1 + seq2
        if len(seq) >= q.bound:
            return None
        if not seq:
            return vertex_index[s1]
        return index[seq]

    # relation generators as vectors over the path basis
    gens = []
    for ridx, rel in enumerate(q.relations):
        terms = rel["terms"] if isinstance(rel, dict) else rel
        vec = [0] * npaths
        endpoints = None
        for coeff, seq in terms:
            seq = tuple(seq)
            ends = _path_endpoints(q, seq, ridx)
            if len(seq) < 2:
                raise RelationNotParallel(ridx, ": term of length < 2")
            if endpoints is None:
                endpoints = ends
            elif ends != endpoints:
                raise RelationNotParallel(ridx)
            if len(seq) >= q.bound:
                continue    # already zero in the truncation
            c = field_obj.coerce(coeff)
            vec[index[seq]] = field_obj.add(vec[index[seq]], c)
        if any(x != 0 for x in vec):
            gens.append(vec)

    ideal = (Subspace.span(field_obj, npaths, Matrix(field_obj, gens, npaths))
             if gens else Subspace.zero(field_obj, npaths))
    # close under arrow multiplication inside the truncation
    changed = bool(gens)
    while changed:
        changed = False
        extra = []
        for v in ideal.basis.rows:
            for a in range(len(q.arrows)):
                aidx = index.get((a,))
                if aidx is None:
                    continue
                for left in (True, False):
                    img = [0] * npaths
                    for i, x in enumerate(v):
                        if not x:
                            continue
                        k = mul_index(aidx, i) if left else mul_index(i, aidx)
                        if k is not None:
                            img[k] = field_obj.add(img[k], x)
                    if any(y != 0 for y in img) and not ideal.contains(img):
                        extra.append(img)
        if extra:
            ideal = ideal.sum(Subspace.span(field_obj, npaths,
                                            Matrix(field_obj, extra, npaths)))
            changed = True

    comp = ideal.complement_columns()
    dim = len(comp)
    pos = {c: i for i, c in enumerate(comp)}

    def project(vec):
        red = ideal.reduce(vec)
        return [red[c] for c in comp]

    table = []
    for a in range(dim):
        row = []
        for b in range(dim):
            vec = [0] * npaths
            k = mul_index(comp[a], comp[b])
            if k is not None:
                vec[k] = 1
            row.append(project(vec))
        table.append(row)
    unit = [0] * npaths
    for v in range(q.vertices):
        unit[vertex_index[v]] = 1
    unit = project(unit)
    idem = []
    for v in range(q.vertices):
        vec = [0] * npaths
        vec[vertex_index[v]] = 1
        idem.append(project(vec))
    gens_alg = list(idem)
    for a in range(len(q.arrows)):
        vec = [0] * npaths
        aidx = index.get((a,))
        if aidx is not None:
            vec[aidx] = 1
        gens_alg.append(project(vec))

    def path_label(i):
        s, t, seq = paths[i]
        if not seq:
            return f"e{s}"
        return "*".join(q.label(a) for a in seq)

    labels = [path_label(comp[a]) for a in range(dim)]
    alg = Algebra(field_obj, table, unit, idempotents=idem,
                  generators=gens_alg, basis_labels=labels)
    return alg, labels
