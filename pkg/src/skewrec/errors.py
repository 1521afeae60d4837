"""Exception taxonomy.

Validation failures always carry a located witness (offending indices or
elements) so the CLI can point at the broken part of an instance file.
"""


class SkewrecError(Exception):
    """Base class for all package errors."""


class UsageError(SkewrecError):
    """Caller broke a precondition (dimension mismatch and similar)."""


class AssociativityViolation(SkewrecError):
    def __init__(self, i, j, k):
        self.indices = (i, j, k)
        super().__init__(f"associativity fails at basis triple ({i}, {j}, {k})")


class UnitViolation(SkewrecError):
    def __init__(self, i, side="left"):
        self.index = i
        self.side = side
        super().__init__(f"unit axiom fails ({side} multiplication by basis element {i})")


class NotIdempotent(SkewrecError):
    def __init__(self, vector=None):
        self.vector = vector
        super().__init__("element is not idempotent: e*e != e")


class NotAnIdeal(SkewrecError):
    def __init__(self, side, basis_index, witness):
        self.side = side
        self.basis_index = basis_index
        self.witness = witness
        super().__init__(
            f"subspace is not a two-sided ideal: {side} product with basis "
            f"element {basis_index} escapes the subspace")


class UnsupportedCharacteristic(SkewrecError):
    def __init__(self, p, dim):
        self.p = p
        self.dim = dim
        super().__init__(
            f"radical via the trace form needs characteristic 0 or p > dim; "
            f"got p = {p} with dim = {dim}")


class RelationNotParallel(SkewrecError):
    def __init__(self, relation_index, detail=""):
        self.relation_index = relation_index
        super().__init__(f"relation {relation_index} is not a combination of "
                         f"parallel paths of length >= 2{detail}")


class BoundTooSmall(SkewrecError):
    def __init__(self, bound):
        self.bound = bound
        super().__init__(f"nilpotency bound must be >= 2, got {bound}")


class NotAutomorphism(SkewrecError):
    def __init__(self, g, i=None, j=None, reason=""):
        self.g = g
        self.pair = (i, j)
        super().__init__(
            f"matrix {g} is not an algebra automorphism"
            + (f": fails on basis pair ({i}, {j})" if i is not None else "")
            + (f" ({reason})" if reason else ""))


class NotClosed(SkewrecError):
    def __init__(self, g, h):
        self.pair = (g, h)
        super().__init__(f"product of elements {g} and {h} is not in the supplied set "
                         f"and no multiplication table was given")


class ClosureCapExceeded(SkewrecError):
    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"group closure exceeded the cap of {cap} elements")


class NotInvariant(SkewrecError):
    def __init__(self, g=None):
        self.g = g
        super().__init__("idempotent is not fixed by the group action"
                         + (f" (element {g} moves it)" if g is not None else ""))


class OrderNotInvertible(SkewrecError):
    def __init__(self, order, p):
        self.order = order
        self.p = p
        super().__init__(f"group order {order} is not invertible in F_{p}")


class CocycleViolation(SkewrecError):
    def __init__(self, g, h):
        self.pair = (g, h)
        super().__init__(f"linearization maps fail the cocycle law at pair ({g}, {h})")


class CompatibilityViolation(SkewrecError):
    def __init__(self, g, i):
        self.pair = (g, i)
        super().__init__(f"linearization map {g} is not a module map to the "
                         f"twist: fails on algebra basis element {i}")


class ModuleAxiomViolation(SkewrecError):
    def __init__(self, i, j=None, what="module"):
        self.indices = (i, j)
        if j is None:
            super().__init__(f"{what} action of the unit is not the identity "
                             f"(row {i})")
        else:
            super().__init__(f"{what} axiom fails at basis pair ({i}, {j})")


class NotModuleMap(SkewrecError):
    def __init__(self, basis_index=None):
        self.basis_index = basis_index
        super().__init__("map is not a module homomorphism"
                         + (f" (fails for basis element {basis_index})"
                            if basis_index is not None else ""))


class ActionDoesNotFixE(SkewrecError):
    def __init__(self, g):
        self.g = g
        super().__init__(f"group element {g} does not fix the corner idempotent")


class ParseError(SkewrecError):
    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")


class SchemaError(SkewrecError):
    def __init__(self, field_path, message):
        self.field_path = field_path
        super().__init__(f"{field_path}: {message}")
