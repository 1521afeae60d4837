from fractions import Fraction

import pytest

from skewrec.instances import bundled_specs
from skewrec.linalg import Field, Matrix
from skewrec.specio import build_instance, parse_spec


def euler_form_via_cartan(a, x, y):
    """Resolution-free oracle: dimension vectors against the Cartan matrix.

    Valid for hereditary path algebras; dim Hom - dim Ext^1 must equal
    this number exactly.
    """
    nv = len(a.idempotents)
    cartan = []
    for i in range(nv):
        row = []
        ei = a.idempotents[i]
        for j in range(nv):
            ej = a.idempotents[j]
            rows = []
            for b in range(a.dim):
                rows.append(a.multiply(ei, a.multiply(a.basis_vector(b), ej)))
            row.append(Matrix(a.field, rows, a.dim).rank())
        cartan.append(row)
    # the pairing lives over the integers whatever the ground field is
    cinv = Matrix(Field.rationals(), cartan, nv).inverse()
    dx = [x.rho(e).rank() for e in a.idempotents]
    dy = [y.rho(e).rank() for e in a.idempotents]
    total = Fraction(0)
    for i in range(nv):
        for j in range(nv):
            total += Fraction(dx[i]) * Fraction(cinv.rows[i][j]) * dy[j]
    assert total.denominator == 1
    return total.numerator


@pytest.fixture(scope="session")
def Q():
    return Field.rationals()


@pytest.fixture(scope="session")
def F101():
    return Field.prime(101)


@pytest.fixture(scope="session")
def corpus():
    """label -> built instance for the whole bundled corpus."""
    out = {}
    for label, raw in bundled_specs().items():
        out[label] = build_instance(parse_spec(raw, label))
    return out


def build(label):
    raw = bundled_specs()[label]
    return build_instance(parse_spec(raw, label))
