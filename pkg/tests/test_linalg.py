from drinfeld_towers import linalg
from drinfeld_towers.field import make_field

OPS5 = make_field(5, 1, 1)._bops


def test_rref_identity_fixed_point():
    rows = ((1, 0), (0, 1))
    red, pivots = linalg.rref(rows, OPS5)
    assert red == rows and pivots == (0, 1)


def test_rref_normalizes_and_eliminates():
    red, pivots = linalg.rref(((2, 4), (1, 2)), OPS5)
    assert red == ((1, 2),) and pivots == (0,)


def test_rref_canonical_regardless_of_row_order():
    a, _ = linalg.rref(((1, 2, 3), (4, 0, 1)), OPS5)
    b, _ = linalg.rref(((4, 0, 1), (1, 2, 3)), OPS5)
    assert a == b


def test_nullspace_members_annihilate():
    rows = ((1, 2, 3), (2, 4, 1))
    for v in linalg.nullspace(rows, OPS5):
        for row in rows:
            acc = 0
            for a, b in zip(row, v):
                acc = OPS5.add(acc, OPS5.mul(a, b))
            assert acc == 0


def test_nullspace_dimension():
    assert len(linalg.nullspace(((1, 1, 1),), OPS5)) == 2
    assert linalg.nullspace(((1, 0), (0, 1)), OPS5) == ()


def test_solve_consistent():
    rows = ((1, 2), (3, 4))
    sol = linalg.solve(rows, (4, 2), OPS5)
    for row, b in zip(rows, (4, 2)):
        acc = 0
        for a, v in zip(row, sol):
            acc = OPS5.add(acc, OPS5.mul(a, v))
        assert acc == b


def test_solve_inconsistent():
    assert linalg.solve(((1, 1), (2, 2)), (1, 3), OPS5) is None
