import pytest

from p3groups import catalog
from p3groups.cyclo import CycNum, parse_cyc, root_of_unity
from p3groups.linalg import Mat, PreconditionError, determinant, eigen_lines, inverse, kernel_basis, rref

import strategies as st


def random_mat(r, n, size=4):
    return Mat([[st.cyc(r, n, 3) for _ in range(size)] for _ in range(size)], n)


def test_identity_and_products():
    i = parse_cyc("i")
    m = Mat([[0, -1], [1, 0]])
    assert m ** 4 == Mat.identity(2)
    d = Mat.diag([i, -i])
    assert d @ d == Mat.identity(2).scale(-1)
    assert (m @ Mat.identity(2)) == m


def test_rref_rank_kernel():
    m = Mat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    echelon, rk, piv = rref(m)
    assert rk == 2 and piv == (0, 1)
    ker = kernel_basis(m)
    assert len(ker) == 1
    assert all(v == 0 for v in m.apply(ker[0]))


def test_determinant_and_inverse_of_catalog_matrices():
    for key in ("S", "T", "A", "B", "R", "S1", "T1"):
        m = catalog.matrix(key)
        assert determinant(m) != 0
        assert m @ inverse(m) == Mat.identity(4, m.n)


def test_printed_A_is_singular():
    assert determinant(catalog.matrix("A", printed=True)) == 0
    with pytest.raises(ZeroDivisionError):
        inverse(catalog.matrix("A", printed=True))


def test_determinant_multiplicative_property():
    r = st.rng(2)
    for _ in range(20):
        n = r.choice((1, 4, 5, 8))
        a, b = random_mat(r, n, 3), random_mat(r, n, 3)
        assert determinant(a @ b) == determinant(a) * determinant(b)


def test_eigen_lines_of_T():
    t = catalog.matrix("T")
    eig = eigen_lines(t, 10)
    # T^5 = -I, so eigenvalues are primitive 10th roots up to sign and the spaces are lines
    assert len(eig) == 4 and all(len(b) == 1 for _, b in eig)
    for lam, (v,) in eig:
        tv = t.in_field(lam.n).apply(v)
        assert all(a == lam * b for a, b in zip(tv, v))


def test_eigen_lines_precondition():
    with pytest.raises(PreconditionError):
        eigen_lines(catalog.matrix("T"), 5)


def test_scalar_detection():
    z = root_of_unity(8)
    assert Mat.identity(4, 8).scale(z).is_scalar()
    assert not catalog.matrix("T").is_scalar()
    assert Mat.zeros(2, 2).is_zero()
    assert CycNum.zero(4) == 0
