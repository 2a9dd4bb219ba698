import random
from itertools import product

import pytest

from expected_tables import expected_dims
from gf2bundle.bipoly import F_POLY, BiPoly, parse
from gf2bundle.chow import chi_E
from gf2bundle.sheafcoh import (
    PHI1,
    PHI2,
    SectionVec,
    cohomology_table,
    h_line,
    hf_ideal_oracle,
    jumping_line,
    kuenneth_basis,
    linear_form,
    monad_cohomology_dims,
    monad_composite_vanishes,
    mult_matrix,
    odd_rows_vanish,
    random_section,
    section_space,
    splitting_type,
)

A_RANGE = range(-5, 5)
B_RANGE = range(-5, 4)
GRID = list(product(A_RANGE, B_RANGE))
POINTS = [p for p in product((0, 1), repeat=3) if any(p)]


@pytest.fixture(scope="module")
def table():
    return cohomology_table(-5, 4, -5, 3)


# ----------------------------------------------------------- line bundles


def test_h_line_examples():
    assert h_line(0, 1, 1) == 9
    assert h_line(2, 0, -3) == 1
    assert h_line(4, -3, -3) == 1
    assert h_line(1, 2, -7) == 0 and h_line(3, -5, 4) == 0


@pytest.mark.parametrize("a, b", list(product(range(-6, 4), repeat=2)))
def test_h_line_serre_duality_and_euler(a, b):
    assert all(h_line(i, a, b) == h_line(4 - i, -3 - a, -3 - b) for i in range(5))
    chi = sum((-1) ** i * h_line(i, a, b) for i in range(5))
    assert chi == (a + 1) * (a + 2) // 2 * ((b + 1) * (b + 2) // 2)


def test_mult_matrix_on_sections():
    M = mult_matrix(parse("x^2"), 0, (0, 0), (0, 2))
    assert M.shape == (1, 6)
    basis, idx = kuenneth_basis((0, 0), 0, 2)
    assert M.row_support(0) == [idx[((0, 0, 0), (2, 0, 0))]]


def test_mult_matrix_contraction():
    M = mult_matrix(parse("x^2"), (0, 2), (0, -5), (0, -3))
    src, _ = kuenneth_basis((0, 2), 0, -5)
    _, tgt = kuenneth_basis((0, 2), 0, -3)
    r = src.index(((0, 0, 0), (-3, -1, -1)))
    assert M.row_support(r) == [tgt[((0, 0, 0), (-1, -1, -1))]]
    r = src.index(((0, 0, 0), (-1, -2, -2)))
    assert M.row_support(r) == []


def test_mult_matrix_rejects_wrong_degree():
    with pytest.raises(ValueError):
        mult_matrix(parse("x^2"), 0, (0, 0), (1, 2))


@pytest.mark.parametrize("block", [(0, 0), (0, 2), (2, 0), (2, 2)])
@pytest.mark.parametrize("g", ["a*x+b*y+c*z", "a^2*y+b*c*z", "c*x"])
def test_mult_matrix_is_dual_to_the_pairing(block, g):
    # multiplication H^i(O(s)) -> H^i(O(t)) is the transpose of multiplication
    # H^{4-i}(O(-3-t)) -> H^{4-i}(O(-3-s)) under e <-> -1-e
    g = parse(g)
    d = g.bidegree
    s = (1, 1) if block[0] == 0 else (-5, -4)
    s = (s[0], 1 if block[1] == 0 else -4)
    t = (s[0] + d.dL, s[1] + d.dh)
    dual = (2 - block[0], 2 - block[1])
    M = mult_matrix(g, block, s, t).to_dense()
    N = mult_matrix(g, dual, (-3 - t[0], -3 - t[1]), (-3 - s[0], -3 - s[1])).to_dense()
    sb, _ = kuenneth_basis(block, *s)
    tb, _ = kuenneth_basis(block, *t)
    _, nd_src = kuenneth_basis(dual, -3 - t[0], -3 - t[1])
    _, nd_tgt = kuenneth_basis(dual, -3 - s[0], -3 - s[1])
    flip = lambda e: tuple(-1 - v for v in e)
    for r, (u, v) in enumerate(sb):
        for c, (u2, v2) in enumerate(tb):
            assert M[r, c] == N[nd_src[(flip(u2), flip(v2))], nd_tgt[(flip(u), flip(v))]]


# -------------------------------------------------------------- the monad


def test_composite_is_zero():
    assert sum((p * q for p, q in zip(PHI2, PHI1)), BiPoly()) == 0
    for a, b in [(0, 0), (-3, -3), (2, -4), (-5, 1)]:
        assert monad_composite_vanishes(a, b)


@pytest.mark.parametrize("a, b", GRID)
def test_odd_rows_vanish(a, b):
    assert odd_rows_vanish(a, b)


def test_dims_examples():
    assert monad_cohomology_dims(0, 0) == (19, 0, 0, 0, 0)
    assert monad_cohomology_dims(-2, -2) == (0, 1, 0, 0, 0)
    assert monad_cohomology_dims(-3, -3) == (0, 0, 1, 0, 0)
    assert monad_cohomology_dims(-5, -5) == (0, 0, 0, 1, 0)


@pytest.mark.parametrize("a, b", GRID)
def test_table_entry(table, a, b):
    assert table[(a, b)] == expected_dims(a, b)


def test_euler_characteristic(table):
    for (a, b), d in table.items():
        assert d[0] - d[1] + d[2] - d[3] + d[4] == chi_E(a, b)


def test_serre_duality(table):
    pairs = 0
    for (a, b), d in table.items():
        dual = table.get((-6 - a, -6 - b))
        if dual is None:
            continue
        pairs += 1
        assert d == tuple(reversed(dual))
    assert pairs == 25
    assert table[(-1, -2)][1] == table[(-5, -4)][3] == 3


def test_vanishing(table):
    for (a, b), d in table.items():
        if (a >= -1 and b >= 0) or (a >= 0 and b >= -1):
            assert d[1:] == (0, 0, 0, 0)


def test_symmetry(table):
    for (a, b), d in table.items():
        if (b, a) in table:
            assert table[(b, a)] == d


def test_symmetry_beyond_the_grid():
    for a, b in [(5, -2), (-6, 1), (6, 6)]:
        assert monad_cohomology_dims(a, b) == monad_cohomology_dims(b, a)


# ------------------------------------------------------------- sections


@pytest.mark.parametrize("m, n, size", [(0, 0, 19), (-1, 0, 3), (-1, -1, 0), (0, -1, 3), (1, 0, 42)])
def test_section_space_size(m, n, size):
    basis = section_space(m, n)
    assert len(basis) == size
    assert all(v.is_valid() for v in basis)


def test_section_space_is_independent_modulo_the_image():
    basis = section_space(0, 0)
    rng = random.Random(11)
    for _ in range(20):
        picks = [v for v in basis if rng.getrandbits(1)]
        if not picks:
            continue
        s = picks[0]
        for v in picks[1:]:
            s = s + v
        assert not s.is_zero_section()


def test_image_vectors_are_zero_sections():
    g = parse("a*b+c^2")  # the left term at twist (0, 1) has bidegree (2, 0)
    v = SectionVec(tuple(g * p for p in PHI2), (0, 1))
    assert v.is_valid() and v.is_zero_section()


def test_random_section_is_valid():
    v = random_section(0, 0, random.Random(4))
    assert v.is_valid() and not v.is_zero_section()


def test_oracle_examples():
    assert hf_ideal_oracle(0, 0, 3, 3) == 18
    assert hf_ideal_oracle(0, 0, 2, 3) == 3
    assert hf_ideal_oracle(0, 0, 2, 2) == 0


# --------------------------------------------------------- jumping lines


@pytest.mark.parametrize("point", POINTS)
def test_splitting_types(point):
    types = [splitting_type(point, form) for form in POINTS]
    assert all(d1 + d2 == 3 and d1 >= d2 for d1, d2 in types)
    assert types.count((3, 0)) == 1
    assert types.count((2, 1)) == 6


def test_jumping_line_examples():
    assert jumping_line((0, 0, 1)) == parse("c")
    assert jumping_line((1, 0, 0)) == parse("a")
    assert jumping_line((1, 1, 1)) == parse("a+b+c")


@pytest.mark.parametrize("point", POINTS)
def test_jumping_line_is_f_at_the_point(point):
    expected = F_POLY.substitute(dict(zip("xyz", point)))
    assert jumping_line(point) == expected == linear_form(point)


def test_splitting_type_rejects_zero():
    with pytest.raises(ValueError):
        splitting_type((0, 0, 0), (1, 0, 0))
