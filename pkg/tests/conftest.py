import pytest

import gccodec as g

# generator matrices frozen after a seeded search; distances are re-verified
# exhaustively at construction time by min_distance
GEN_5_2_3 = [[1, 0, 1, 1, 0], [0, 1, 1, 0, 1]]
GEN_HAMMING_7_4_3 = [
    [1, 0, 0, 0, 0, 1, 1],
    [0, 1, 0, 0, 1, 0, 1],
    [0, 0, 1, 0, 1, 1, 0],
    [0, 0, 0, 1, 1, 1, 1],
]
TERNARY_7_1_7 = [[1] * 7]
TERNARY_7_2_5 = [[1, 0, 2, 1, 0, 2, 2], [2, 1, 0, 1, 1, 1, 0]]
TERNARY_7_4_3 = [
    [2, 1, 1, 1, 0, 2, 2],
    [0, 1, 0, 2, 2, 0, 1],
    [2, 0, 2, 0, 2, 0, 2],
    [1, 2, 1, 0, 2, 1, 1],
]
UVW_MATRIX = [[1, 2, 1], [1, 1, 0], [1, 0, 0]]
UUV_MATRIX = [[1, 1], [0, 1]]


@pytest.fixture(scope="session")
def gf2():
    return g.make_field(2, 1)


@pytest.fixture(scope="session")
def gf3():
    return g.make_field(3, 1)


@pytest.fixture(scope="session")
def gf4(gf2):
    return g.extend_field(gf2, 2)


@pytest.fixture(scope="session")
def gf5():
    return g.make_field(5, 1)


@pytest.fixture(scope="session")
def gf8():
    return g.make_field(2, 3)


@pytest.fixture(scope="session")
def inner_523(gf2):
    code = g.generic_code(gf2, GEN_5_2_3)
    assert code.distance() == 3
    return code


@pytest.fixture(scope="session")
def cc_small(gf4, inner_523):
    """Outer [3,1,3] over GF(4), inner [5,2,3] over GF(2); d >= 9."""
    return g.ConcatCode(g.rs_code(gf4, 3, 1), inner_523)


@pytest.fixture(scope="session")
def cc_two_cols(gf2, gf4):
    """Outer [4,2,3] over GF(4), inner Hamming [7,4,3]; two message columns."""
    inner = g.generic_code(gf2, GEN_HAMMING_7_4_3)
    assert inner.distance() == 3
    return g.ConcatCode(g.rs_code(gf4, 4, 2), inner)


@pytest.fixture(scope="session")
def mpc_uuv8(gf8):
    """(u | u+v) over GF(8) with [7,5,3] and [7,1,7] outer codes; d* = 6."""
    return g.mpc_spec([g.rs_code(gf8, 7, 5), g.rs_code(gf8, 7, 1)], UUV_MATRIX, gf8)


@pytest.fixture(scope="session")
def mpc_uvw3(gf3):
    """(u+v+w | 2u+v | u) over GF(3) with outer distances (7, 5, 3), M = 7."""
    a1 = g.generic_code(gf3, TERNARY_7_1_7)
    a2 = g.generic_code(gf3, TERNARY_7_2_5)
    a3 = g.generic_code(gf3, TERNARY_7_4_3)
    assert (a1.distance(), a2.distance(), a3.distance()) == (7, 5, 3)
    return g.mpc_spec([a1, a2, a3], UVW_MATRIX, gf3)


def corrupt(field, word, positions, rng):
    """Flip the given flat positions of a codeword matrix to random other values."""
    n = len(word[0])
    rows = [list(r) for r in word]
    for p in positions:
        rows[p // n][p % n] = field.add(rows[p // n][p % n], rng.randrange(1, field.q))
    return tuple(tuple(r) for r in rows)


def error_matrix(field, sent, received):
    return tuple(
        tuple(field.sub(a, b) for a, b in zip(r, w)) for r, w in zip(received, sent)
    )
