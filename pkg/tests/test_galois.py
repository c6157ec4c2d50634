import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import gccodec as g
from gccodec import specio


def naive_digits(value, p, m):
    out = []
    for _ in range(m):
        out.append(value % p)
        value //= p
    return out


def naive_mul(p, modulus, m, a, b):
    """Schoolbook polynomial multiply-and-reduce over GF(p)."""
    da, db = naive_digits(a, p, m), naive_digits(b, p, m)
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    # long division by the monic modulus
    for i in range(len(prod) - 1, m - 1, -1):
        coef = prod[i]
        if coef:
            for j, c in enumerate(modulus):
                prod[i - m + j] = (prod[i - m + j] - coef * c) % p
    acc = 0
    for d in reversed(prod[:m]):
        acc = acc * p + d
    return acc


def has_factor(p, modulus):
    """Exhaustive check for a monic factor of degree 1..deg/2 over GF(p)."""
    import itertools

    from gccodec.galois import poly_divmod, poly_trim

    f = g.make_field(p, 1)
    poly = poly_trim(list(modulus))
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not poly_divmod(f, poly, list(tail) + [1])[1]:
                return True
    return False


class TestMakeField:
    def test_prime_field(self):
        f = g.make_field(2, 1)
        assert (f.p, f.q) == (2, 2)

    def test_gf8_modulus_accepted(self):
        f = g.make_field(2, 3, (1, 1, 0, 1))
        assert f.q == 8
        assert not has_factor(2, (1, 1, 0, 1))

    def test_reducible_modulus_rejected(self):
        # x^2 + 1 = (x + 1)^2 over GF(2)
        assert has_factor(2, (1, 0, 1))
        with pytest.raises(g.ReducibleModulus):
            g.make_field(2, 2, (1, 0, 1))

    def test_not_prime(self):
        with pytest.raises(g.NotPrime):
            g.make_field(4, 1)
        with pytest.raises(g.NotPrime):
            g.make_field(15, 2)

    def test_auto_modulus_deterministic(self):
        assert g.make_field(2, 3).modulus == (1, 1, 0, 1)
        assert g.make_field(2, 2).modulus == (1, 1, 1)
        assert g.make_field(2, 3) is g.make_field(2, 3)

    def test_auto_modulus_is_smallest_irreducible(self):
        for p, m in ((2, 4), (3, 2), (5, 2)):
            f = g.make_field(p, m)
            packed = sum(c * p**i for i, c in enumerate(f.modulus))
            for smaller in range(p**m, packed):
                digits = naive_digits(smaller, p, m + 1)
                if digits[m] != 1:
                    continue
                assert has_factor(p, digits)


class TestArithmetic:
    def test_mod3(self):
        f = g.make_field(3, 1)
        assert f.add(2, 2) == 1

    def test_gf8_examples(self):
        f = g.make_field(2, 3)
        assert f.mul(2, 2) == 4  # x * x = x^2, no reduction
        assert f.mul(4, 2) == 3  # x^2 * x = x + 1 under x^3 + x + 1

    @pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (3, 1), (3, 2), (2, 4)])
    def test_full_mul_table_matches_naive(self, p, m):
        f = g.make_field(p, m)
        for a in range(f.q):
            for b in range(f.q):
                assert f.mul(a, b) == naive_mul(p, f.modulus, m, a, b)

    @given(st.integers(0, 8**2 - 1), st.integers(0, 63), st.integers(0, 63))
    @settings(max_examples=150, deadline=None)
    def test_field_axioms(self, a, b, c):
        f = g.make_field(2, 6)
        a %= f.q
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        if a:
            assert f.mul(a, f.inv(a)) == 1
        assert f.sub(f.add(a, b), b) == a

    def test_axioms_odd_characteristic(self):
        f = g.make_field(5, 2)
        for a in range(f.q):
            assert f.add(a, f.neg(a)) == 0
            if a:
                assert f.mul(a, f.inv(a)) == 1
        for a in (3, 7, 12, 24):
            for b in (1, 5, 19):
                assert f.sub(a, b) == f.add(a, f.neg(b))

    def test_division_by_zero(self):
        f = g.make_field(2, 3)
        with pytest.raises(ZeroDivisionError):
            f.inv(0)
        with pytest.raises(ZeroDivisionError):
            f.div(3, 0)

    def test_large_field_no_tables(self):
        f = g.make_field(2, 9)  # q = 512 > table limit
        a, b = 273, 401
        assert f.mul(a, b) == naive_mul(2, f.modulus, 9, a, b)
        assert f.mul(a, f.inv(a)) == 1


class TestFieldElement:
    def test_operators(self):
        f = g.make_field(2, 3)
        x = f.element(2)
        assert int(x * x) == 4
        assert int(x * x * x) == 3
        assert (x / x) == f.element(1)
        assert (-x) == x  # characteristic 2
        assert x.coeffs == (0, 1, 0)

    def test_field_mismatch(self):
        a = g.make_field(2, 3).element(1)
        b = g.make_field(3, 1).element(1)
        with pytest.raises(g.FieldMismatch):
            a + b

    def test_named_dispatch(self):
        f = g.make_field(3, 1)
        a, b = f.element(2), f.element(2)
        assert int(g.field_arith(a, b, "add")) == 1
        assert int(g.field_arith(a, b, "mul")) == 1
        assert int(g.field_arith(a, None, "neg")) == 1
        assert int(g.field_arith(a, None, "inv")) == 2
        with pytest.raises(g.InvalidParams):
            g.field_arith(a, b, "frobnicate")


class TestTowerView:
    def test_zero_and_basis_vectors(self, gf2, gf4):
        big = g.extend_field(gf4, 2)  # GF(16) over GF(4)
        view = g.TowerView(big, gf4)
        assert view.to_base_vector(0) == (0, 0)
        for i, b in enumerate(view.basis):
            vec = view.to_base_vector(b)
            assert vec == tuple(1 if j == i else 0 for j in range(view.s))

    def test_roundtrip_all_elements(self, gf4):
        big = g.extend_field(gf4, 2)
        view = g.TowerView(big, gf4)
        for e in range(big.q):
            assert view.from_base_vector(view.to_base_vector(e)) == e

    def test_expansion_is_linear_over_base(self, gf4):
        big = g.extend_field(gf4, 2)
        view = g.TowerView(big, gf4)
        for a in (1, 5, 9, 14):
            for b in (0, 3, 7, 11):
                for c in range(gf4.q):
                    lhs = view.to_base_vector(big.add(big.mul(view.lift(c), a), b))
                    rhs = tuple(
                        gf4.add(gf4.mul(c, x), y)
                        for x, y in zip(view.to_base_vector(a), view.to_base_vector(b))
                    )
                    assert lhs == rhs

    def test_custom_basis(self, gf4):
        big = g.extend_field(gf4, 2)
        # basis (x, 1) swaps coordinates relative to the default (1, x)
        view = g.TowerView(big, gf4, basis=(gf4.q, 1))
        for e in range(big.q):
            assert view.from_base_vector(view.to_base_vector(e)) == e
        default = g.TowerView(big, gf4)
        for e in range(big.q):
            assert view.to_base_vector(e) == tuple(reversed(default.to_base_vector(e)))

    def test_dependent_basis_rejected(self, gf4):
        big = g.extend_field(gf4, 2)
        with pytest.raises(g.InvalidParams):
            g.TowerView(big, gf4, basis=(1, 2))  # 2 lies in the base field

    def test_mismatched_fields(self, gf2, gf4):
        big = g.extend_field(gf4, 2)
        with pytest.raises(g.FieldMismatch):
            g.TowerView(big, gf2)

    def test_degree_one_view(self, gf3):
        view = g.TowerView(gf3, gf3)
        assert view.s == 1
        assert view.to_base_vector(2) == (2,)
        assert view.from_base_vector((2,)) == 2


class TestSerialization:
    def test_field_roundtrip(self):
        for f in (g.make_field(2, 1), g.make_field(2, 3), g.make_field(3, 2)):
            d = specio.field_to_json(f)
            assert specio.field_from_json(d) is f
            assert set(d) == {"p", "m", "modulus"}

    def test_tower_field_roundtrip(self, gf4):
        big = g.extend_field(gf4, 2)
        d = specio.field_to_json(big)
        assert "base" in d
        assert specio.field_from_json(d) is big

    def test_element_packing(self):
        f = g.make_field(3, 2)
        for v in range(f.q):
            digits = f.to_digits(v)
            assert f.from_digits(digits) == v
            assert v == digits[0] + 3 * digits[1]
