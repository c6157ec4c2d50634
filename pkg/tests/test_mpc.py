import itertools
import random

import numpy as np
import pytest

import gccodec as g
from gccodec import specio

from conftest import UUV_MATRIX, UVW_MATRIX, corrupt, error_matrix


class TestIsNsc:
    def test_uuv_matrix(self, gf2):
        assert g.is_nsc(gf2, UUV_MATRIX)

    def test_uvw_matrix(self, gf3):
        assert g.is_nsc(gf3, UVW_MATRIX)

    def test_identity_fails(self, gf2):
        assert not g.is_nsc(gf2, [[1, 0], [0, 1]])

    def test_shape_error(self, gf2):
        with pytest.raises(g.ShapeError):
            g.is_nsc(gf2, [[1, 1], [0, 1], [1, 0]])

    def test_matches_minor_enumeration(self, gf3):
        # independent check: scan all prefix minors with a fresh determinant
        rng = random.Random(0)
        for _ in range(40):
            k = rng.randrange(1, 4)
            n = rng.randrange(k, 5)
            matrix = [[rng.randrange(3) for _ in range(n)] for _ in range(k)]
            expected = True
            for t in range(1, k + 1):
                for cols in itertools.combinations(range(n), t):
                    sub = np.array(
                        [[matrix[i][c] for c in cols] for i in range(t)], dtype=int
                    )
                    det = int(round(np.linalg.det(sub))) % 3
                    if det == 0:
                        expected = False
            assert g.is_nsc(gf3, matrix) == expected


class TestIsTriangular:
    def test_already_triangular(self, gf2):
        assert g.is_triangular(gf2, UUV_MATRIX)

    def test_column_reversal(self, gf3):
        assert g.is_triangular(gf3, UVW_MATRIX)  # reverse the columns

    def test_rank_deficient(self, gf2):
        assert not g.is_triangular(gf2, [[1, 1], [1, 1]])

    def test_wide_matrix(self, gf2):
        assert g.is_triangular(gf2, [[1, 0, 1, 1], [0, 1, 0, 1]])


class TestDesignedDistance:
    def test_uuv8(self, mpc_uuv8):
        assert g.mpc_designed_distance(mpc_uuv8) == (6, True)

    def test_uvw3(self, mpc_uvw3):
        assert g.mpc_designed_distance(mpc_uvw3) == (3, True)

    def test_three_level_formula(self, gf3):
        a1 = g.generic_code(gf3, [[1, 1, 1, 1], [1, 0, 2, 1]])  # d = 2
        a2 = g.generic_code(gf3, [[1, 1, 1, 0], [0, 1, 2, 1]])
        a3 = g.repetition_code(gf3, 4)
        spec = g.mpc_spec([a1, a2, a3], UVW_MATRIX, gf3)
        n = 3
        expect = min(
            a.distance() * (n - i) for i, a in enumerate([a1, a2, a3])
        )
        assert g.mpc_designed_distance(spec)[0] == expect

    def test_requires_nsc(self, gf2):
        a = g.repetition_code(gf2, 3)
        spec = g.mpc_spec([a, a], [[1, 0], [0, 1]], gf2)
        with pytest.raises(g.NotNsc):
            g.mpc_designed_distance(spec)
        with pytest.raises(g.NotNsc):
            g.mpc_decode(spec, ((0, 0),) * 3)

    def test_exact_for_triangular_small_codes(self, gf2):
        a1 = g.repetition_code(gf2, 3)
        a2 = g.repetition_code(gf2, 3)
        spec = g.mpc_spec([a1, a2], UUV_MATRIX, gf2)
        d_star, exact = g.mpc_designed_distance(spec)
        assert exact
        assert g.exhaustive_min_distance(spec) == d_star


class TestMpcDecode:
    def test_equals_improved_generic(self, mpc_uuv8):
        rng = random.Random(1)
        for _ in range(200):
            msgs = [
                tuple(rng.randrange(8) for _ in range(a.k)) for a in mpc_uuv8.outers
            ]
            word = g.mpc_encode(mpc_uuv8, msgs)
            received = corrupt(
                mpc_uuv8.field, word, rng.sample(range(14), rng.randrange(0, 4)), rng
            )
            try:
                got = g.mpc_decode(mpc_uuv8, received).codeword
            except g.DecodeFailure:
                got = None
            try:
                ref = g.gcc_decode_improved(mpc_uuv8.gcc, received).codeword
            except g.DecodeFailure:
                ref = None
            assert got == ref

    def test_round_schedule_odd_last_distance(self, mpc_uvw3):
        # prefix distances (3, 2, 1): rows are touched in rounds 3 and 1 only
        rng = random.Random(2)
        for _ in range(100):
            msgs = [
                tuple(rng.randrange(3) for _ in range(a.k)) for a in mpc_uvw3.outers
            ]
            word = g.mpc_encode(mpc_uvw3, msgs)
            received = corrupt(
                mpc_uvw3.field, word, rng.sample(range(21), rng.randrange(0, 3)), rng
            )
            try:
                report = g.mpc_decode(mpc_uvw3, received)
            except g.DecodeFailure as exc:
                report = exc.report
            touched = [i + 1 for i, c in enumerate(report.inner_invocations) if c]
            assert len(touched) <= 1 + (mpc_uvw3.k - 1) // 2
            assert 2 not in touched  # the even-distance round reuses everything

    def test_invocation_bound_odd_case(self, mpc_uvw3):
        # last prefix distance odd: M + (d_a2 - 1)
        rng = random.Random(3)
        bound = mpc_uvw3.m + (mpc_uvw3.outers[1].distance() - 1)
        for _ in range(300):
            msgs = [
                tuple(rng.randrange(3) for _ in range(a.k)) for a in mpc_uvw3.outers
            ]
            word = g.mpc_encode(mpc_uvw3, msgs)
            received = corrupt(
                mpc_uvw3.field, word, rng.sample(range(21), rng.randrange(0, 6)), rng
            )
            try:
                report = g.mpc_decode(mpc_uvw3, received)
            except g.DecodeFailure as exc:
                report = exc.report
            assert report.total_inner <= bound

    def test_invocation_bound_even_case(self, gf3):
        # two levels with N = 3... use a k=2 slice of the ternary matrix so the
        # last prefix distance is even (distances (3, 2))
        a1 = g.generic_code(gf3, [[1, 0, 2, 1, 0, 2, 2], [2, 1, 0, 1, 1, 1, 0]])
        a2 = g.generic_code(
            gf3,
            [
                [2, 1, 1, 1, 0, 2, 2],
                [0, 1, 0, 2, 2, 0, 1],
                [2, 0, 2, 0, 2, 0, 2],
                [1, 2, 1, 0, 2, 1, 1],
            ],
        )
        spec = g.mpc_spec([a1, a2], [[1, 2, 1], [1, 1, 0]], gf3)
        assert [c.distance() for c in spec.gcc.subcodes] == [3, 2]
        rng = random.Random(4)
        t = spec.k // 2
        bound = spec.m + sum(
            spec.outers[spec.k - 2 * i - 1].distance() - 1 for i in range(t)
        )
        for _ in range(200):
            msgs = [
                tuple(rng.randrange(3) for _ in range(a.k)) for a in spec.outers
            ]
            word = g.mpc_encode(spec, msgs)
            received = corrupt(
                spec.field, word, rng.sample(range(21), rng.randrange(0, 5)), rng
            )
            try:
                report = g.mpc_decode(spec, received)
            except g.DecodeFailure as exc:
                report = exc.report
            assert report.total_inner <= bound


class TestSpecializedUuv:
    def test_clean(self, mpc_uuv8):
        msgs = [(1, 2, 3, 4, 5), (6,)]
        word = g.mpc_encode(mpc_uuv8, msgs)
        counter = {}
        v1, v2 = g.decode_uuv(mpc_uuv8, word, counter)
        assert v1 == mpc_uuv8.outers[0].encode(msgs[0])
        assert v2 == mpc_uuv8.outers[1].encode(msgs[1])
        assert counter == {"outer:1": 1, "outer:2": 1}

    def test_exhaustive_half_distance(self, gf2):
        # small instance: repetition [3,1,3] levels, d* = 3, exhaustive weight 1
        spec = g.mpc_spec(
            [g.repetition_code(gf2, 3), g.repetition_code(gf2, 3)], UUV_MATRIX, gf2
        )
        for msgs in itertools.product(range(2), repeat=2):
            word = g.mpc_encode(spec, [(msgs[0],), (msgs[1],)])
            for p in range(6):
                rows = [list(r) for r in word]
                rows[p // 2][p % 2] ^= 1
                got = g.decode_uuv(spec, tuple(tuple(r) for r in rows))
                naive = g.decode_uuv_naive(spec, tuple(tuple(r) for r in rows))
                expect = (spec.outers[0].encode((msgs[0],)), spec.outers[1].encode((msgs[1],)))
                assert got == expect
                assert naive == expect

    def test_matches_generic_wherever_generic_succeeds(self, mpc_uuv8):
        rng = random.Random(5)
        for _ in range(500):
            msgs = [
                tuple(rng.randrange(8) for _ in range(a.k)) for a in mpc_uuv8.outers
            ]
            word = g.mpc_encode(mpc_uuv8, msgs)
            received = corrupt(
                mpc_uuv8.field, word, rng.sample(range(14), rng.randrange(0, 5)), rng
            )
            try:
                generic = tuple(g.mpc_decode(mpc_uuv8, received).columns)
            except g.DecodeFailure:
                continue
            special = g.decode_uuv(mpc_uuv8, received)
            assert tuple(special) == generic

    def test_wrong_matrix_rejected(self, gf2):
        a = g.repetition_code(gf2, 3)
        spec = g.mpc_spec([a, a], [[1, 1], [1, 0]], gf2)
        with pytest.raises(g.InvalidParams):
            g.decode_uuv(spec, ((0, 0),) * 3)


class TestSpecializedUuvNaive:
    def test_fallback_branch_used(self, mpc_uuv8):
        # errors concentrated in the first block: the direct first-level decode
        # miscorrects or overshoots, the re-derived second input is clean
        rng = random.Random(6)
        forced = 0
        for _ in range(300):
            msgs = [
                tuple(rng.randrange(8) for _ in range(a.k)) for a in mpc_uuv8.outers
            ]
            word = g.mpc_encode(mpc_uuv8, msgs)
            rows = [list(r) for r in word]
            for j in rng.sample(range(7), 2):
                rows[j][0] = mpc_uuv8.field.add(rows[j][0], rng.randrange(1, 8))
            received = tuple(tuple(r) for r in rows)
            errors = error_matrix(mpc_uuv8.field, word, received)
            if 2 * sum(g.wt(r) for r in errors) >= 6:
                continue
            counter = {}
            v1, v2 = g.decode_uuv_naive(mpc_uuv8, received, counter)
            assert (v1, v2) == (
                mpc_uuv8.outers[0].encode(msgs[0]),
                mpc_uuv8.outers[1].encode(msgs[1]),
            )
            if counter.get("outer:1") == 2:
                forced += 1
        assert forced > 0


class TestSpecializedUvw:
    def test_clean(self, mpc_uvw3):
        msgs = [(1,), (2, 0), (1, 0, 2, 1)]
        word = g.mpc_encode(mpc_uvw3, msgs)
        counter = {}
        cols = g.decode_uvw(mpc_uvw3, word, counter)
        assert cols == tuple(
            a.encode(m) for a, m in zip(mpc_uvw3.outers, msgs)
        )
        assert counter["outer:3"] == 1 and counter["outer:2"] == 1
        assert counter["outer:1"] <= 2 and counter.get("inner:1", 0) == 0

    def test_counter_budget(self, mpc_uvw3):
        rng = random.Random(7)
        limit = mpc_uvw3.outers[1].distance() - 1
        for _ in range(400):
            msgs = [
                tuple(rng.randrange(3) for _ in range(a.k)) for a in mpc_uvw3.outers
            ]
            word = g.mpc_encode(mpc_uvw3, msgs)
            received = corrupt(
                mpc_uvw3.field, word, rng.sample(range(21), rng.randrange(0, 4)), rng
            )
            counter = {}
            try:
                g.decode_uvw(mpc_uvw3, received, counter)
            except g.DecodeFailure:
                pass
            assert counter.get("outer:3", 0) <= 1
            assert counter.get("outer:2", 0) <= 1
            assert counter.get("outer:1", 0) <= 2
            assert counter.get("inner:1", 0) <= limit

    def test_characteristic_two_rejected(self, gf2, gf4):
        a = g.repetition_code(gf4, 3)
        spec = g.mpc_spec([a, a, a], [[1, 3, 1], [1, 1, 0], [1, 0, 0]], gf4)
        with pytest.raises(g.InvalidParams):
            g.decode_uvw(spec, ((0, 0, 0),) * 3)


class TestNscSearch:
    def test_prefix_codes_are_mds(self):
        rng = np.random.Generator(np.random.PCG64(8))
        found = 0
        for q, p, m in ((2, 2, 1), (3, 3, 1), (5, 5, 1)):
            field = g.make_field(p, m)
            for _ in range(8):
                k = int(rng.integers(1, min(4, q) + 1))
                n = int(rng.integers(k, min(6, q) + 1))
                matrix = g.random_nsc_matrix(field, k, n, rng, max_tries=4000)
                if matrix is None:
                    continue
                found += 1
                for t in range(1, k + 1):
                    code = g.LinearCode(field, matrix[:t])
                    assert g.min_distance(code) == n - t + 1
        assert found >= 10

    def test_search_returns_none_when_impossible(self, gf2):
        rng = np.random.Generator(np.random.PCG64(9))
        # k = 2 over GF(2) cannot be NSC beyond N = 2
        assert g.random_nsc_matrix(gf2, 2, 4, rng, max_tries=500) is None


class TestSerialization:
    def test_roundtrip(self, mpc_uuv8):
        d = specio.mpc_to_json(mpc_uuv8)
        spec2 = specio.load_spec(d)
        assert specio.mpc_to_json(spec2) == d
        msgs = [(1, 2, 3, 4, 5), (6,)]
        assert g.mpc_encode(spec2, msgs) == g.mpc_encode(mpc_uuv8, msgs)
