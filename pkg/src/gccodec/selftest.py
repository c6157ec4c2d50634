"""Built-in invariant suite backed by the brute-force oracles.

A condensed, fast subset of the property tests, runnable from the CLI on an
installed package.  Each check prints one line; any failure is a VIOLATION.
"""

from __future__ import annotations

import itertools
import random

from .block_codes import generic_code, rs_code
from .concat import DecodeOptions
from .errors import DecodeFailure
from .galois import TowerView, extend_field, make_field
from .mpc import decode_uuv, mpc_decode, mpc_spec
from .oracle import oracle_sigma


def _check_field_axioms(rng):
    for p, m in ((2, 3), (3, 2)):
        f = make_field(p, m)
        for _ in range(200):
            a, b, c = (rng.randrange(f.q) for _ in range(3))
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
            assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
            if a:
                assert f.mul(a, f.inv(a)) == 1


def _check_tower_roundtrip(rng):
    base = make_field(2, 2)
    big = extend_field(base, 2)
    view = TowerView(big, base)
    for e in range(big.q):
        assert view.from_base_vector(view.to_base_vector(e)) == e


def _check_rs_against_oracle(rng):
    f = make_field(2, 3)
    code = rs_code(f, 7, 3)
    for _ in range(150):
        word = tuple(rng.randrange(8) for _ in range(7))
        erasures = frozenset(rng.sample(range(7), rng.randrange(0, 5)))
        fast = code.decode(word, erasures)
        slow = oracle_sigma(code, word, erasures)
        assert fast.codeword == slow.codeword


def _check_nested_erasure_consistency(rng):
    f = make_field(2, 1)
    code = generic_code(f, [[1, 0, 1, 1, 0], [0, 1, 1, 0, 1]])
    d = code.distance()
    n = code.n
    for word in itertools.product(range(2), repeat=n):
        for size in range(n):
            if (d - size) % 2 != 0:
                continue
            for f1 in itertools.combinations(range(n), size):
                f1 = frozenset(f1)
                first = oracle_sigma(code, word, f1)
                if not first.ok:
                    continue
                for extra in range(n):
                    if extra in f1:
                        continue
                    second = oracle_sigma(code, word, f1 | {extra})
                    assert first.codeword == second.codeword


def _check_uuv_matches_generic(rng):
    f = make_field(2, 1)
    spec = mpc_spec(
        [rs_code(make_field(2, 1), 2, 1), rs_code(make_field(2, 1), 2, 1)],
        [[1, 1], [0, 1]],
        f,
    )
    # length-2 repetition outers over GF(2); exhaustive over small errors
    from .gcc import gcc_encode

    for msgs in itertools.product(range(2), repeat=2):
        word = gcc_encode(spec.gcc, [(msgs[0],), (msgs[1],)])
        for flip in range(4):
            rows = [list(r) for r in word]
            rows[flip // 2][flip % 2] ^= 1
            rows = tuple(tuple(r) for r in rows)
            try:
                report = mpc_decode(spec, rows, DecodeOptions())
                generic = report.columns
            except DecodeFailure:
                generic = None
            try:
                special = list(decode_uuv(spec, rows))
            except DecodeFailure:
                special = None
            if generic is not None:
                assert special is not None and list(generic) == special


def _check_nsc_prefixes(rng):
    from .block_codes import min_distance
    from .mpc import is_nsc

    f = make_field(3, 1)
    matrix = [[1, 2, 1], [1, 1, 0], [1, 0, 0]]
    assert is_nsc(f, matrix)
    for t in range(1, 4):
        code = generic_code(f, matrix[:t])
        assert min_distance(code) == 3 - t + 1


CHECKS = [
    ("field-axioms", _check_field_axioms),
    ("tower-roundtrip", _check_tower_roundtrip),
    ("rs-vs-oracle", _check_rs_against_oracle),
    ("nested-erasure-consistency", _check_nested_erasure_consistency),
    ("uuv-vs-generic", _check_uuv_matches_generic),
    ("nsc-prefixes-mds", _check_nsc_prefixes),
]


def run_selftest(verbose: bool = False) -> bool:
    rng = random.Random(20240901)
    ok = True
    for name, check in CHECKS:
        try:
            check(rng)
        except AssertionError as exc:
            ok = False
            if verbose:
                print(f"VIOLATION {name}: {exc}")
        else:
            if verbose:
                print(f"ok {name}")
    return ok
