"""Brute-force reference decoders.

These enumerate every codeword and serve two roles: ground truth in the
test suite, and the working decoder for small generic codes (the nested
subcodes of a layered construction are tiny at the scales this package
targets).  oracle_sigma additionally asserts the uniqueness of the
bound-satisfying codeword during the scan.
"""

from __future__ import annotations

from .block_codes import FAILURE, DecodeOutcome, LinearCode, wt_punctured
from .errors import InvalidParams, TooLargeToEnumerate

_DECODE_TABLE_CAP = 512


def _enumerable(code: LinearCode, cap=1 << 20):
    if code.num_codewords() > cap:
        raise TooLargeToEnumerate(
            f"{code.num_codewords()} codewords exceeds enumeration cap"
        )


def oracle_sigma(code: LinearCode, word, erasures=frozenset()) -> DecodeOutcome:
    """Unique codeword with 2*wt_E(word - c) + |E| < d, or failure."""
    _enumerable(code)
    word = tuple(word)
    erasures = frozenset(erasures)
    d = code.distance()
    if len(erasures) >= d:
        return FAILURE
    f = code.field
    hit = None
    for c in code.codewords():
        err = tuple(f.sub(a, b) for a, b in zip(word, c))
        w = wt_punctured(err, erasures)
        if 2 * w + len(erasures) < d:
            assert hit is None, "two codewords inside the error-and-erasure bound"
            hit = DecodeOutcome(c, err, w)
    return hit if hit is not None else FAILURE


def oracle_nearest(code: LinearCode, word):
    """All Hamming-nearest codewords and their common distance."""
    _enumerable(code)
    word = tuple(word)
    best = code.n + 1
    ties = []
    for c in code.codewords():
        dist = sum(1 for a, b in zip(word, c) if a != b)
        if dist < best:
            best = dist
            ties = [c]
        elif dist == best:
            ties.append(c)
    return tuple(ties), best


def oracle_radius(code: LinearCode, word, radius: int) -> DecodeOutcome:
    """Unique codeword within Hamming distance radius; ambiguity is failure."""
    if radius < 0:
        raise InvalidParams("radius must be nonnegative")
    _enumerable(code)
    word = tuple(word)
    f = code.field
    hit = None
    for c in code.codewords():
        dist = sum(1 for a, b in zip(word, c) if a != b)
        if dist <= radius:
            if hit is not None:
                return FAILURE
            err = tuple(f.sub(a, b) for a, b in zip(word, c))
            hit = DecodeOutcome(c, err, dist)
    return hit if hit is not None else FAILURE


class ExhaustiveDecoder:
    """EE decoder backed by oracle_sigma, with a cached errors-only table.

    For codes with at most a few hundred possible received words the full
    errors-only decode map is materialized once, which makes per-row decoding
    in the layered decoders a dictionary lookup.
    """

    def __init__(self, code: LinearCode):
        _enumerable(code)
        self.code = code
        self._table = None

    def _build_table(self):
        code = self.code
        f = code.field
        d = code.distance()
        table = {}
        words = [()]
        for _ in range(code.n):
            words = [w + (x,) for w in words for x in range(f.q)]
        for word in words:
            hit = None
            for c in code.codewords():
                err = tuple(f.sub(a, b) for a, b in zip(word, c))
                w = sum(1 for x in err if x != 0)
                if 2 * w < d:
                    hit = DecodeOutcome(c, err, w)
                    break
            table[word] = hit if hit is not None else FAILURE
        self._table = table

    def __call__(self, word, erasures) -> DecodeOutcome:
        if not erasures:
            if self._table is None and self.code.field.q**self.code.n <= _DECODE_TABLE_CAP:
                self._build_table()
            if self._table is not None:
                return self._table[tuple(word)]
        return oracle_sigma(self.code, word, erasures)
