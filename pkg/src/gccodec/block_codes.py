"""Linear block codes over GF(q) and bounded-distance error-and-erasure decoding.

The decoding contract used everywhere in this package: given a received word
r and an erasure set E, a decoder must return the codeword c with
2*wt_E(r - c) + |E| < d when one exists (it is then unique) and report
failure otherwise.  Every bundled decoder re-verifies its output against the
bound before returning, so a decoder can never smuggle out a codeword that
violates the contract.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import galois, linalg
from .errors import (
    InvalidParams,
    LengthMismatch,
    NoDecoder,
    TooLargeToEnumerate,
)

ENUMERATION_CAP = 1 << 20
_TABLE_CAP = 512  # decode tables for tiny codes (errors-only fast path)


def wt(v) -> int:
    return sum(1 for x in v if x != 0)


def wt_punctured(v, erasures) -> int:
    """Hamming weight of v outside the erased coordinates."""
    n = len(v)
    for i in erasures:
        if not 0 <= i < n:
            raise IndexError(f"erasure index {i} out of range for length {n}")
    return sum(1 for i, x in enumerate(v) if x != 0 and i not in erasures)


def check_erasures(erasures, n) -> frozenset:
    out = frozenset(int(i) for i in erasures)
    for i in out:
        if not 0 <= i < n:
            raise IndexError(f"erasure index {i} out of range for length {n}")
    return out


@dataclass(frozen=True)
class DecodeOutcome:
    """Either a decoded codeword with its apparent error, or a failure."""

    codeword: tuple | None
    error: tuple | None
    weight: int | None  # punctured weight of the apparent error

    @property
    def ok(self) -> bool:
        return self.codeword is not None

    @classmethod
    def failure(cls) -> "DecodeOutcome":
        return FAILURE


FAILURE = DecodeOutcome(None, None, None)


class LinearCode:
    """A linear [n, k] code given by a full-rank generator matrix.

    The minimum distance may be declared at construction (trusted for MDS
    constructions) or computed on demand by exhaustive enumeration when the
    code is small enough.
    """

    def __init__(self, field, generator, d=None, kind="generic", eval_points=None):
        self.field = field
        self.generator = tuple(tuple(field.validate(int(x)) for x in row) for row in generator)
        self.k = len(self.generator)
        if self.k == 0:
            raise InvalidParams("generator matrix must have at least one row")
        self.n = len(self.generator[0])
        if any(len(row) != self.n for row in self.generator):
            raise InvalidParams("generator matrix must be rectangular")
        if linalg.rank(field, self.generator) != self.k:
            raise InvalidParams("generator matrix must have full row rank")
        self._d = d
        self.kind = kind
        self.eval_points = eval_points
        self.decoder = None
        self._rinv = None
        self._codewords = None
        self._codeword_set = None

    def __repr__(self):
        d = self._d if self._d is not None else "?"
        return f"[{self.n},{self.k},{d}]_{self.field.q}"

    # -- encoding -------------------------------------------------------------

    def encode(self, msg) -> tuple:
        if len(msg) != self.k:
            raise LengthMismatch(f"message length {len(msg)} != k={self.k}")
        msg = tuple(self.field.validate(int(x)) for x in msg)
        return linalg.vec_mat(self.field, msg, self.generator)

    def message_of(self, codeword) -> tuple:
        if self._rinv is None:
            self._rinv = linalg.right_inverse(self.field, self.generator)
        if len(codeword) != self.n:
            raise LengthMismatch(f"word length {len(codeword)} != n={self.n}")
        return linalg.vec_mat(self.field, tuple(codeword), self._rinv)

    def contains(self, word) -> bool:
        return self.encode(self.message_of(word)) == tuple(word)

    # -- distance and enumeration ----------------------------------------------

    def distance(self) -> int:
        if self._d is None:
            self._d = min_distance(self)
        return self._d

    def declared_distance(self):
        return self._d

    def num_codewords(self) -> int:
        return self.field.q**self.k

    def codewords(self) -> tuple:
        if self._codewords is None:
            if self.num_codewords() > ENUMERATION_CAP:
                raise TooLargeToEnumerate(f"{self.num_codewords()} codewords exceeds cap")
            f, gen = self.field, self.generator
            n, q = self.n, f.q
            # per-row scalar multiples, so the odometer walk costs O(n) per word
            scaled = [
                [tuple(f.mul(v, gij) for gij in row) for v in range(q)] for row in gen
            ]
            out = []
            msg = [0] * self.k
            word = [0] * n
            out.append(tuple(word))
            for _ in range(self.num_codewords() - 1):
                i = 0
                while True:
                    old = msg[i]
                    if old + 1 == q:
                        msg[i] = 0
                        drop, keep = scaled[i][old], scaled[i][0]
                        for j in range(n):
                            word[j] = f.add(f.sub(word[j], drop[j]), keep[j])
                        i += 1
                    else:
                        msg[i] = old + 1
                        drop, keep = scaled[i][old], scaled[i][old + 1]
                        for j in range(n):
                            word[j] = f.add(f.sub(word[j], drop[j]), keep[j])
                        break
                out.append(tuple(word))
            self._codewords = tuple(out)
        return self._codewords

    def codeword_set(self) -> frozenset:
        if self._codeword_set is None:
            self._codeword_set = frozenset(self.codewords())
        return self._codeword_set

    # -- decoding ----------------------------------------------------------------

    def attach(self, decoder) -> "LinearCode":
        self.decoder = decoder
        return self

    def decode(self, word, erasures=()) -> DecodeOutcome:
        return ee_decode(self, word, erasures)


def ee_decode(code: LinearCode, word, erasures=()) -> DecodeOutcome:
    """Run the code's error-and-erasure decoder and enforce the distance bound."""
    if code.decoder is None:
        raise NoDecoder(f"{code!r} has no attached decoder")
    if len(word) != code.n:
        raise LengthMismatch(f"word length {len(word)} != n={code.n}")
    erasures = check_erasures(erasures, code.n)
    out = code.decoder(tuple(word), erasures)
    if out.ok:
        w = out.weight
        if 2 * w + len(erasures) >= code.distance():
            raise InvalidParams(
                f"decoder for {code!r} returned a codeword outside the distance bound"
            )
    return out


def min_distance(code: LinearCode, cap: int = ENUMERATION_CAP) -> int:
    """Exact minimum distance by exhaustive enumeration of all codewords."""
    if code.num_codewords() > cap:
        raise TooLargeToEnumerate(
            f"{code.num_codewords()} codewords exceeds enumeration cap {cap}"
        )
    best = code.n + 1
    for word in code.codewords():
        w = wt(word)
        if 0 < w < best:
            best = w
    if best > code.n:
        raise InvalidParams("code has no nonzero codeword")
    return best


# ---------------------------------------------------------------------------
# Reed-Solomon codes


class ReedSolomonDecoder:
    """Error-and-erasure decoding of an evaluation-style RS code.

    Erased coordinates are dropped, the punctured word is decoded with the
    Euclidean (Gao) algorithm, and the message polynomial is re-evaluated on
    all points.  The output is verified against 2*wt_E + |E| < d.
    """

    def __init__(self, code: LinearCode):
        self.code = code
        self._basis = {}

    def _interpolation_data(self, keep):
        cached = self._basis.get(keep)
        if cached is not None:
            return cached
        f = self.code.field
        pts = [self.code.eval_points[i] for i in keep]
        g0 = [1]
        for x in pts:
            g0 = galois.poly_mul(f, g0, [f.neg(x), 1])
        basis = []
        for i, xi in enumerate(pts):
            num = [1]
            denom = 1
            for j, xj in enumerate(pts):
                if i == j:
                    continue
                num = galois.poly_mul(f, num, [f.neg(xj), 1])
                denom = f.mul(denom, f.sub(xi, xj))
            basis.append(galois.poly_scale(f, f.inv(denom), num))
        if len(self._basis) > 4096:
            self._basis.clear()
        self._basis[keep] = (g0, basis)
        return g0, basis

    def __call__(self, word, erasures) -> DecodeOutcome:
        code = self.code
        f = code.field
        n, k, d = code.n, code.k, code.distance()
        if len(erasures) >= d:
            return FAILURE
        keep = tuple(i for i in range(n) if i not in erasures)
        g0, basis = self._interpolation_data(keep)
        g1 = []
        for i, pos in enumerate(keep):
            y = word[pos]
            if y:
                g1 = galois.poly_add(f, g1, galois.poly_scale(f, y, basis[i]))
        npts = len(keep)
        if npts == k:
            fpoly = g1
        else:
            fpoly = _gao_reduce(f, g0, g1, npts, k)
            if fpoly is None:
                return FAILURE
        if len(fpoly) > k:
            return FAILURE
        codeword = tuple(galois.poly_eval(f, fpoly, x) for x in code.eval_points)
        error = tuple(f.sub(a, b) for a, b in zip(word, codeword))
        w = sum(1 for i in keep if error[i] != 0)
        if 2 * w + len(erasures) < d:
            return DecodeOutcome(codeword, error, w)
        return FAILURE


def _gao_reduce(f, g0, g1, npts, k):
    """Partial extended Euclid; returns the message polynomial or None."""
    r0, r1 = list(g0), list(g1)
    v0, v1 = [], [1]
    while r1 and 2 * (len(r1) - 1) >= npts + k:
        q, rem = galois.poly_divmod(f, r0, r1)
        r0, r1 = r1, rem
        v0, v1 = v1, galois.poly_sub(f, v0, galois.poly_mul(f, q, v1))
    if not v1:
        return None
    fpoly, rem = galois.poly_divmod(f, r1, v1)
    if rem:
        return None
    return fpoly


def rs_code(field, n: int, k: int) -> LinearCode:
    """An [n, k, n-k+1] Reed-Solomon code with an algebraic EE decoder.

    Evaluation points are the first n field elements in integer encoding
    order, so serialized specs are portable.
    """
    if not 1 <= k <= n or n > field.q:
        raise InvalidParams(f"need 1 <= k <= n <= q, got n={n}, k={k}, q={field.q}")
    points = tuple(range(n))
    gen = []
    for i in range(k):
        gen.append(tuple(field.pow(x, i) for x in points))
    code = LinearCode(field, gen, d=n - k + 1, kind="rs", eval_points=points)
    return code.attach(ReedSolomonDecoder(code))


def generic_code(field, generator, d=None, attach_decoder=True) -> LinearCode:
    """A generic linear code; small codes get an exhaustive EE decoder."""
    code = LinearCode(field, generator, d=d, kind="generic")
    if d is None and code.num_codewords() <= ENUMERATION_CAP:
        code.distance()
    if attach_decoder and code.num_codewords() <= ENUMERATION_CAP:
        from .oracle import ExhaustiveDecoder

        code.attach(ExhaustiveDecoder(code))
    return code


def repetition_code(field, n: int) -> LinearCode:
    return generic_code(field, [[1] * n], d=n)
