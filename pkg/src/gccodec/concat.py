"""Concatenated codes: outer code over GF(q^s), inner code over GF(q).

Encoding expands each outer-codeword symbol into s inner-field symbols and
re-encodes row-wise with the inner code.  Decoding runs the inner decoder on
every row, turns the apparent error-and-erasure load of each row into a
reliability weight, and recovers each of the k message columns with the
multi-trial driver from the gmd module.

Row weights follow the error-and-erasure scheme: with per-row erasure set X
and apparent error e, the raw score is 2*wt_X(e) + |X| on success and the
inner distance on failure, and the reliability weight is the distance minus
the score (zero exactly on failures).  With empty X this reduces to the
errors-only weighting.  The no-erasure outer trial is always skipped: any
column decodable without erasures is also decodable with the zero-weight
rows erased, because those rows are already counted as unreliable.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gmd, linalg
from .block_codes import LinearCode, check_erasures, ee_decode, wt
from .errors import DecodeFailure, InvalidParams, LengthMismatch
from .galois import TowerView
from .oracle import oracle_radius
from .report import DecodeReport


@dataclass
class DecodeOptions:
    mode: str = gmd.MODE_UPTO
    carry_over: bool = False
    radius: int | None = None


class ConcatCode:
    """Outer code of length M over GF(q^s), inner [N, K, d_b] code over GF(q).

    The inner dimension K must equal k*s; the construction carries k outer
    messages and has length M*N with designed distance d_a*d_b.
    """

    def __init__(self, outer: LinearCode, inner: LinearCode, tower: TowerView | None = None):
        if tower is None:
            tower = TowerView(outer.field, inner.field)
        if tower.big != outer.field or tower.base != inner.field:
            raise InvalidParams("tower view does not match the outer/inner fields")
        if inner.k % tower.s != 0:
            raise InvalidParams(
                f"inner dimension {inner.k} is not a multiple of the expansion degree {tower.s}"
            )
        self.outer = outer
        self.inner = inner
        self.tower = tower
        self.k = inner.k // tower.s
        self.m = outer.n
        self.inner_rinv = linalg.right_inverse(inner.field, inner.generator)

    @property
    def length(self) -> int:
        return self.m * self.inner.n

    def designed_distance(self) -> int:
        return self.outer.distance() * self.inner.distance()

    def __repr__(self):
        return f"ConcatCode({self.outer!r} over {self.inner!r}, k={self.k})"


def cc_encode(cc: ConcatCode, msgs) -> tuple:
    """Encode k outer messages into the M x N codeword matrix."""
    if len(msgs) != cc.k:
        raise LengthMismatch(f"expected {cc.k} outer messages, got {len(msgs)}")
    words = [cc.outer.encode(m) for m in msgs]
    return encode_columns(cc, words)


def encode_columns(cc: ConcatCode, outer_words) -> tuple:
    """Codeword matrix from k outer codewords."""
    f = cc.inner.field
    rows = []
    for j in range(cc.m):
        base_row = []
        for word in outer_words:
            base_row.extend(cc.tower.to_base_vector(word[j]))
        rows.append(linalg.vec_mat(f, tuple(base_row), cc.inner.generator))
    return tuple(rows)


@dataclass
class RowDecodeResult:
    """Per-row inner decoding results and the derived reliability weights."""

    estimates: list
    residuals: list
    weights: list
    failed: list
    apparents: list
    denominator: int
    invocations: int


def decode_rows(code: LinearCode, rows, erasure_sets, radius: int | None = None) -> RowDecodeResult:
    """Decode each row with the inner code's EE decoder.

    radius, when given, must exceed the half-distance radius; rows the
    regular decoder rejects are retried with the unique-in-ball reference
    decoder, so the result never loses a row the plain decoder handles.
    Rows that decode with apparent weight above the half-distance radius get
    reliability weight zero without being marked as failures.
    """
    d = code.distance()
    t = (d - 1) // 2
    if radius is not None:
        if radius <= t:
            raise InvalidParams(f"extended radius {radius} must exceed {t}")
        if any(erasure_sets):
            raise InvalidParams("extended-radius decoding supports errors-only input")
    estimates, residuals, weights, failed, apparents = [], [], [], [], []
    calls = 0
    for row, erasures in zip(rows, erasure_sets):
        out = ee_decode(code, row, erasures)
        calls += 1
        if not out.ok and radius is not None:
            out = oracle_radius(code, row, radius)
            calls += 1
        if out.ok:
            apparent = wt(out.error)
            score = 2 * out.weight + len(erasures)
            if radius is not None:
                score = 2 * apparent if 2 * apparent < d else d
            estimates.append(out.codeword)
            residuals.append(out.error)
            weights.append(d - score)
            failed.append(False)
            apparents.append(apparent)
        else:
            estimates.append(tuple(row))
            residuals.append((0,) * code.n)
            weights.append(0)
            failed.append(True)
            apparents.append(None)
    return RowDecodeResult(estimates, residuals, weights, failed, apparents, d, calls)


def row_decode(cc: ConcatCode, received, pattern=None, radius: int | None = None) -> RowDecodeResult:
    rows = _check_matrix(cc, received)
    erasure_sets = check_pattern(pattern, cc.m, cc.inner.n)
    return decode_rows(cc.inner, rows, erasure_sets, radius)


def check_pattern(pattern, m, n):
    if pattern is None:
        return [frozenset()] * m
    if len(pattern) != m:
        raise LengthMismatch(f"erasure pattern must have {m} rows")
    return [check_erasures(x, n) for x in pattern]


def _check_matrix(cc: ConcatCode, received):
    if len(received) != cc.m:
        raise LengthMismatch(f"expected {cc.m} rows, got {len(received)}")
    rows = []
    for row in received:
        if len(row) != cc.inner.n:
            raise LengthMismatch(f"rows must have length {cc.inner.n}")
        rows.append(tuple(cc.inner.field.validate(int(x)) for x in row))
    return rows


def fold_message_columns(cc: ConcatCode, rd: RowDecodeResult):
    """Map row estimates back to M x k outer-symbol estimates (failures to 0)."""
    f = cc.inner.field
    s = cc.tower.s
    columns = [[0] * cc.m for _ in range(cc.k)]
    for j in range(cc.m):
        if rd.failed[j]:
            continue
        base = linalg.vec_mat(f, rd.estimates[j], cc.inner_rinv)
        for i in range(cc.k):
            columns[i][j] = cc.tower.from_base_vector(base[i * s : (i + 1) * s])
    return [tuple(col) for col in columns]


def trial_chain(rd: RowDecodeResult) -> gmd.ErasureChain:
    rel = gmd.ReliabilityVector(tuple(rd.weights), rd.denominator)
    return gmd.chain_with_failure_class(rel)


def extended_trial_chain(rd: RowDecodeResult, radius: int) -> gmd.ErasureChain:
    """Chain that peels rows by apparent weight radius, radius-1, ..., t+1
    before the zero-weight class proper, then continues by weight classes."""
    d = rd.denominator
    t = (d - 1) // 2
    m = len(rd.weights)
    cur = frozenset(j for j in range(m) if rd.failed[j])
    sets = [frozenset(), cur]
    for v in range(radius, t, -1):
        cur = cur | frozenset(
            j for j in range(m) if not rd.failed[j] and rd.apparents[j] == v
        )
        sets.append(cur)
    for a in sorted(set(w for w in rd.weights if w > 0)):
        sets.append(frozenset(j for j in range(m) if rd.weights[j] <= a))
    return gmd.ErasureChain(tuple(sets))


def trial_bound_cc(cc: ConcatCode, erasure_mode: bool = False) -> int:
    d_a, d_b = cc.outer.distance(), cc.inner.distance()
    if erasure_mode:
        return min(d_b, (d_a + 1) // 2)
    return (min(d_a, d_b) + 1) // 2


def cc_decode(cc: ConcatCode, received, pattern=None, options: DecodeOptions | None = None):
    """Decode a received M x N matrix; returns (outer codewords, report).

    Raises DecodeFailure (with the report attached) when any message column
    exhausts its trials; remaining columns are still attempted so the report
    is complete.
    """
    options = options or DecodeOptions()
    rows = _check_matrix(cc, received)
    erasure_sets = check_pattern(pattern, cc.m, cc.inner.n)
    erasure_mode = any(erasure_sets)

    rd = decode_rows(cc.inner, rows, erasure_sets, options.radius)
    rel = gmd.ReliabilityVector(tuple(rd.weights), rd.denominator)
    if options.radius is None:
        chain = gmd.chain_with_failure_class(rel)
    else:
        chain = extended_trial_chain(rd, options.radius)
    columns_in = fold_message_columns(cc, rd)

    report = DecodeReport(inner_invocations=[rd.invocations])
    bound = trial_bound_cc(cc, erasure_mode)
    start = 0
    for i, column in enumerate(columns_in):
        g = gmd.gmd_decode(
            cc.outer,
            column,
            rel,
            mode=options.mode,
            skip_zero_trial=True,
            chain=chain,
            start=start,
        )
        report.outer_invocations.append(g.trials)
        report.gmd_trials.append(g.trials)
        if options.radius is None:
            assert g.trials <= bound, "trial count exceeded the class bound"
        if g.ok:
            report.columns.append(g.codeword)
            report.messages.append(cc.outer.message_of(g.codeword))
            if options.carry_over:
                start = g.accepted_index
        else:
            report.columns.append(None)
            report.messages.append(None)
            report.failed_levels.append(i + 1)
            start = 0
    if not report.failed_levels:
        report.codeword = encode_columns(cc, report.columns)
        return report.columns, report
    raise DecodeFailure(
        f"columns {report.failed_levels} exhausted all trials", report=report
    )


def correctable_cc(error_matrix, pattern, cc: ConcatCode) -> bool:
    """Guarantee predicate: sum of capped per-row loads below d_a*d_b.

    Per row the load is min(2*wt_X(E_j) + |X_j|, 2*d_b); any pattern whose
    total is below d_a*d_b is provably corrected.
    """
    d_a, d_b = cc.outer.distance(), cc.inner.distance()
    erasure_sets = check_pattern(pattern, len(error_matrix), cc.inner.n)
    total = 0
    for row, x in zip(error_matrix, erasure_sets):
        load = 2 * sum(1 for i, v in enumerate(row) if v != 0 and i not in x) + len(x)
        total += min(load, 2 * d_b)
    return total < d_a * d_b
