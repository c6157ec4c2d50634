"""Channel experiments: encode random words, corrupt, decode, classify.

Every trial is classified against the construction's correction guarantee;
a trial that sits inside the guarantee region and still fails flips the
VIOLATION flag, which downstream tooling treats as a hard error.  Trials
use independent substreams (seed + trial index), so runs are reproducible
and may execute concurrently; records are emitted in trial order.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dfield

from .channel import ChannelModel, apply_channel, trial_rng
from .concat import ConcatCode, DecodeOptions, cc_decode, correctable_cc
from .errors import ConfigError, DecodeFailure
from .gcc import GccSpec, correctable_gcc, gcc_decode_improved, gcc_encode
from .mpc import MpcSpec, mpc_decode

THREADS_ENV = "GCC_CODEC_THREADS"


@dataclass
class ExperimentConfig:
    spec: object
    channel: ChannelModel
    trials: int
    options: DecodeOptions = dfield(default_factory=DecodeOptions)
    output: str | None = None
    threads: int | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise ConfigError("trial count must be >= 1")


@dataclass
class ExperimentStats:
    trials: int = 0
    successes: int = 0
    miscorrections: int = 0
    failures: int = 0
    weight_histogram: dict = dfield(default_factory=dict)
    in_region: int = 0
    in_region_failures: int = 0
    inner_total: int = 0
    inner_max: int = 0
    outer_total: int = 0
    outer_max: int = 0
    trials_total: int = 0
    trials_max: int = 0
    violation: bool = False

    @property
    def word_errors(self) -> int:
        return self.miscorrections + self.failures

    def to_json(self) -> dict:
        out = {
            "trials": self.trials,
            "successes": self.successes,
            "miscorrections": self.miscorrections,
            "failures": self.failures,
            "word_errors": self.word_errors,
            "weight_histogram": {str(k): v for k, v in sorted(self.weight_histogram.items())},
            "in_region": self.in_region,
            "in_region_failures": self.in_region_failures,
            "inner_mean": self.inner_total / self.trials if self.trials else 0.0,
            "inner_max": self.inner_max,
            "outer_mean": self.outer_total / self.trials if self.trials else 0.0,
            "outer_max": self.outer_max,
            "gmd_trials_mean": self.trials_total / self.trials if self.trials else 0.0,
            "gmd_trials_max": self.trials_max,
            "violation": self.violation,
        }
        return out


def _spec_parts(spec):
    """(encode, decode, in_region, outer_codes, allows_erasures)."""
    if isinstance(spec, ConcatCode):
        outers = [spec.outer] * spec.k

        def encode(msgs):
            from .concat import cc_encode

            return cc_encode(spec, msgs)

        def decode(received, pattern, options):
            _, report = cc_decode(spec, received, pattern, options)
            return report

        def region(errors, pattern):
            return correctable_cc(errors, pattern, spec)

        return encode, decode, region, outers, True
    if isinstance(spec, (GccSpec, MpcSpec)):
        gspec = spec.gcc if isinstance(spec, MpcSpec) else spec
        outers = list(gspec.outers)

        def encode(msgs):
            return gcc_encode(gspec, msgs)

        def decode(received, pattern, options):
            if any(pattern):
                raise ConfigError("multistage decoding here is errors-only")
            if isinstance(spec, MpcSpec):
                return mpc_decode(spec, received, options)
            return gcc_decode_improved(gspec, received, options)

        def region(errors, pattern):
            return correctable_gcc(errors, gspec)

        return encode, decode, region, outers, False
    raise ConfigError(f"cannot simulate over {type(spec).__name__}")


def run_trial(config: ExperimentConfig, trial: int) -> dict:
    encode, decode, region, outers, _ = _spec_parts(config.spec)
    rng = trial_rng(config.channel, trial)
    msgs = [
        tuple(int(rng.integers(0, a.field.q)) for _ in range(a.k)) for a in outers
    ]
    word = encode(msgs)
    field = outers[0].field if not isinstance(config.spec, ConcatCode) else config.spec.inner.field
    received, pattern, errors = apply_channel(word, field, config.channel, rng=rng)
    weight = sum(1 for row in errors for x in row if x != 0)
    erased = sum(len(x) for x in pattern)
    inside = region(errors, pattern)
    record = {
        "trial": trial,
        "weight": weight,
        "erased": erased,
        "in_region": inside,
    }
    try:
        report = decode(received, pattern, config.options)
    except DecodeFailure as exc:
        record["outcome"] = "failure"
        if exc.report is not None:
            record["inner"] = exc.report.total_inner
            record["outer"] = exc.report.total_outer
            record["gmd_trials"] = max(exc.report.gmd_trials, default=0)
        return record
    record["outcome"] = "success" if report.codeword == word else "miscorrection"
    record["inner"] = report.total_inner
    record["outer"] = report.total_outer
    record["gmd_trials"] = max(report.gmd_trials, default=0)
    return record


def _workers(config: ExperimentConfig) -> int:
    if config.threads is not None:
        n = config.threads
    else:
        n = int(os.environ.get(THREADS_ENV, "1"))
    if n == 0:
        n = os.cpu_count() or 1
    return max(1, n)


def run_experiment(config: ExperimentConfig) -> ExperimentStats:
    if isinstance(config.spec, (GccSpec, MpcSpec)) and config.channel.erasure_rate > 0:
        raise ConfigError("erasure channels require the concatenated decoder")
    workers = _workers(config)
    indices = range(config.trials)
    if workers == 1:
        records = [run_trial(config, t) for t in indices]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda t: run_trial(config, t), indices))

    stats = ExperimentStats()
    for rec in records:
        stats.trials += 1
        stats.weight_histogram[rec["weight"]] = stats.weight_histogram.get(rec["weight"], 0) + 1
        if rec["in_region"]:
            stats.in_region += 1
        if rec["outcome"] == "success":
            stats.successes += 1
        elif rec["outcome"] == "miscorrection":
            stats.miscorrections += 1
        else:
            stats.failures += 1
        if rec["in_region"] and rec["outcome"] != "success":
            stats.in_region_failures += 1
            stats.violation = True
        stats.inner_total += rec.get("inner", 0)
        stats.inner_max = max(stats.inner_max, rec.get("inner", 0))
        stats.outer_total += rec.get("outer", 0)
        stats.outer_max = max(stats.outer_max, rec.get("outer", 0))
        stats.trials_total += rec.get("gmd_trials", 0)
        stats.trials_max = max(stats.trials_max, rec.get("gmd_trials", 0))

    if config.output:
        with open(config.output, "w") as fh:
            for rec in records:
                fh.write(json.dumps(rec) + "\n")
            fh.write(json.dumps({"summary": stats.to_json()}) + "\n")
    return stats
