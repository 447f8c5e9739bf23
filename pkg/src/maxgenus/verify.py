"""Seeded multi-method verification sweeps over m.

A trial draws a random g of weight 3m, monic in z^m, and decides whether
(x, y)^ell + (g) contains a nonzero polynomial of degree <= ell - 1 with one
or more of three independent methods:

* ``phi``      -- invertibility of the blocks of phi_g (fast path),
* ``direct``   -- weight-by-weight linear algebra on the ideal itself,
* ``groebner`` -- truncated Groebner basis and its lead monomials.

One good g is enough to settle a given m over the chosen field: goodness
is an open condition on the coefficients.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import multiprocessing
import time
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .basis import monomials_of_weight
from .direct import low_degree_member_verdict
from .fields import QQ, GF
from .groebner import GRLEX, ideal_basis, initial_ideal_verdict, normal_form
from .phi import phi_iso_verdict
from .poly import XYZ, ParamSet, Poly, PolyRing

log = logging.getLogger(__name__)

METHODS = ("phi", "direct", "groebner")
DEFAULT_PRIME = 32003
DIRECT_CROSS_CHECK_MAX_M = 5


class MethodDisagreement(RuntimeError):
    """Two methods returned different verdicts for the same g."""

    def __init__(self, record: dict):
        super().__init__(f"methods disagree for m={record['m']} trial={record['trial']}: "
                         f"{record['verdicts']}")
        self.record = record


@dataclass
class VerifyConfig:
    m_min: int = 2
    m_max: int = 12
    prime: Optional[int] = DEFAULT_PRIME   # None means rationals
    seed: int = 0
    trials: int = 3
    methods: Tuple[str, ...] = ("phi",)
    cross_check: bool = True
    jobs: int = 1
    timeout: Optional[float] = None

    def __post_init__(self):
        if not self.methods:
            raise ValueError("select at least one method")
        bad = set(self.methods) - set(METHODS)
        if bad:
            raise ValueError(f"unknown methods {sorted(bad)}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.m_min < 2 or self.m_max < self.m_min:
            raise ValueError(f"bad m range {self.m_min}..{self.m_max}")
        self.methods = tuple(m for m in METHODS if m in self.methods)

    @property
    def field(self):
        return QQ if self.prime is None else GF(self.prime)

    def methods_for(self, m: int) -> Tuple[str, ...]:
        methods = set(self.methods)
        if self.cross_check and "phi" in methods and m <= DIRECT_CROSS_CHECK_MAX_M:
            methods.add("direct")
        return tuple(x for x in METHODS if x in methods)


def g_support(m: int) -> List[tuple]:
    """Monomials allowed in g besides z^m: weight 3m, c < m, a + b <= 3(m - 1)."""
    return [mono for mono in monomials_of_weight(3 * m)
            if mono[2] < m and mono[0] + mono[1] <= 3 * (m - 1)]


def random_g(m: int, field, seed) -> Poly:
    """Random WT-homogeneous g of weight 3m, monic in z^m, with x^(3(m-1)) z present.

    ``seed`` may be an int, a sequence of ints, or a numpy Generator.
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    ring = PolyRing(XYZ, field)
    lead = (3 * (m - 1), 0, 1)
    terms = [((0, 0, m), field.one)]
    for mono in g_support(m):
        c = field.random_element(rng)
        while mono == lead and field.is_zero(c):
            c = field.random_element(rng)
        terms.append((mono, c))
    return ring.from_terms(terms)


def trial_seed(seed: int, m: int, trial: int) -> List[int]:
    return [seed, m, trial]


def run_trial(g: Poly, m: int, methods: Sequence[str]) -> dict:
    """Run the selected methods on one g; returns verdicts (True = good) and diagnostics."""
    params = ParamSet(m)
    out: Dict[str, object] = {"verdicts": {}}
    if "phi" in methods:
        v = phi_iso_verdict(g, params)
        out["verdicts"]["phi"] = v.good
        out["singular_weights"] = v.singular_weights
        out["block_dims"] = {str(n): k for n, k in v.block_dims.items()}
    if "direct" in methods:
        v = low_degree_member_verdict(g, params)
        out["verdicts"]["direct"] = not v.bad
        if "singular_weights" not in out:
            out["singular_weights"] = [n for n, (r, rh) in v.ranks.items() if r > rh]
        if v.bad:
            out["witness_low_degree_member"] = str(v.witness)
            out["witness_weight"] = v.witness_weight
            # certify the witness: it must reduce to 0 and have low degree
            gb = ideal_basis(g, params, GRLEX, weight_cap=max(v.witness_weight, 3 * (params.ell - 1)))
            out["witness_certified"] = (v.witness.degree() <= params.ell - 1
                                        and not normal_form(v.witness, gb.generators, GRLEX).terms)
    if "groebner" in methods:
        v = initial_ideal_verdict(g, params, GRLEX)
        out["verdicts"]["groebner"] = v.good
        out["low_degree_leads"] = [list(mono) for mono in v.low_degree_leads]
    return out


def _task(args):
    m, trial, seed, prime, methods = args
    field = QQ if prime is None else GF(prime)
    g = random_g(m, field, trial_seed(seed, m, trial))
    start = time.perf_counter()
    result = run_trial(g, m, methods)
    elapsed = (time.perf_counter() - start) * 1000
    record = {"m": m, "trial": trial, "seed": seed, "prime": prime,
              "field": repr(field), "g": str(g), "methods": list(methods)}
    record.update(result)
    record["elapsed_ms"] = round(elapsed, 3)
    verdicts = set(record["verdicts"].values())
    record["status"] = "good" if verdicts == {True} else ("bad" if verdicts == {False} else "disagree")
    return record


def _timeout_record(task) -> dict:
    m, trial, seed, prime, methods = task
    field = QQ if prime is None else GF(prime)
    g = random_g(m, field, trial_seed(seed, m, trial))
    return {"m": m, "trial": trial, "seed": seed, "prime": prime, "field": repr(field),
            "g": str(g), "methods": list(methods), "verdicts": {}, "status": "timeout",
            "elapsed_ms": None}


def run_verify(config: VerifyConfig) -> dict:
    """Run the sweep and return the report; raises :class:`MethodDisagreement`."""
    tasks = [(m, trial, config.seed, config.prime, config.methods_for(m))
             for m in range(config.m_min, config.m_max + 1)
             for trial in range(config.trials)]
    started = time.perf_counter()
    records = []
    if config.jobs > 1 or config.timeout is not None:
        pool = multiprocessing.Pool(max(config.jobs, 1))
        try:
            pending = [(t, pool.apply_async(_task, (t,))) for t in tasks]
            for t, res in pending:
                try:
                    records.append(res.get(timeout=config.timeout))
                except multiprocessing.TimeoutError:
                    log.warning("trial m=%d #%d timed out", t[0], t[1])
                    records.append(_timeout_record(t))
        finally:
            pool.terminate()
            pool.join()
    else:
        for t in tasks:
            rec = _task(t)
            log.info("m=%d trial=%d %s (%.1f ms)", rec["m"], rec["trial"], rec["status"],
                     rec["elapsed_ms"])
            records.append(rec)
    records.sort(key=lambda r: (r["m"], r["trial"]))
    for rec in records:
        if rec["status"] == "disagree" or rec.get("witness_certified") is False:
            raise MethodDisagreement(rec)
    verified = sorted({r["m"] for r in records if r["status"] == "good"})
    all_m = range(config.m_min, config.m_max + 1)
    report = {
        "config": _config_dict(config),
        "records": records,
        "summary": {"verified_m": verified,
                    "inconclusive_m": [m for m in all_m if m not in verified]},
        "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
    }
    return report


def _config_dict(config: VerifyConfig) -> dict:
    d = asdict(config)
    d["methods"] = list(config.methods)
    d["field"] = repr(config.field)
    return d


def exit_code(report: dict) -> int:
    return 0 if not report["summary"]["inconclusive_m"] else 1


def strip_timings(report: dict) -> dict:
    """Copy of the report without timing fields (for determinism comparisons)."""
    out = json.loads(json.dumps(report))
    out.pop("elapsed_ms", None)
    out["config"].pop("jobs", None)
    for rec in out["records"]:
        rec.pop("elapsed_ms", None)
    return out


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def report_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["m", "trial", "seed", "prime", "status", "phi", "direct", "groebner",
                     "singular_weights", "g", "elapsed_ms"])
    for r in report["records"]:
        v = r["verdicts"]
        writer.writerow([r["m"], r["trial"], r["seed"], r["prime"], r["status"],
                         v.get("phi", ""), v.get("direct", ""), v.get("groebner", ""),
                         ";".join(map(str, r.get("singular_weights", []))), r["g"],
                         r["elapsed_ms"]])
    return buf.getvalue()


REPORT_SCHEMA = {
    "type": "object",
    "required": ["config", "records", "summary"],
    "properties": {
        "config": {"type": "object"},
        "records": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["m", "trial", "seed", "prime", "g", "verdicts", "elapsed_ms"],
                "properties": {
                    "m": {"type": "integer", "minimum": 2},
                    "trial": {"type": "integer", "minimum": 0},
                    "seed": {"type": "integer"},
                    "prime": {"type": ["integer", "null"]},
                    "g": {"type": "string"},
                    "verdicts": {"type": "object",
                                 "additionalProperties": {"type": "boolean"}},
                    "singular_weights": {"type": "array", "items": {"type": "integer"}},
                    "block_dims": {"type": "object",
                                   "additionalProperties": {"type": "integer"}},
                    "witness_low_degree_member": {"type": "string"},
                    "elapsed_ms": {"type": ["number", "null"]},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["verified_m", "inconclusive_m"],
            "properties": {
                "verified_m": {"type": "array", "items": {"type": "integer"}},
                "inconclusive_m": {"type": "array", "items": {"type": "integer"}},
            },
        },
    },
}
