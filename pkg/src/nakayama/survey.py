"""Exhaustive surveys: run the battery over every algebra with ``n`` vertices.

Records go to a JSONL file, one line per algebra in enumeration order.  The
payload is deterministic, so two runs with any number of workers produce the
same bytes.  Wall time is only written when asked for, under its own key, and
never enters the canonical hash.
"""
from __future__ import annotations

import hashlib
import json
import multiprocessing
import os
import time
from dataclasses import dataclass
from typing import Iterator

from .algebra import NakayamaAlgebra, enumerate_algebras, parse_algebra
from .coxeter import coxeter
from .errors import IoFailure
from .obstructions import battery, certificate_from_json

SCHEMA_VERSION = 1
JOBS_ENV = "NAKAYAMA_JOBS"


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def canonical_line(record: dict) -> str:
    payload = {k: v for k, v in record.items() if k != "wall_time"}
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def record_for(args) -> dict:
    index, algebra, max_steps, timing = args
    t0 = time.perf_counter()
    verdict = battery(algebra, max_steps=max_steps)
    rec = {
        "v": SCHEMA_VERSION,
        "index": index,
        "algebra": algebra.encode(),
        "kupisch": list(algebra.kupisch),
        "coxeter": list(coxeter(algebra).coxeter_polynomial),
        **verdict.to_json(),
    }
    if timing:
        rec["wall_time"] = round(time.perf_counter() - t0, 4)
    return rec


def _dump(record: dict) -> str:
    if "wall_time" not in record:
        return canonical_line(record)
    body = canonical_line(record)
    return body[:-1] + f',"wall_time":{json.dumps(record["wall_time"])}' + "}"


def read_records(path: str) -> list[dict]:
    """Complete records already in ``path``; a torn last line is ignored."""
    if not os.path.exists(path):
        return []
    out = []
    try:
        with open(path) as fh:
            lines = fh.read().split("\n")
    except OSError as exc:
        raise IoFailure(f"cannot read {path}: {exc}") from None
    for k, line in enumerate(lines):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError:
            if k == len(lines) - 1:
                break
            raise IoFailure(f"{path}:{k + 1}: not a JSON record") from None
        if rec.get("v") != SCHEMA_VERSION or rec.get("index") != len(out):
            raise IoFailure(f"{path}:{k + 1}: record out of sequence or wrong schema")
        out.append(rec)
    return out


@dataclass
class SurveySummary:
    n: int
    records: int
    resumed: int
    flagged: list
    digest: str


def survey_digest(records) -> str:
    h = hashlib.sha256()
    for rec in records:
        h.update(canonical_line(rec).encode())
        h.update(b"\n")
    return h.hexdigest()


def run_survey(n: int, out: str, jobs: int | None = None, max_steps: int = 200,
               timing: bool = False, resume: bool = True) -> SurveySummary:
    if n < 2:
        raise ValueError("survey needs n >= 2")
    jobs = default_jobs() if jobs is None else max(1, jobs)
    done = read_records(out) if resume else []
    algebras = list(enumerate_algebras(n))
    for rec, alg in zip(done, algebras):
        if rec["algebra"] != alg.encode():
            raise IoFailure(f"{out}: existing record {rec['index']} is for another algebra")
    todo = [(k, a, max_steps, timing) for k, a in enumerate(algebras) if k >= len(done)]
    try:
        # rewrite the kept prefix so a torn tail line is dropped
        with open(out, "w") as fh:
            for rec in done:
                fh.write(_dump(rec) + "\n")
            fh.flush()
            for rec in _records(todo, jobs):
                fh.write(_dump(rec) + "\n")
                fh.flush()
                done.append(rec)
    except OSError as exc:
        raise IoFailure(f"cannot write {out}: {exc}") from None
    flagged = [r["algebra"] for r in done if r["verdict"] != "inconclusive"]
    return SurveySummary(n, len(done), len(done) - len(todo), flagged, survey_digest(done))


def _records(todo, jobs) -> Iterator[dict]:
    if jobs == 1 or len(todo) < 2:
        yield from map(record_for, todo)
        return
    with multiprocessing.Pool(jobs) as pool:
        # imap keeps enumeration order, so a single writer suffices
        yield from pool.imap(record_for, todo, chunksize=4)


def replay_record(record: dict) -> bool:
    """Re-verify every certificate stored in a record."""
    algebra: NakayamaAlgebra = parse_algebra(record["algebra"])
    return all(certificate_from_json(c).verify(algebra) for c in record["certificates"])
