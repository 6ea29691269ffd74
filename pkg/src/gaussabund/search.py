"""Checkpointed exhaustive searches over canonical Gaussian integers.

A search walks the norm range in fixed blocks. Each finished block is
appended to a JSON-lines state file as its hit records followed by a
block marker, so an interrupted run resumes at the first unfinished block
and ends with the same record stream as an uninterrupted one.

State file layout::

    {"type": "header", "fingerprint": ..., "task": {...}, "version": ...}
    {"type": "record", ...}            # zero or more per block
    {"type": "block", "lo": ..., "hi": ..., ...}
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from typing import Iterator, Literal, Optional

from gaussabund import __version__, _core
from gaussabund.divfunc import abundancy, abundancy_from_factorization
from gaussabund.errors import CheckpointError, DomainError
from gaussabund.gfactor import factor
from gaussabund.gint import GaussianInt, GaussianRational, are_associates, parse_gaussian

__all__ = [
    "BLOCK_SIZE",
    "SearchTask",
    "SearchResult",
    "enumerate_canonical",
    "run_search",
    "search_tau_perfect",
    "search_norm_perfect",
    "search_friendly",
    "verify_record",
    "records_to_jsonl",
]

log = logging.getLogger(__name__)

BLOCK_SIZE = 1000

Kind = Literal["friendly", "tau_perfect", "norm_perfect"]
KINDS = ("friendly", "tau_perfect", "norm_perfect")


@dataclass(frozen=True)
class SearchTask:
    kind: Kind
    k: int
    norm_lo: int
    norm_hi: int
    tau: Optional[GaussianInt] = None
    t: Optional[int] = None

    def validate(self) -> "SearchTask":
        if self.kind not in KINDS:
            raise DomainError("unknown search kind %r" % (self.kind,))
        if not isinstance(self.k, int) or self.k < 1:
            raise DomainError("k must be a positive integer")
        if not (1 <= self.norm_lo <= self.norm_hi):
            raise DomainError("need 1 <= norm_lo <= norm_hi, got %d, %d" % (self.norm_lo, self.norm_hi))
        if self.tau is not None:
            if self.kind != "tau_perfect":
                raise DomainError("tau only applies to tau_perfect searches")
            if self.tau.norm() <= 1:
                raise DomainError("tau must satisfy ||tau|| > 1")
        if self.t is not None:
            if self.kind != "norm_perfect":
                raise DomainError("t only applies to norm_perfect searches")
            if self.t <= 1:
                raise DomainError("t must exceed 1")
        return self

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "k": self.k,
            "norm_lo": self.norm_lo,
            "norm_hi": self.norm_hi,
            "tau": None if self.tau is None else str(self.tau),
            "t": self.t,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SearchTask":
        tau = obj.get("tau")
        return cls(
            obj["kind"],
            int(obj["k"]),
            int(obj["norm_lo"]),
            int(obj["norm_hi"]),
            None if tau is None else parse_gaussian(tau),
            obj.get("t"),
        )

    def fingerprint(self) -> str:
        payload = dict(self.to_json(), version=__version__)
        blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def blocks(self) -> list[tuple[int, int]]:
        out = []
        lo = self.norm_lo
        while lo <= self.norm_hi:
            hi = min(lo + BLOCK_SIZE - 1, self.norm_hi)
            out.append((lo, hi))
            lo = hi + 1
        return out


def enumerate_canonical(norm_lo: int, norm_hi: int) -> Iterator[GaussianInt]:
    """One representative (re > 0, im >= 0) per associate class with norm in
    [norm_lo, norm_hi], ordered by norm and then by imaginary part."""
    if norm_hi < norm_lo or norm_hi < 1:
        return
    lo = max(norm_lo, 1)
    while lo <= norm_hi:
        hi = min(lo + BLOCK_SIZE - 1, norm_hi)
        for a, b in _core.canonical_pairs(lo, hi):
            yield GaussianInt(a, b)
        lo = hi + 1


def _fraction_str(x: Fraction) -> str:
    return "%d/%d" % (x.numerator, x.denominator)


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


@dataclass(frozen=True)
class _BlockOutcome:
    lo: int
    hi: int
    records: list
    entries: list  # (eta, index) pairs, friendly searches only
    max_norm: Optional[Fraction]
    argmax: Optional[GaussianInt]
    count: int


def _process_block(task: SearchTask, lo: int, hi: int) -> _BlockOutcome:
    fp = task.fingerprint()
    records = []
    entries = []
    best = None
    argmax = None
    count = 0
    for a, b in _core.canonical_pairs(lo, hi):
        z = GaussianInt(a, b)
        count += 1
        index = abundancy_from_factorization(z, factor(z), task.k)
        if task.kind == "friendly":
            entries.append((z, index))
            continue
        n = index.norm()
        if best is None or n > best:
            best, argmax = n, z
        if task.kind == "tau_perfect":
            if index.den == 1 and n > 1 and (task.tau is None or index.num == task.tau):
                records.append(_record(fp, task, z, index, tau=str(index.num)))
        else:
            if n.denominator == 1 and n > 1 and (task.t is None or n == task.t):
                records.append(_record(fp, task, z, index, t=n.numerator))
    return _BlockOutcome(lo, hi, records, entries, best, argmax, count)


def _record(fp: str, task: SearchTask, z: GaussianInt, index: GaussianRational, **payload) -> dict:
    rec = {
        "type": "record",
        "task": fp,
        "kind": task.kind,
        "eta": str(z),
        "k": task.k,
        "witness": index.to_json(),
        "norm": _fraction_str(index.norm()),
    }
    rec.update(payload)
    return rec


def _block_marker(out: _BlockOutcome, task: SearchTask) -> dict:
    marker = {
        "type": "block",
        "task": task.fingerprint(),
        "lo": out.lo,
        "hi": out.hi,
        "count": out.count,
        "hits": len(out.records),
        "completed_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }
    if task.kind == "friendly":
        marker["entries"] = [[str(z), idx.to_json()] for z, idx in out.entries]
    else:
        marker["max_norm"] = None if out.max_norm is None else _fraction_str(out.max_norm)
        marker["argmax"] = None if out.argmax is None else str(out.argmax)
    return marker


def _outcome_from_lines(task: SearchTask, records: list, marker: dict) -> _BlockOutcome:
    entries = []
    if task.kind == "friendly":
        entries = [(parse_gaussian(z), GaussianRational.from_json(idx)) for z, idx in marker["entries"]]
    max_norm = marker.get("max_norm")
    argmax = marker.get("argmax")
    return _BlockOutcome(
        marker["lo"],
        marker["hi"],
        records,
        entries,
        None if max_norm is None else _parse_fraction(max_norm),
        None if argmax is None else parse_gaussian(argmax),
        marker["count"],
    )


@dataclass
class SearchResult:
    task: SearchTask
    records: list = field(default_factory=list)
    blocks_done: int = 0
    blocks_total: int = 0
    scanned: int = 0
    max_norm: Optional[Fraction] = None
    argmax: Optional[GaussianInt] = None

    @property
    def complete(self) -> bool:
        return self.blocks_done == self.blocks_total

    @property
    def inconsistent(self) -> bool:
        """A perfect-number hit at k >= 2, which the nonexistence theorem rules out."""
        return self.task.kind != "friendly" and self.task.k >= 2 and bool(self.records)

    def summary(self) -> dict:
        out = {
            "task": self.task.to_json(),
            "fingerprint": self.task.fingerprint(),
            "blocks_done": self.blocks_done,
            "blocks_total": self.blocks_total,
            "scanned": self.scanned,
            "records": len(self.records),
            "complete": self.complete,
            "inconsistent": self.inconsistent,
        }
        if self.max_norm is not None:
            out["max_norm"] = _fraction_str(self.max_norm)
            out["max_norm_float"] = float(self.max_norm)
            out["argmax"] = str(self.argmax)
        return out


def records_to_jsonl(records: list) -> bytes:
    return b"".join(
        (json.dumps(r, sort_keys=True, separators=(",", ":")) + "\n").encode() for r in records
    )


def _header(task: SearchTask) -> dict:
    return {
        "type": "header",
        "fingerprint": task.fingerprint(),
        "task": task.to_json(),
        "version": __version__,
    }


def _load_state(task: SearchTask, path: str) -> dict:
    """Completed blocks keyed by lo. Drops a torn tail after the last marker."""
    done: dict[int, _BlockOutcome] = {}
    if not os.path.exists(path) or os.path.getsize(path) == 0:
        return done
    with open(path, "rb") as fh:
        data = fh.read()
    lines = data.split(b"\n")
    torn = lines.pop()  # text after the final newline: empty unless a write was cut
    pending: list = []
    good_end = 0
    offset = 0
    for lineno, raw in enumerate(lines, 1):
        offset += len(raw) + 1
        try:
            obj = json.loads(raw)
        except ValueError as exc:
            raise CheckpointError("%s:%d: unreadable line (%s)" % (path, lineno, exc)) from None
        if not isinstance(obj, dict) or "type" not in obj:
            raise CheckpointError("%s:%d: not a state object" % (path, lineno))
        kind = obj["type"]
        if lineno == 1:
            if kind != "header":
                raise CheckpointError("%s: missing header line" % path)
            if obj.get("fingerprint") != task.fingerprint():
                raise CheckpointError(
                    "%s: task fingerprint %s does not match %s"
                    % (path, obj.get("fingerprint"), task.fingerprint())
                )
            good_end = offset
            continue
        if kind == "record":
            pending.append(obj)
        elif kind == "block":
            try:
                out = _outcome_from_lines(task, pending, obj)
            except (KeyError, ValueError, TypeError) as exc:
                raise CheckpointError("%s:%d: malformed block marker (%s)" % (path, lineno, exc)) from None
            done[out.lo] = out
            pending = []
            good_end = offset
        else:
            raise CheckpointError("%s:%d: unknown line type %r" % (path, lineno, kind))
    if pending or torn:
        log.info("discarding %d bytes of unfinished block in %s", len(data) - good_end, path)
        with open(path, "r+b") as fh:
            fh.truncate(good_end)
    return done


def _append(fh, objs) -> None:
    for obj in objs:
        fh.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")
    fh.flush()
    os.fsync(fh.fileno())


def _run_block(args):
    task_json, lo, hi = args
    return _process_block(SearchTask.from_json(task_json), lo, hi)


def run_search(
    task: SearchTask,
    state_path: Optional[str] = None,
    workers: int = 1,
    max_blocks: Optional[int] = None,
) -> SearchResult:
    """Run ``task``, resuming from ``state_path`` when it holds progress.

    ``max_blocks`` caps the number of new blocks processed in this call,
    which leaves the state file as an interrupted run would.
    """
    task.validate()
    blocks = task.blocks()
    done = _load_state(task, state_path) if state_path else {}
    todo = [b for b in blocks if b[0] not in done]
    if max_blocks is not None:
        todo = todo[:max_blocks]

    fh = None
    if state_path:
        fresh = not os.path.exists(state_path) or os.path.getsize(state_path) == 0
        fh = open(state_path, "a", encoding="utf-8")
        if fresh:
            _append(fh, [_header(task)])
    try:
        if workers > 1 and len(todo) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                args = [(task.to_json(), lo, hi) for lo, hi in todo]
                for out in pool.map(_run_block, args):
                    done[out.lo] = out
                    if fh:
                        _append(fh, out.records + [_block_marker(out, task)])
        else:
            for lo, hi in todo:
                out = _process_block(task, lo, hi)
                done[out.lo] = out
                if fh:
                    _append(fh, out.records + [_block_marker(out, task)])
    finally:
        if fh:
            fh.close()
    return _merge(task, blocks, done)


def _merge(task: SearchTask, blocks, done: dict) -> SearchResult:
    result = SearchResult(task, blocks_total=len(blocks))
    entries = []
    for lo, _ in blocks:
        out = done.get(lo)
        if out is None:
            continue
        result.blocks_done += 1
        result.scanned += out.count
        result.records.extend(out.records)
        entries.extend(out.entries)
        if out.max_norm is not None and (result.max_norm is None or out.max_norm > result.max_norm):
            result.max_norm, result.argmax = out.max_norm, out.argmax
    if task.kind == "friendly":
        result.records = _group_friends(task, entries)
    if result.inconsistent:
        log.error(
            "%d perfect-number hits at k=%d contradict the nonexistence theorem",
            len(result.records),
            task.k,
        )
    return result


def _group_friends(task: SearchTask, entries) -> list:
    groups: dict[GaussianRational, list[GaussianInt]] = {}
    for z, index in entries:
        groups.setdefault(index, []).append(z)
    fp = task.fingerprint()
    out = []
    for index, members in groups.items():
        if len(members) >= 2:
            rec = _record(fp, task, members[0], index, partners=[str(z) for z in members[1:]])
            out.append(rec)
    return out


def search_tau_perfect(task: SearchTask, **kw) -> list:
    if task.kind != "tau_perfect":
        raise DomainError("expected a tau_perfect task")
    return run_search(task, **kw).records


def search_norm_perfect(task: SearchTask, **kw) -> list:
    if task.kind != "norm_perfect":
        raise DomainError("expected a norm_perfect task")
    return run_search(task, **kw).records


def search_friendly(task: SearchTask, **kw) -> list:
    if task.kind != "friendly":
        raise DomainError("expected a friendly task")
    return run_search(task, **kw).records


def verify_record(record: dict) -> bool:
    """Recompute the witness of a hit record from scratch."""
    z = parse_gaussian(record["eta"])
    k = int(record["k"])
    index = abundancy(z, k)
    if index != GaussianRational.from_json(record["witness"]):
        return False
    if _fraction_str(index.norm()) != record["norm"]:
        return False
    kind = record["kind"]
    if kind == "tau_perfect":
        return index.den == 1 and index.num.norm() > 1 and str(index.num) == record["tau"]
    if kind == "norm_perfect":
        n = index.norm()
        return n.denominator == 1 and n > 1 and n.numerator == record["t"]
    if kind == "friendly":
        partners = [parse_gaussian(p) for p in record["partners"]]
        return bool(partners) and all(
            abundancy(p, k) == index and not are_associates(p, z) for p in partners
        )
    return False
