"""JSONL and CSV persistence for :class:`CodeReport` streams."""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Iterable, Iterator
from dataclasses import fields
from pathlib import Path
from typing import IO

from .twoblock import CodeReport

RECORD_FIELDS: tuple[str, ...] = tuple(f.name for f in fields(CodeReport) if f.name != "extra")
DERIVED_FIELDS = ("kd", "kd_n")
CSV_HEADER = RECORD_FIELDS + DERIVED_FIELDS
FORMATS = ("jsonl", "csv")


def record(rep: CodeReport) -> dict:
    """Flat dict with the fixed schema plus ``kd`` and ``kd/n`` (null without a distance)."""
    out = rep.to_dict()
    kd = rep.k * rep.d if rep.d is not None else None
    out["kd"] = kd
    out["kd_n"] = kd / rep.n if kd is not None else None
    return out


def emit(reports: Iterable[CodeReport], fmt: str, out: str | Path | IO[str]) -> int:
    """Write one record per report; returns the record count."""
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")
    if isinstance(out, (str, Path)):
        with open(out, "w", newline="") as fh:
            return emit(reports, fmt, fh)
    count = 0
    if fmt == "jsonl":
        for rep in reports:
            out.write(json.dumps(record(rep)) + "\n")
            count += 1
        return count
    writer = csv.DictWriter(out, fieldnames=CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    for rep in reports:
        writer.writerow({k: ("" if v is None else v) for k, v in record(rep).items()})
        count += 1
    return count


def _from_record(rec: dict) -> CodeReport:
    return CodeReport(**{k: rec[k] for k in RECORD_FIELDS})


def read_jsonl(src: str | Path | IO[str]) -> Iterator[CodeReport]:
    if isinstance(src, (str, Path)):
        with open(src) as fh:
            yield from read_jsonl(fh)
        return
    for line in src:
        if line.strip():
            yield _from_record(json.loads(line))


_INT_FIELDS = {"order", "p", "wa", "wb", "n", "k", "p_star", "delta_x", "delta_z", "k_s", "components", "trials"}
_OPT_INT_FIELDS = {"dx", "dz", "d", "seed"}


def read_csv(src: str | Path | IO[str]) -> Iterator[CodeReport]:
    if isinstance(src, (str, Path)):
        with open(src, newline="") as fh:
            yield from read_csv(fh)
        return
    for row in csv.DictReader(src):
        rec: dict = {}
        for k in RECORD_FIELDS:
            v = row[k]
            if k in _INT_FIELDS:
                rec[k] = int(v)
            elif k in _OPT_INT_FIELDS:
                rec[k] = int(v) if v != "" else None
            elif k == "connected":
                rec[k] = v == "True"
            elif k == "d_mode":
                rec[k] = v or None
            else:
                rec[k] = v
        yield _from_record(rec)


def to_string(reports: Iterable[CodeReport], fmt: str) -> str:
    buf = io.StringIO()
    emit(reports, fmt, buf)
    return buf.getvalue()
