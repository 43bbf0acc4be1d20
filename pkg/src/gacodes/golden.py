"""Rebuild published codes and compare their parameters."""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .distance import DEFAULT_BUDGET, DEFAULT_SEED, DEFAULT_TRIALS, kernel_dimension, min_weight_outside
from .distance import random_min_weight_outside
from .gf import gf_new
from .parse import parse_algebra_elem, parse_group_spec
from .twoblock import TwoBlockCode, dimension

MODES = ("exact", "upper_bound")


def default_dataset() -> Path:
    return Path(str(resources.files("gacodes") / "data" / "golden.jsonl"))


def load_golden(path: str | Path | None = None) -> list[dict]:
    path = default_dataset() if path is None else Path(path)
    with open(path) as fh:
        return [json.loads(line) for line in fh if line.strip()]


def build_row(row: dict) -> TwoBlockCode:
    G = parse_group_spec(row["group"])
    F = gf_new(int(row.get("p", 2)))
    aliases = row.get("aliases")
    return TwoBlockCode(parse_algebra_elem(row["a"], G, F, aliases), parse_algebra_elem(row["b"], G, F, aliases))


@dataclass
class GoldenResult:
    label: str
    passed: bool
    expected: tuple[int, int, int]
    measured: tuple[int | None, int | None, float | int | None]
    mode: str
    messages: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        n, k, d = self.expected
        tail = f" ({'; '.join(self.messages)})" if self.messages else ""
        return f"{status} {self.label}: expected [[{n},{k},{d}]], got {list(self.measured)} [{self.mode}]{tail}"


def verify_row(
    row: dict,
    budget: int = DEFAULT_BUDGET,
    trials: int | None = None,
    check_trials: int | None = None,
    seed: int | None = None,
) -> GoldenResult:
    """Check ``n`` and ``k`` exactly and ``d`` in the row's mode.

    Upper-bound rows pass when ``trials`` information-set trials reach the published ``d``
    and trials ``trials .. check_trials - 1`` find nothing lighter.
    """
    label = row.get("label") or f"{row['group']} {row['a']} | {row['b']}"
    mode = row.get("d_mode", "exact")
    expected = (int(row["n"]), int(row["k"]), int(row["d"]))
    try:
        code = build_row(row)
    except Exception as exc:  # reported, never raised
        return GoldenResult(label, False, expected, (None, None, None), mode, [f"build failed: {exc}"])
    n, k = code.n, dimension(code)
    msgs = []
    if n != expected[0]:
        msgs.append(f"n={n}")
    if k != expected[1]:
        msgs.append(f"k={k}")
    sides = ((code.H_Z, code.H_X), (code.H_X, code.H_Z))
    d: float | int | None = None
    if mode not in MODES:
        msgs.append(f"unknown d_mode {mode!r}")
    elif mode == "exact":
        if any(code.field.p ** kernel_dimension(H) > budget for H, _ in sides):
            msgs.append("exact distance exceeds budget")
        else:
            d = min(min_weight_outside(H, G, budget).value for H, G in sides)
    else:
        t = int(trials or row.get("trials", DEFAULT_TRIALS))
        tc = int(check_trials or row.get("check_trials", t))
        s = int(seed if seed is not None else row.get("seed", DEFAULT_SEED))
        d = min(random_min_weight_outside(H, G, t, s).value for H, G in sides)
        if tc > t:
            later = min(random_min_weight_outside(H, G, tc, s, start=t).value for H, G in sides)
            if later < expected[2]:
                msgs.append(f"weight {later} found in trials {t}..{tc - 1}")
    if d is not None and d != expected[2]:
        msgs.append(f"d={d}")
    if isinstance(d, float) and d != float("inf"):
        d = int(d)
    return GoldenResult(label, not msgs, expected, (n, k, d), mode, msgs)


def verify_golden(
    dataset: str | Path | Iterable[dict] | None = None,
    budget: int = DEFAULT_BUDGET,
    trials: int | None = None,
    check_trials: int | None = None,
    seed: int | None = None,
) -> Iterator[GoldenResult]:
    """One result per row; failures are reported, not raised."""
    rows = load_golden(dataset) if dataset is None or isinstance(dataset, (str, Path)) else dataset
    for row in rows:
        yield verify_row(row, budget, trials, check_trials, seed)
