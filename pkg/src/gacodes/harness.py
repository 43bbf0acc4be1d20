"""Code reports and the enumeration harness for two-block codes."""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass, field

from .algebra import AlgebraElement, support_group
from .distance import (
    DEFAULT_BUDGET,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    DistanceResult,
    kernel_dimension,
    min_weight_outside,
    random_min_weight_outside,
)
from .fmat import FMatrix
from .gf import PrimeField, gf_new
from .groups import GroupTable, double_cosets
from .parse import parse_group_spec
from .twoblock import CodeReport, TwoBlockCode, canonical_element, canonical_pair, dimension, structure_params


@dataclass(frozen=True)
class DistancePolicy:
    """Exact search when ``p^dim ker`` fits ``budget``, else ``trials`` information-set trials."""

    budget: int = DEFAULT_BUDGET
    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    pairs: bool = False


def side_distance(H: FMatrix, G: FMatrix, policy: DistancePolicy) -> DistanceResult:
    if H.p ** kernel_dimension(H) <= policy.budget:
        return min_weight_outside(H, G, policy.budget)
    return random_min_weight_outside(H, G, policy.trials, policy.seed, policy.pairs)


def _finite(v: float) -> int | None:
    return None if v == float("inf") else int(v)


def code_report(
    code: TwoBlockCode,
    group_spec: str,
    policy: DistancePolicy | None = None,
    distances: bool = True,
    k: int | None = None,
) -> CodeReport:
    """Parameters of ``code`` as a serializable record; distances follow ``policy``."""
    policy = policy or DistancePolicy()
    sp = structure_params(code)
    k = sp.k if k is None else k
    Ga, Gb = code.support_groups
    ncomp = len(double_cosets(code.group, Ga, Gb))
    rep = CodeReport(
        group=group_spec,
        order=code.ell,
        p=code.field.p,
        a=code.a.to_string(),
        b=code.b.to_string(),
        wa=code.a.weight,
        wb=code.b.weight,
        n=code.n,
        k=k,
        p_star=sp.p_star,
        delta_x=sp.delta_x,
        delta_z=sp.delta_z,
        k_s=sp.k_s,
        connected=ncomp == 1,
        components=ncomp,
    )
    if distances and k > 0:
        dx = side_distance(code.H_Z, code.H_X, policy)
        dz = side_distance(code.H_X, code.H_Z, policy)
        rep.dx, rep.dz = _finite(dx.value), _finite(dz.value)
        rep.d = _finite(min(dx.value, dz.value))
        randomized = "upper_bound" in (dx.mode, dz.mode)
        rep.d_mode = "upper_bound" if randomized else "exact"
        rep.trials = policy.trials if randomized else 0
        rep.seed = policy.seed if randomized else None
    return rep


@dataclass
class EnumerationJob:
    group: str
    wa: int
    wb: int
    p: int = 2
    connected_only: bool = False
    k_min: int = 1
    policy: DistancePolicy = field(default_factory=DistancePolicy)
    dedup: bool = False

    def __post_init__(self) -> None:
        if self.wa < 1 or self.wb < 1:
            raise ValueError("weights must be at least 1")


def candidate_elements(G: GroupTable, F: PrimeField, weight: int) -> Iterator[AlgebraElement]:
    """Elements of the given weight whose support contains the identity (coefficient 1).

    Supports come in lexicographic order of their sorted index lists; for ``p > 2`` the
    other coefficients run over all nonzero patterns.
    """
    if weight > G.order:
        return
    patterns = list(itertools.product(range(1, F.p), repeat=weight - 1))
    for rest in itertools.combinations(range(1, G.order), weight - 1):
        for cs in patterns:
            yield AlgebraElement(G, F, {G.id: 1, **dict(zip(rest, cs))})


def canonical_candidates(G: GroupTable, F: PrimeField, weight: int) -> list[AlgebraElement]:
    return [e for e in candidate_elements(G, F, weight) if canonical_element(e) == e]


def enumerate_codes(job: EnumerationJob) -> Iterator[CodeReport]:
    """Stream reports for the canonical pairs of ``job`` that survive its filters."""
    G = parse_group_spec(job.group)
    F = gf_new(job.p)
    cand_a = canonical_candidates(G, F, job.wa)
    cand_b = cand_a if job.wb == job.wa else canonical_candidates(G, F, job.wb)
    groups = {}
    seen: set[tuple[int, int | None]] = set()
    for a in cand_a:
        for b in cand_b:
            if job.wa == job.wb and not canonical_pair(G, a, b)[2]:
                continue
            if job.connected_only:
                for e in (a, b):
                    if e not in groups:
                        groups[e] = support_group(e)
                if len(double_cosets(G, groups[a], groups[b])) != 1:
                    continue
            code = TwoBlockCode(a, b)
            k = dimension(code)
            if k == 0 or k < job.k_min:
                continue
            rep = code_report(code, job.group, job.policy, k=k)
            if job.dedup:
                key = (rep.k, rep.d)
                if key in seen:
                    continue
                seen.add(key)
            yield rep
