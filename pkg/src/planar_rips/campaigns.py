"""Seeded batch runs of the theorem verifiers and lemma checks."""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .classify import COUNTEREXAMPLE, VACUOUS, verify_theorem_A, verify_theorem_B, verify_theorem_C
from .constructions import chain_cloud, jitter
from .geom import Point2
from .lemmas import lemma_violations
from .rips import PointCloud, ThresholdMode, build_rips, gen_cross_polytope_points

SUITES = ("lemmas", "theoremA", "theoremB", "theoremC", "all")
INJECT_EVERY = 10
GRID = 1000


def random_cloud(rng: np.random.Generator, n_min: int = 4, n_max: int = 30) -> PointCloud:
    """Uniform points of the 1/1000 grid on [0, 3]^2, duplicates dropped."""
    n = int(rng.integers(n_min, n_max + 1))
    raw = rng.integers(0, 3 * GRID + 1, size=(n, 2))
    seen = []
    for x, y in raw.tolist():
        if (x, y) not in seen:
            seen.append((x, y))
    return PointCloud(tuple(Point2(Fraction(x, GRID), Fraction(y, GRID)) for x, y in seen))


def constructed_cloud(rng: np.random.Generator) -> tuple[str, PointCloud]:
    """A positive case: jittered octahedron, chain or cross-polytope."""
    kind = int(rng.integers(0, 4))
    if kind == 0:
        name, base = "octahedron", gen_cross_polytope_points(2)
    elif kind == 1:
        name, base = "chain2", chain_cloud(2)
    elif kind == 2:
        name, base = "chain3", chain_cloud(3)
    else:
        name, base = "cross3", gen_cross_polytope_points(3)
    return name, jitter(base, rng)


def campaign_clouds(seed: int, count: int, inject: bool = True):
    children = np.random.SeedSequence(seed).spawn(count)
    for i, child in enumerate(children):
        rng = np.random.default_rng(child)
        if inject and i % INJECT_EVERY == 0:
            name, cloud = constructed_cloud(rng)
        else:
            name, cloud = "random", random_cloud(rng)
        yield i, name, cloud


_VERIFIERS = {"theoremA": verify_theorem_A, "theoremB": verify_theorem_B, "theoremC": verify_theorem_C}


def run_campaign(suite: str, seed: int, count: int, mode: ThresholdMode = ThresholdMode.STRICT,
                 max_examples: int = 20) -> dict:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    names = list(_VERIFIERS) + ["lemmas"] if suite == "all" else [suite]
    stats = {s: {"consistent": 0, "vacuous": 0, "counterexample": 0} for s in names if s != "lemmas"}
    lemma_counts: dict[str, int] = {}
    failures = []
    injected = 0
    for i, kind, cloud in campaign_clouds(seed, count):
        injected += kind != "random"
        k = build_rips(cloud, mode)
        for s in names:
            if s == "lemmas":
                for check, bad in lemma_violations(cloud, k).items():
                    lemma_counts[check] = lemma_counts.get(check, 0) + len(bad)
                    if bad and len(failures) < max_examples:
                        failures.append({"cloud": i, "kind": kind, "check": check, "violations": bad[:5]})
                continue
            v = _VERIFIERS[s](cloud, mode, k)
            stats[s][v.status] += 1
            if v.status == COUNTEREXAMPLE and len(failures) < max_examples:
                failures.append({"cloud": i, "kind": kind, "check": s, "details": v.details})
    report = {
        "suite": suite, "seed": seed, "count": count, "mode": mode.value,
        "injected": injected, "verdicts": stats, "failures": failures,
    }
    if "lemmas" in names:
        report["lemma_violations"] = dict(sorted(lemma_counts.items()))
    report["ok"] = not failures and all(st["counterexample"] == 0 for st in stats.values()) \
        and not any(lemma_counts.values())
    for st in stats.values():
        st["non_vacuous"] = st["consistent"] + st["counterexample"]
    return report


def is_vacuous(status: str) -> bool:
    return status == VACUOUS
