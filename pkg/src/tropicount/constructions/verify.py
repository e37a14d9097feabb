"""Exhaustive verification of a construction family against its claims."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from ..geometry import sigma_profile
from ..oracle import count_marked_admissible, enumerate_proper, marked_admissible_keys
from ..segments import HSeg, RowCollection, find_partition, strip_check, project_to_system
from ..systems import Violation, canonicalize, is_admissible
from .base import DEFAULT_ITERATION_CAP, Family

MARKED_ENUMERATION_CAP = 500_000


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerifyReport:
    family: str
    params: tuple
    instances: int = 0
    distinct_projections: int = 0
    marked: Optional[int] = None
    oracle_marked: Optional[int] = None
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def first_failure(self) -> Optional[Check]:
        return next((c for c in self.checks if not c.ok), None)

    def add(self, name, ok, detail=""):
        self.checks.append(Check(name, bool(ok), detail))

    def lines(self) -> list[str]:
        return [f"{'PASS' if c.ok else 'FAIL'} {c.name}" + (f": {c.detail}" if c.detail else "") for c in self.checks]


def family_verify(
    family: Family,
    oracle: bool = False,
    strips: bool = True,
    cap: int = DEFAULT_ITERATION_CAP,
) -> VerifyReport:
    """Check every instance of a family at exhaustive scale.

    Asserts: each projection is a proper system and a tree; projections are
    pairwise distinct; the family size matches its formula; the distinct
    marked systems match the marking count; with ``oracle``, every marked
    system is among the oracle's marked admissible systems.
    """
    profile = sigma_profile(family.spec)
    rep = VerifyReport(family.name, family.params())
    seen: dict[bytes, int] = {}
    bad_proper = bad_tree = bad_l2 = None
    marked_keys: Optional[set] = set()
    expected_marked = 0
    for inst in family.iterate(cap):
        rep.instances += 1
        proj = project_to_system(inst.collection, profile)
        if isinstance(proj, Violation):
            bad_proper = bad_proper or (inst.index, str(proj))
            continue
        if not is_admissible(proj.intervals, profile.m):
            bad_tree = bad_tree or inst.index
        key = canonicalize(proj.intervals)
        seen.setdefault(key, inst.index)
        if strips:
            labels = find_partition(inst.collection, profile.m)
            if labels is None or not strip_check(inst.collection, labels, profile.m):
                bad_l2 = bad_l2 if bad_l2 is not None else inst.index
        count = inst.marked_count()
        expected_marked += count
        if marked_keys is not None:
            if expected_marked > MARKED_ENUMERATION_CAP:
                marked_keys = None
            else:
                marked_keys.update(ms.key() for ms in inst.marked_systems())
    rep.distinct_projections = len(seen)
    rep.add("proper projections", bad_proper is None, "" if bad_proper is None else f"instance {bad_proper[0]}: {bad_proper[1]}")
    rep.add("admissible projections", bad_tree is None, "" if bad_tree is None else f"instance {bad_tree}")
    rep.add("distinct projections", len(seen) == rep.instances, f"{len(seen)} of {rep.instances}")
    rep.add("family size formula", rep.instances == family.formula_size(), f"generated {rep.instances}, formula {family.formula_size()}")
    if strips:
        rep.add("strip criterion", bad_l2 is None, "" if bad_l2 is None else f"no passing labeling for instance {bad_l2}")
    if marked_keys is not None:
        rep.marked = len(marked_keys)
        rep.add("distinct marked systems", len(marked_keys) == expected_marked, f"{len(marked_keys)} distinct, {expected_marked} by count")
    else:
        rep.marked = expected_marked
    if oracle:
        if marked_keys is None:
            rep.add("oracle containment", False, "marked family too large to enumerate")
        else:
            oracle_keys = marked_admissible_keys(profile)
            rep.oracle_marked = len(oracle_keys)
            missing = marked_keys - oracle_keys
            rep.add("oracle containment", not missing, f"{len(missing)} constructed marked systems missing from oracle")
            rep.add("constructed <= oracle", len(marked_keys) <= len(oracle_keys), f"{len(marked_keys)} <= {len(oracle_keys)}")
    return rep


def oracle_marked_count(family: Family) -> int:
    return count_marked_admissible(sigma_profile(family.spec)).marked_admissible_count


@dataclass
class SweepReport:
    profiles: int = 0
    collections: int = 0
    labelings: int = 0
    passing: int = 0
    passing_admissible: int = 0
    counterexamples: list = field(default_factory=list)


def collections_over(intervals, max_level: int):
    """Every collection of segments at levels 0..max_level projecting onto
    the given multiset, with no two segments overlapping on a level."""
    seen = set()
    for levels in product(range(max_level + 1), repeat=len(intervals)):
        segs = sorted(HSeg(lv, a, b) for lv, (a, b) in zip(levels, intervals))
        key = tuple(segs)
        if key in seen:
            continue
        seen.add(key)
        try:
            yield RowCollection(key)
        except ValueError:  # overlap on a level
            continue


def strip_criterion_sweep(profiles, max_level: int = 3, max_segments: int = 6) -> SweepReport:
    """Exhaustive soundness check of the strip criterion.

    For each profile, every proper system with at most ``max_segments``
    intervals, every way to stack it on levels 0..max_level, and every L/R
    labeling: a labeling that passes must come with an admissible projection.
    """
    rep = SweepReport()
    for prof in profiles:
        if prof.budget > max_segments:
            continue
        rep.profiles += 1
        for system in enumerate_proper(prof):
            admissible = is_admissible(system.intervals, prof.m)
            for coll in collections_over(system.intervals, max_level):
                rep.collections += 1
                for labels in product("LR", repeat=len(coll)):
                    rep.labelings += 1
                    if strip_check(coll, labels, prof.m):
                        rep.passing += 1
                        if admissible:
                            rep.passing_admissible += 1
                        else:
                            rep.counterexamples.append((prof, coll, labels))
    return rep
