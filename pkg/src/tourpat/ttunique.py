"""TT-unique partitions, the color-simulating gadget and the random-pattern experiment.

A partition ``(D, Z)`` of ``V(T)`` is TT-unique when ``T[D]`` is rigid, occurs
exactly once in ``T``, and every large ``D' subset of D`` (at least
``delta = |D| - TT(T) * |Z|`` vertices) separates all vertices outside ``D'``
by their in-neighbors in ``D'``.

For the third condition a pair ``u != v`` is bad exactly when the part of
``D - {u, v}`` on which their in-neighborhoods agree has at least ``delta``
vertices, which gives a quadratic test.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from itertools import combinations
from math import comb, floor, log2

from .counting import count_cf_clique, count_indsub_to
from .detect import SpineDecomposition, tt_number
from .iso import automorphism_count
from .rng import SplitMix64, substream
from .structures import ColoredGraph, Tournament, induced, random_tournament

CSV_COLUMNS = ("k", "trials", "z", "frequency", "fail_aut", "fail_unique", "fail_vec")
LITERAL_LIMIT = 10


def tvec(t: Tournament, v: int, dp) -> frozenset:
    """In-neighbors of ``v`` inside ``dp`` (``v`` must lie outside ``dp``)."""
    dset = frozenset(dp)
    if v in dset:
        raise ValueError(f"vertex {v} lies in the given set")
    return frozenset(t.in_neighbors(v)) & dset


@dataclass(frozen=True)
class TTUniquePartition:
    """A split of ``[order]`` into ``d`` and ``z`` with the threshold ``delta``."""

    order: int
    d: frozenset
    z: frozenset
    tt: int
    verified: bool = False

    @property
    def delta(self) -> int:
        return len(self.d) - self.tt * len(self.z)


@dataclass(frozen=True)
class TTUniqueReport:
    """Outcome of each condition for one partition."""

    trivial_aut: bool
    unique_copy: bool
    separating: bool
    tt: int
    delta: int

    @property
    def ok(self) -> bool:
        return self.trivial_aut and self.unique_copy and self.separating


def _check_partition(t: Tournament, d, z) -> tuple[frozenset, frozenset]:
    dset, zset = frozenset(d), frozenset(z)
    if dset & zset or dset | zset != frozenset(range(1, t.order + 1)):
        raise ValueError("D and Z must partition the vertex set")
    return dset, zset


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def separating_polynomial(t: Tournament, d, delta: int) -> bool:
    """Third condition by the pair criterion: no ``u != v`` whose in-neighborhoods
    agree on at least ``delta`` vertices of ``D - {u, v}``."""
    inrows = t.in_rows
    dmask = _mask(d)
    k = t.order
    for u in range(k):
        for v in range(u + 1, k):
            agree = dmask & ~((1 << u) | (1 << v)) & ~(inrows[u] ^ inrows[v])
            if agree.bit_count() >= delta:
                return False
    return True


def separating_literal(t: Tournament, d, delta: int) -> bool:
    """Third condition checked over every ``D'`` of size at least ``delta`` (|D| <= 10)."""
    dl = sorted(d)
    if len(dl) > LITERAL_LIMIT:
        raise ValueError(f"the literal check is limited to |D| <= {LITERAL_LIMIT}")
    everyone = set(t.vertices)
    for size in range(max(delta, 0), len(dl) + 1):
        for dp in combinations(dl, size):
            outside = sorted(everyone - set(dp))
            seen = set()
            for v in outside:
                key = tvec(t, v, dp)
                if key in seen:
                    return False
                seen.add(key)
    return True


def check_tt_unique(t: Tournament, d, z, tt: int | None = None) -> TTUniqueReport:
    """Evaluate all three conditions (none is skipped when another fails)."""
    dset, zset = _check_partition(t, d, z)
    if tt is None:
        tt = tt_number(t)[0]
    delta = len(dset) - tt * len(zset)
    if dset:
        core = induced(t, dset)
        trivial = automorphism_count(core) == 1
        unique = count_indsub_to(core, t) == 1
    else:
        # the empty tournament: one automorphism, one (empty) copy
        trivial = unique = True
    sep = separating_polynomial(t, dset, delta)
    return TTUniqueReport(trivial, unique, sep, tt, delta)


def is_tt_unique(t: Tournament, d, z) -> bool:
    return check_tt_unique(t, d, z).ok


def verify_partition(t: Tournament, d, z) -> TTUniquePartition:
    """A verified partition object; raises if ``(D, Z)`` is not TT-unique."""
    report = check_tt_unique(t, d, z)
    if not report.ok:
        raise ValueError(f"not a TT-unique partition: {report}")
    return TTUniquePartition(t.order, frozenset(d), frozenset(z), report.tt, True)


@dataclass
class PartitionSearch:
    """Result of a bounded search, with a line per attempt that was rejected."""

    partition: TTUniquePartition | None
    tournament: Tournament | None
    attempts: int
    transcript: list[str] = field(default_factory=list)


def find_tt_unique_partition(t: Tournament, z: int, restarts: int = 10_000, seed: int = 0) -> PartitionSearch:
    """Search splits with ``|Z| = z``: all of them when there are at most
    ``restarts``, otherwise ``restarts`` random ones."""
    k = t.order
    tt = tt_number(t)[0]
    total = comb(k, z)
    if total <= restarts:
        candidates = (frozenset(c) for c in combinations(range(1, k + 1), z))
    else:
        rng = SplitMix64(seed)
        candidates = (frozenset(rng.sample(range(1, k + 1), z)) for _ in range(restarts))
    out = PartitionSearch(None, t, 0)
    for zs in candidates:
        out.attempts += 1
        ds = frozenset(range(1, k + 1)) - zs
        rep = check_tt_unique(t, ds, zs, tt)
        if rep.ok:
            out.partition = TTUniquePartition(k, ds, zs, tt, True)
            return out
        out.transcript.append(
            f"Z={sorted(zs)} aut={int(rep.trivial_aut)} unique={int(rep.unique_copy)} "
            f"sep={int(rep.separating)} delta={rep.delta}"
        )
    return out


def search_random_pattern(orders, z: int, seed: int, patterns: int = 20, restarts: int = 10_000) -> PartitionSearch:
    """Random patterns of the given orders until one has a TT-unique split with ``|Z| = z``."""
    rng = SplitMix64(seed)
    log: list[str] = []
    attempts = 0
    for i in range(patterns):
        for k in orders:
            t = random_tournament(k, rng)
            res = find_tt_unique_partition(t, z, restarts, seed ^ i)
            attempts += res.attempts
            if res.partition is not None:
                log.append(f"pattern {i} order {k}: found after {res.attempts} splits")
                return PartitionSearch(res.partition, t, attempts, log)
            log.append(f"pattern {i} order {k}: none of {res.attempts} splits")
    return PartitionSearch(None, None, attempts, log)


def _split_penalty(t: Tournament, zs: frozenset, delta: int) -> int:
    # how far the pair criterion is from holding: sum of excess agreements
    inrows = t.in_rows
    dmask = ((1 << t.order) - 1) & ~_mask(zs)
    k = t.order
    total = 0
    for u in range(k):
        for v in range(u + 1, k):
            agree = (dmask & ~((1 << u) | (1 << v)) & ~(inrows[u] ^ inrows[v])).bit_count()
            if agree >= delta:
                total += agree - delta + 1
    return total


def search_local_pattern(k: int, z: int, seed: int, max_steps: int = 20_000) -> PartitionSearch:
    """Randomised local search for a pattern of order ``k`` with a TT-unique split, ``|Z| = z``.

    Starts from a random tournament and reverses one random pair per step,
    keeping the change unless it raises the pair-criterion penalty of the
    best split. Whenever some split has penalty 0, all three conditions are
    checked. Stops after ``max_steps`` steps.
    """
    if not 1 <= z < k:
        raise ValueError("need 1 <= z < k")
    rng = SplitMix64(seed)
    splits = [frozenset(c) for c in combinations(range(1, k + 1), z)]
    log: list[str] = []

    def score(t: Tournament):
        tt = tt_number(t)[0]
        delta = (k - z) - tt * z
        return min((_split_penalty(t, zs, delta), sorted(zs), zs) for zs in splits)[::2], tt

    t = random_tournament(k, rng)
    (pen, zs), tt = score(t)
    tried = set()
    for step in range(1, max_steps + 1):
        if pen == 0 and (t.bits, zs) not in tried:
            tried.add((t.bits, zs))
            ds = frozenset(range(1, k + 1)) - zs
            rep = check_tt_unique(t, ds, zs, tt)
            if rep.ok:
                log.append(f"order {k}, |Z|={z}: found at step {step}, Z={sorted(zs)}, TT={tt}, delta={rep.delta}")
                return PartitionSearch(TTUniquePartition(k, ds, zs, tt, True), t, step, log)
            log.append(
                f"order {k}, |Z|={z}: step {step} pair criterion holds but aut={int(rep.trivial_aut)} "
                f"unique={int(rep.unique_copy)}"
            )
        b = rng.below(t.order * (t.order - 1) // 2)
        other = Tournament(k, t.bits ^ (1 << b))
        (pen2, zs2), tt2 = score(other)
        if pen2 <= pen:
            t, pen, zs, tt = other, pen2, zs2, tt2
    log.append(f"order {k}, |Z|={z}: no partition within {max_steps} steps (best penalty {pen}, TT={tt})")
    return PartitionSearch(None, None, max_steps, log)


# --- gadget ---------------------------------------------------------------

def tt_gadget_colors(part: TTUniquePartition, g: ColoredGraph) -> tuple[int, ...]:
    """c*: the pattern vertex represented by each gadget vertex.

    A vertex of G with color ``j`` stands for the j-th smallest vertex of Z;
    the appended vertex ``n + i`` stands for the i-th smallest vertex of D.
    """
    zs = sorted(part.z)
    ds = sorted(part.d)
    return tuple(zs[c - 1] for c in g.coloring.colors) + tuple(ds)


def tt_gadget(t: Tournament, part: TTUniquePartition, g: ColoredGraph) -> Tournament:
    """G*: G's vertices followed by a copy of D. Same-colored pairs of G point from
    the smaller to the larger vertex; other pairs of G agree with T under c* on
    edges and disagree on non-edges; pairs touching the copy of D agree with T."""
    if not part.verified or part.order != t.order:
        raise ValueError("the partition must be verified for this pattern")
    if g.palette != len(part.z):
        raise ValueError(f"palette {g.palette} differs from |Z| = {len(part.z)}")
    n = g.order
    cstar = tt_gadget_colors(part, g)
    total = len(cstar)
    trows = t.out_rows
    grows = g.graph.rows
    rows = [0] * total
    for x in range(total):
        cx = cstar[x] - 1
        for y in range(x + 1, total):
            cy = cstar[y] - 1
            if cx == cy:
                forward = True
            else:
                t_forward = bool((trows[cx] >> cy) & 1)
                if y >= n:
                    forward = t_forward
                else:
                    forward = t_forward == bool((grows[x] >> y) & 1)
            if forward:
                rows[x] |= 1 << y
            else:
                rows[y] |= 1 << x
    return Tournament.from_rows(rows)


def has_colorful_clique(g: ColoredGraph) -> bool:
    return count_cf_clique(g.palette, g) > 0


# --- pattern family with long spines -----------------------------------------

def family_Tc(t0: Tournament, j: int) -> Tournament:
    """T0 followed by a transitive tournament on ``j`` new vertices, all dominated by T0."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    k0 = t0.order
    rows = list(t0.out_rows) + [0] * j
    new = ((1 << (k0 + j)) - 1) & ~((1 << k0) - 1)
    for v in range(k0):
        rows[v] |= new
    for a in range(k0, k0 + j):
        rows[a] |= new & ~((1 << (a + 1)) - 1)
    return Tournament.from_rows(rows)


def family_Tc_decomposition(t0: Tournament, j: int) -> SpineDecomposition:
    """The decomposition (V(T0), {}, new vertices) of ``family_Tc(t0, j)``."""
    k0 = t0.order
    return SpineDecomposition(
        k0 + j, frozenset(range(1, k0 + 1)), frozenset(), frozenset(range(k0 + 1, k0 + j + 1))
    )


# --- experiment -----------------------------------------------------------

def split_size(k: int) -> int:
    """z = floor(k / (9 log2 k))."""
    return floor(k / (9 * log2(k)))


@dataclass(frozen=True)
class ExperimentReport:
    k: int
    trials: int
    z: int
    successes: int
    fail_aut: int
    fail_unique: int
    fail_vec: int
    tt_total: int

    @property
    def frequency(self) -> float:
        return self.successes / self.trials if self.trials else 0.0

    @property
    def mean_tt(self) -> float:
        return self.tt_total / self.trials if self.trials else 0.0

    def csv_row(self) -> list[str]:
        return [
            str(self.k), str(self.trials), str(self.z), f"{self.frequency:.6f}",
            str(self.fail_aut), str(self.fail_unique), str(self.fail_vec),
        ]


def _trial(k: int, z: int, seed: int, index: int) -> TTUniqueReport:
    t = random_tournament(k, substream(seed, index))
    zs = range(1, z + 1)
    ds = range(z + 1, k + 1)
    return check_tt_unique(t, ds, zs)


def experiment_tt_unique(k: int, trials: int, seed: int, workers: int = 1) -> ExperimentReport:
    """Fixed split Z = {1..z}, D = the rest, on ``trials`` random tournaments.

    Trial ``t`` draws its tournament from the stream seeded with ``seed XOR t``,
    so the report does not depend on ``workers``.
    """
    if k < 4:
        raise ValueError("k must be at least 4")
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    z = split_size(k)
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as pool:
            reports = list(pool.map(_trial, [k] * trials, [z] * trials, [seed] * trials, range(trials)))
    else:
        reports = [_trial(k, z, seed, i) for i in range(trials)]
    return ExperimentReport(
        k, trials, z,
        successes=sum(r.ok for r in reports),
        fail_aut=sum(not r.trivial_aut for r in reports),
        fail_unique=sum(not r.unique_copy for r in reports),
        fail_vec=sum(not r.separating for r in reports),
        tt_total=sum(r.tt for r in reports),
    )


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow(r.csv_row())
    return buf.getvalue()


__all__ = [
    "tvec",
    "TTUniquePartition",
    "TTUniqueReport",
    "separating_polynomial",
    "separating_literal",
    "check_tt_unique",
    "is_tt_unique",
    "verify_partition",
    "PartitionSearch",
    "find_tt_unique_partition",
    "search_random_pattern",
    "search_local_pattern",
    "tt_gadget_colors",
    "tt_gadget",
    "has_colorful_clique",
    "family_Tc",
    "family_Tc_decomposition",
    "split_size",
    "ExperimentReport",
    "experiment_tt_unique",
    "reports_to_csv",
    "CSV_COLUMNS",
]
