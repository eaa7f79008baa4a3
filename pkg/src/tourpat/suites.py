"""Named, seeded verification suites.

Each suite runs a list of cases and returns a :class:`Manifest`. A case either
passes, fails or (only where a search may legitimately come back empty) is
skipped with an explanation. Every random object of case ``i`` is drawn from
the stream ``substream(seed, i)``, so results do not depend on run order.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from . import counting as C
from .detect import (
    detect_pattern_witness,
    extract_transitive_em,
    is_spine_decomposition,
)
from .enumerator import (
    alternating_enumerator_antimatching,
    alternating_enumerator_naive,
    alternating_enumerator_table,
    antimatching_parity_sum,
    has_clique_minor,
    treewidth_exact,
)
from .iso import are_isomorphic, canonical_form
from .reductions import (
    LinearCombination,
    biased_oracle,
    biased_tournament,
    cf_from_uncolored,
    clique_color_gadget,
    color_removal_terms,
    cpsub_basis_of_cf,
    extract_term,
    signature_gadget,
    symmetrize_cp_to_cf,
)
from .rng import SplitMix64, substream
from .signatures import erdos_moser_signature, is_signature, min_signature, signature_bound
from .structures import (
    ColoredGraph,
    Coloring,
    Graph,
    Tournament,
    anti_matching,
    complete_graph,
    induced,
    num_pairs,
    random_colored_graph,
    random_colored_tournament,
    random_graph,
    random_tournament,
    transitive_tournament,
)
from .ttunique import (
    family_Tc,
    family_Tc_decomposition,
    has_colorful_clique,
    search_local_pattern,
    separating_literal,
    separating_polynomial,
    tt_gadget,
    tt_gadget_colors,
)
from .detect import tt_number

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class Case:
    index: int
    name: str
    status: str
    detail: str = ""


@dataclass
class Manifest:
    suite: str
    seed: int
    cases: list[Case] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def case_count(self) -> int:
        return len(self.cases)

    @property
    def failures(self) -> list[Case]:
        return [c for c in self.cases if c.status == FAIL]

    @property
    def skipped(self) -> list[Case]:
        return [c for c in self.cases if c.status == SKIP]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        n_pass = sum(c.status == PASS for c in self.cases)
        return (
            f"suite {self.suite} seed {self.seed}: {self.case_count} cases, "
            f"{n_pass} passed, {len(self.failures)} failed, {len(self.skipped)} skipped"
        )

    def lines(self) -> list[str]:
        """Deterministic report (wall time is left out)."""
        out = [self.summary()]
        for c in self.cases:
            out.append(f"{c.index}\t{c.status}\t{c.name}" + (f"\t{c.detail}" if c.detail else ""))
        return out

    def to_json(self, wall_time: bool = True) -> str:
        data = {
            "suite": self.suite,
            "seed": self.seed,
            "case_count": self.case_count,
            "failures": len(self.failures),
            "cases": [c.__dict__ for c in self.cases],
        }
        if wall_time:
            data["wall_time"] = self.wall_time
        return json.dumps(data, indent=2)


class _Builder:
    def __init__(self, suite: str, seed: int):
        self.manifest = Manifest(suite, seed)
        self.seed = seed

    def rng(self) -> SplitMix64:
        return substream(self.seed, len(self.manifest.cases))

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.manifest.cases.append(Case(len(self.manifest.cases), name, PASS if ok else FAIL, detail))

    def skip(self, name: str, detail: str) -> None:
        self.manifest.cases.append(Case(len(self.manifest.cases), name, SKIP, detail))


def _all_tournaments(k: int):
    for code in range(1 << num_pairs(k)):
        yield Tournament(k, code)


# --- suites ---------------------------------------------------------------

def suite_biased_identity(b: _Builder, hosts: int = 50) -> None:
    """CFsubs(T, Tour_G(T)) = sum of ae(T, H) cp-Sub(H, G), every labeled T, k = 2..4."""
    for k in (2, 3, 4):
        for t in _all_tournaments(k):
            rng = b.rng()
            lc = cpsub_basis_of_cf(t)
            bad = 0
            for _ in range(hosts):
                n = 1 + rng.below(12)
                g = random_colored_graph(n, k, rng)
                lhs = C.count_cf_indsub_to(t, biased_tournament(g, t))
                rhs = lc.evaluate_table(C.cp_sub_table(g))
                bad += lhs != rhs
            b.add(f"k={k} T={t.bits}", bad == 0, f"{bad} mismatches" if bad else "")


def suite_enumerator_structure(b: _Builder) -> None:
    """ae(T, K_k) = 0, ae(T, anti-matching) != 0 with X odd, zero on two apices and on dense H."""
    for k in (2, 3, 4, 5):
        full = complete_graph(k).bits
        am = anti_matching(k)
        m = num_pairs(k)
        two_apex = [h for h in range(1 << m) if _apex_count(Graph(k, h)) >= 2]
        dense = [h for h in range(1 << m) if h.bit_count() > am.num_edges]
        for t in _all_tournaments(k):
            table = alternating_enumerator_table(t)
            x = antimatching_parity_sum(t)
            problems = []
            if table[full] != 0:
                problems.append("complete")
            if x % 2 == 0 or table[am.bits] == 0:
                problems.append("anti-matching")
            if any(table[h] for h in two_apex):
                problems.append("two apices")
            if any(table[h] for h in dense):
                problems.append("dense")
            b.add(f"k={k} T={t.bits}", not problems, ",".join(problems))


def _apex_count(h: Graph) -> int:
    return sum(1 for v in h.vertices if h.degree(v) == h.order - 1)


def suite_antimatching_fast(b: _Builder) -> None:
    """Matching-parity formula equals the subset sum for ae(T, anti-matching), k = 2..5."""
    for k in (2, 3, 4, 5):
        am = anti_matching(k)
        for t in _all_tournaments(k):
            fast = alternating_enumerator_antimatching(t)
            naive = alternating_enumerator_naive(t, am)
            b.add(f"k={k} T={t.bits}", fast == naive, f"{fast} vs {naive}" if fast != naive else "")


def suite_extraction(b: _Builder, combos: int = 100, end_to_end: int = 20) -> None:
    """extract_term on explicit combinations and on the biased-tournament oracle."""
    for i in range(combos):
        rng = b.rng()
        k = 2 + rng.below(3)
        m = 1 + rng.below(4)
        codes = set()
        while len(codes) < min(m, 1 << num_pairs(k)):
            codes.add(rng.below(1 << num_pairs(k)))
        terms = {}
        for code in sorted(codes):
            alpha = 0
            while alpha == 0:
                alpha = rng.below(11) - 5
            terms[Graph(k, code)] = alpha
        lc = LinearCombination(k, terms)
        g = random_colored_graph(1 + rng.below(10), k, rng)
        target = sorted(lc.terms, key=lambda h: h.bits)[rng.below(len(lc.terms))]
        calls = [0]

        def oracle(host: ColoredGraph, lc=lc) -> int:
            calls[0] += 1
            return lc.evaluate(lambda h: C.count_cp_sub(h, host))

        got = extract_term(oracle, target, g)
        want = lc.coefficient(target) * C.count_cp_sub(target, g)
        ok = got == want and calls[0] == 1 << target.num_edges
        b.add(f"combination {i} k={k} m={len(lc)}", ok, "" if ok else f"{got} vs {want}, {calls[0]} calls")
    for i in range(end_to_end):
        rng = b.rng()
        k = 2 + rng.below(3)
        t = random_tournament(k, rng)
        g = random_colored_graph(k + rng.below(8), k, rng)
        am = anti_matching(k)
        got = extract_term(biased_oracle(t), am, g)
        want = alternating_enumerator_table(t)[am.bits] * C.count_cp_sub(am, g)
        b.add(f"end-to-end {i} k={k}", got == want, f"value {got}" if got == want else f"{got} vs {want}")


def suite_signatures(b: _Builder, em_instances: int = 5) -> None:
    """sig(TT_k) = floor(k/2); sig(T) <= k - ceil(log2(k)/4) for k <= 5; Erdos-Moser signatures."""
    for k in range(2, 7):
        s = min_signature(transitive_tournament(k))
        b.add(f"TT_{k}", s.size == k // 2, f"size {s.size}, R={list(s.vertices)}")
    for k in range(1, 6):
        bound = signature_bound(k)
        worst = max(min_signature(t).size for t in _all_tournaments(k))
        b.add(f"all tournaments of order {k}", worst <= bound, f"max sig {worst}, bound {bound}")
    for i in range(em_instances):
        rng = b.rng()
        t = random_tournament(12, rng)
        s = erdos_moser_signature(t, 3)
        ok = s.size == 9 and is_signature(t, s.vertices)
        b.add(f"Erdos-Moser k=12 p=3 #{i}", ok, f"R={list(s.vertices)}")


def _graph_class_reps(n: int, previous: list[Graph]) -> list[Graph]:
    """Isomorphism-class representatives on n vertices, extending those on n - 1."""
    seen = {}
    for g in previous:
        rows = list(g.rows) + [0]
        for nb in range(1 << (n - 1)):
            r = rows[:]
            r[n - 1] = nb
            for v in range(n - 1):
                if (nb >> v) & 1:
                    r[v] |= 1 << (n - 1)
            h = Graph.from_rows(r)
            key = canonical_form(h)
            if key not in seen:
                seen[key] = Graph(n, key)
    return [seen[key] for key in sorted(seen)]


def _tournament_class_reps(n: int, previous: list[Tournament]) -> list[Tournament]:
    """Isomorphism-class representatives of order n, extending those of order n - 1."""
    seen = {}
    for t in previous:
        rows = list(t.out_rows) + [0]
        for out in range(1 << (n - 1)):
            r = rows[:]
            r[n - 1] = out
            for v in range(n - 1):
                if not (out >> v) & 1:
                    r[v] |= 1 << (n - 1)
            key = canonical_form(Tournament.from_rows(r))
            if key not in seen:
                seen[key] = Tournament(n, key)
    return [seen[key] for key in sorted(seen)]


TOURNAMENT_CLASS_COUNTS = {1: 1, 2: 1, 3: 2, 4: 4, 5: 12, 6: 56, 7: 456, 8: 6880}
GRAPH_CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def suite_gadgets(b: _Builder, sig_instances: int = 50, sym_instances: int = 100, max_order: int = 8) -> None:
    """Signature gadget, clique color gadget (every graph up to order 8), symmetrization."""
    for i in range(sig_instances):
        rng = b.rng()
        while True:
            k = 2 + rng.below(5)
            if i % 5 == 0:
                t = transitive_tournament(k)
                r = tuple(range(2, k + 1, 2))
            else:
                t = random_tournament(k, rng)
                r = min_signature(t).vertices
            if len(r) < k:
                break
        g = random_colored_graph(1 + rng.below(10), k - len(r), rng)
        gstar = signature_gadget(t, r, g)
        lhs = C.count_cf_indsub_to(t, gstar)
        rhs = C.count_cf_clique(k - len(r), g)
        ok = lhs == rhs and gstar.order == g.order + len(r)
        b.add(f"signature gadget {i} k={k} R={list(r)}", ok, f"{lhs} vs {rhs}")
    reps = [Graph(1, 0)]
    for n in range(1, max_order + 1):
        if n > 1:
            reps = _graph_class_reps(n, reps)
        class_ok = len(reps) == GRAPH_CLASS_COUNTS[n]
        if n <= 6:
            graphs = [Graph(n, code) for code in range(1 << num_pairs(n))]
            label = f"all {len(graphs)} labeled graphs"
        else:
            graphs = reps
            label = f"all {len(graphs)} isomorphism classes"
        for k in range(1, 5):
            bad = 0
            for g in graphs:
                if C.count_clique(k, g) != C.count_cf_clique(k, clique_color_gadget(g, k)):
                    bad += 1
            b.add(f"clique gadget n={n} k={k}", bad == 0 and class_ok, f"{label}, {bad} mismatches")
    for i in range(sym_instances):
        rng = b.rng()
        k = 1 + rng.below(4)
        h = random_graph(k, rng)
        g = random_colored_graph(1 + rng.below(8), k, rng)
        got = symmetrize_cp_to_cf(h, g)
        want = C.count_cf_sub(h, g)
        b.add(f"symmetrization {i} k={k}", got == want, f"{got} vs {want}")


def _planted_host(t: Tournament, n: int, rng: SplitMix64) -> Tournament:
    host = random_tournament(n, rng)
    place = rng.sample(range(n), t.order)
    rows = list(host.out_rows)
    for a in range(t.order):
        for c in range(a + 1, t.order):
            x, y = place[a], place[c]
            rows[x] &= ~(1 << y)
            rows[y] &= ~(1 << x)
            if t.has_arc(a + 1, c + 1):
                rows[x] |= 1 << y
            else:
                rows[y] |= 1 << x
    return Tournament.from_rows(rows)


def suite_detection(b: _Builder, pairs: int = 200, em_hosts: int = 100) -> None:
    """Rib-guessing detection against two brute-force deciders; Erdos-Moser extraction."""
    for i in range(pairs):
        rng = b.rng()
        k = 1 + rng.below(6)
        label = "random"
        dec = None
        if i % 4 == 3 and k >= 2:
            k0 = 1 + rng.below(k - 1)
            t = family_Tc(random_tournament(k0, rng), k - k0)
            dec = family_Tc_decomposition(induced(t, range(1, k0 + 1)), k - k0)
            label = f"family k0={k0}"
        else:
            t = random_tournament(k, rng)
        n = k + rng.below(13 - k)
        host = _planted_host(t, n, rng) if rng.next_bit() else random_tournament(n, rng)
        witness = detect_pattern_witness(t, host)
        found = witness is not None
        emb = C.decide_indsub_to(t, host)
        subsets = C.count_indsub_to(t, host) > 0
        ok = found == emb == subsets
        if witness is not None:
            ok = ok and len(set(witness)) == k and are_isomorphic(induced(host, witness), t)
        if dec is not None:
            ok = ok and is_spine_decomposition(t, dec.r_plus, dec.r_minus, dec.spine)
            ok = ok and (detect_pattern_witness(t, host, dec) is not None) == emb
        b.add(f"pair {i} {label} k={k} n={n}", ok, f"detected={int(found)}")
    for i in range(em_hosts):
        rng = b.rng()
        chain = extract_transitive_em(random_tournament(64, rng))
        b.add(f"extraction host {i}", len(chain) >= 7, f"size {len(chain)}")


def _forward_copy_ok(t: Tournament, gstar: Tournament, cstar, verts) -> bool:
    # the copy on ``verts`` must be T itself under the labels c*
    for x in verts:
        for y in verts:
            if x != y and gstar.has_arc(x, y) != t.has_arc(cstar[x - 1], cstar[y - 1]):
                return False
    return True


def _colorful_cliques(g: ColoredGraph) -> list[tuple[int, ...]]:
    out = []
    classes = g.coloring.classes
    rows = g.graph.rows

    def rec(c: int, chosen: list[int]) -> None:
        if c == len(classes):
            out.append(tuple(v + 1 for v in chosen))
            return
        for v in classes[c]:
            if all((rows[u] >> v) & 1 for u in chosen):
                chosen.append(v)
                rec(c + 1, chosen)
                chosen.pop()

    rec(0, [])
    return out


def suite_tt_unique(b: _Builder, exhaustive_order: int = 5, class_order: int = 8,
                    hosts: int = 30, steps: int = 5000, seeds_per_order: int = 3) -> None:
    """Pair criterion vs literal check; TT-unique pattern search and the gadget.

    The criterion is compared on every labeled tournament up to
    ``exhaustive_order`` and on one tournament per isomorphism class above
    that, in both cases for every split with |Z| <= 2. Both checks are
    invariant under relabeling, so the class representatives cover every
    labeled tournament together with every split.
    """
    from itertools import combinations

    reps = [Tournament(1, 0)]
    for k in range(2, class_order + 1):
        reps = _tournament_class_reps(k, reps)
        if k <= exhaustive_order:
            pats = list(_all_tournaments(k))
            scope = f"all {len(pats)} labeled tournaments"
        else:
            pats = reps
            scope = f"all {len(pats)} isomorphism classes"
        class_ok = len(reps) == TOURNAMENT_CLASS_COUNTS[k]
        checked = bad = 0
        for t in pats:
            tt = tt_number(t)[0]
            for z in (0, 1, 2):
                for zs in combinations(range(1, k + 1), z):
                    ds = set(range(1, k + 1)) - set(zs)
                    delta = len(ds) - tt * z
                    checked += 1
                    bad += separating_polynomial(t, ds, delta) != separating_literal(t, ds, delta)
        b.add(f"criterion order {k}", bad == 0 and class_ok, f"{scope}, {checked} splits, {bad} mismatches")

    transcript: list[str] = []
    found = None
    for z in (2, 1):
        for k in (14, 13, 12, 11, 10):
            for s in range(seeds_per_order):
                res = search_local_pattern(k, z, seed=(b.seed * 1000 + k * 10 + s) & ((1 << 64) - 1),
                                           max_steps=steps if z == 1 else steps // 10)
                transcript.extend(res.transcript)
                if res.partition is not None:
                    found = res
                    break
            if found:
                break
        if found:
            break
    if found is None:
        b.skip("TT-unique pattern search", " | ".join(transcript))
        return
    t, part = found.tournament, found.partition
    z = len(part.z)
    b.add(f"TT-unique pattern order {t.order} |Z|={z}", True, transcript[-1])
    for i in range(hosts):
        rng = b.rng()
        g = random_colored_graph(1 + rng.below(12), z, rng)
        gstar = tt_gadget(t, part, g)
        cliques = _colorful_cliques(g)
        cstar = tt_gadget_colors(part, g)
        dstar = range(g.order + 1, gstar.order + 1)
        forward = all(_forward_copy_ok(t, gstar, cstar, list(a) + list(dstar)) for a in cliques)
        detected = C.decide_indsub_to(t, gstar)
        copies = C.count_indsub_to(t, gstar)
        ok = forward and detected == has_colorful_clique(g) and copies == len(cliques)
        b.add(f"gadget host {i} n={g.order}", ok, f"cliques={len(cliques)} copies={copies}")


def suite_minor_structure(b: _Builder) -> None:
    """Treewidth k - 2 and a K_{floor(3k/4)} minor for anti-matchings."""
    for k in range(3, 9):
        tw = treewidth_exact(anti_matching(k))
        b.add(f"treewidth k={k}", tw == k - 2, f"treewidth {tw}")
    for k in range(4, 9):
        b.add(f"clique minor k={k}", has_clique_minor(anti_matching(k), 3 * k // 4), f"K_{3 * k // 4}")


def suite_color_removal(b: _Builder, instances: int = 100) -> None:
    """Inclusion-exclusion over color sets against direct colorful counting."""
    for i in range(instances):
        rng = b.rng()
        k = 1 + rng.below(4)
        t = random_tournament(k, rng)
        host = random_colored_tournament(k + rng.below(11 - k), k, rng)
        direct = C.count_cf_indsub_to(t, host)
        got = cf_from_uncolored(t, host)
        other = sum((-1) ** len(s) * cnt for s, cnt in color_removal_terms(t, host))
        ok = got == direct and other == (-1) ** k * direct
        b.add(f"instance {i} k={k} n={host.order}", ok, f"count {direct}, sign (-1)^|S| gives {other}")


SUITES: dict[str, Callable[[_Builder], None]] = {
    "biased-identity": suite_biased_identity,
    "enumerator-structure": suite_enumerator_structure,
    "antimatching-fast": suite_antimatching_fast,
    "extraction": suite_extraction,
    "signatures": suite_signatures,
    "gadgets": suite_gadgets,
    "detection": suite_detection,
    "tt-unique": suite_tt_unique,
    "minor-structure": suite_minor_structure,
    "color-removal": suite_color_removal,
}


def run_suite(name: str, seed: int, **options) -> Manifest:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    b = _Builder(name, seed & ((1 << 64) - 1))
    start = time.perf_counter()
    SUITES[name](b, **options)
    b.manifest.wall_time = time.perf_counter() - start
    return b.manifest


__all__ = [
    "Case", "Manifest", "SUITES", "run_suite", "PASS", "FAIL", "SKIP",
    "GRAPH_CLASS_COUNTS", "TOURNAMENT_CLASS_COUNTS",
]
