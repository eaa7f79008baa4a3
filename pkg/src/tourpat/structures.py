"""Labeled tournaments, graphs, colorings and permutations.

Both tournaments and graphs on ``[k]`` are stored as one integer with a bit per
unordered pair ``{i, j}``, ``i < j``; pairs are numbered in lexicographic order
((1,2), (1,3), ..., (1,k), (2,3), ...). For a tournament the bit of ``{i, j}``
is set iff the arc is ``i -> j``; for a graph it is set iff ``{i, j}`` is an edge.

Vertices are 1-based in every public function. Internally, adjacency rows are
integers over 0-based vertex positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .rng import SplitMix64


@lru_cache(maxsize=None)
def pair_list(k: int) -> tuple[tuple[int, int], ...]:
    """0-based pairs ``(i, j)``, ``i < j``, in bit order."""
    return tuple((i, j) for i in range(k) for j in range(i + 1, k))


@lru_cache(maxsize=None)
def pair_index_table(k: int) -> tuple[tuple[int, ...], ...]:
    """Symmetric 0-based table ``t[i][j]`` giving the bit of pair ``{i, j}`` (-1 on the diagonal)."""
    t = [[-1] * k for _ in range(k)]
    for b, (i, j) in enumerate(pair_list(k)):
        t[i][j] = t[j][i] = b
    return tuple(tuple(row) for row in t)


def num_pairs(k: int) -> int:
    return k * (k - 1) // 2


def pair_index(i: int, j: int, k: int) -> int:
    """Bit index of the 1-based pair ``{i, j}`` in a structure of order ``k``."""
    if i == j or not (1 <= i <= k and 1 <= j <= k):
        raise ValueError(f"invalid pair ({i}, {j}) for order {k}")
    if i > j:
        i, j = j, i
    return (i - 1) * (2 * k - i) // 2 + (j - i - 1)


def full_mask(k: int) -> int:
    return (1 << num_pairs(k)) - 1


def rows_to_bits(rows: Sequence[int], k: int) -> int:
    """Pair bitmask from 0-based adjacency rows (bit of ``{i<j}`` read from ``rows[i]``)."""
    bits = 0
    b = 0
    for i in range(k):
        r = rows[i]
        for j in range(i + 1, k):
            if (r >> j) & 1:
                bits |= 1 << b
            b += 1
    return bits


def induced_code(rows: Sequence[int], verts: Sequence[int]) -> int:
    """Pair bitmask of the structure induced on ``verts`` (0-based, in the given order)."""
    code = 0
    b = 0
    m = len(verts)
    for a in range(m):
        r = rows[verts[a]]
        for c in range(a + 1, m):
            if (r >> verts[c]) & 1:
                code |= 1 << b
            b += 1
    return code


def _check_order(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"order must be a positive integer, got {k!r}")


@dataclass(frozen=True)
class Tournament:
    """Tournament on ``[order]``; bit of pair ``{i<j}`` set iff ``i -> j``."""

    order: int
    bits: int

    def __post_init__(self):
        _check_order(self.order)
        if not 0 <= self.bits <= full_mask(self.order):
            raise ValueError("orientation bitmask out of range")

    @classmethod
    def from_arcs(cls, k: int, arcs: Iterable[tuple[int, int]]) -> "Tournament":
        """Build from 1-based arcs; every pair must appear exactly once."""
        seen = set()
        bits = 0
        for u, v in arcs:
            b = pair_index(u, v, k)
            if b in seen:
                raise ValueError(f"pair {{{u}, {v}}} oriented twice")
            seen.add(b)
            if u < v:
                bits |= 1 << b
        if len(seen) != num_pairs(k):
            raise ValueError("not every pair is oriented")
        return cls(k, bits)

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Tournament":
        """Build from 0-based out-neighborhood rows (rows are assumed consistent)."""
        return cls(len(rows), rows_to_bits(rows, len(rows)))

    @cached_property
    def out_rows(self) -> tuple[int, ...]:
        k = self.order
        rows = [0] * k
        bits = self.bits
        for b, (i, j) in enumerate(pair_list(k)):
            if (bits >> b) & 1:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
        return tuple(rows)

    @cached_property
    def in_rows(self) -> tuple[int, ...]:
        everyone = (1 << self.order) - 1
        return tuple(everyone ^ r ^ (1 << v) for v, r in enumerate(self.out_rows))

    @property
    def vertices(self) -> range:
        return range(1, self.order + 1)

    def has_arc(self, u: int, v: int) -> bool:
        """True iff ``u -> v`` (1-based)."""
        b = (self.bits >> pair_index(u, v, self.order)) & 1
        return bool(b) if u < v else not b

    def arcs(self) -> list[tuple[int, int]]:
        out = []
        for b, (i, j) in enumerate(pair_list(self.order)):
            out.append((i + 1, j + 1) if (self.bits >> b) & 1 else (j + 1, i + 1))
        return out

    def out_neighbors(self, v: int) -> set[int]:
        r = self.out_rows[v - 1]
        return {u + 1 for u in range(self.order) if (r >> u) & 1}

    def in_neighbors(self, v: int) -> set[int]:
        r = self.in_rows[v - 1]
        return {u + 1 for u in range(self.order) if (r >> u) & 1}

    def scores(self) -> tuple[int, ...]:
        """Out-degree of each vertex, in vertex order."""
        return tuple(r.bit_count() for r in self.out_rows)

    def reverse(self) -> "Tournament":
        return Tournament(self.order, self.bits ^ full_mask(self.order))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``[order]``; bit of pair ``{i<j}`` set iff it is an edge."""

    order: int
    bits: int

    def __post_init__(self):
        _check_order(self.order)
        if not 0 <= self.bits <= full_mask(self.order):
            raise ValueError("edge bitmask out of range")

    @classmethod
    def from_edges(cls, k: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        bits = 0
        for u, v in edges:
            bits |= 1 << pair_index(u, v, k)
        return cls(k, bits)

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        return cls(len(rows), rows_to_bits(rows, len(rows)))

    @cached_property
    def rows(self) -> tuple[int, ...]:
        k = self.order
        rows = [0] * k
        bits = self.bits
        for b, (i, j) in enumerate(pair_list(k)):
            if (bits >> b) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        return tuple(rows)

    @property
    def vertices(self) -> range:
        return range(1, self.order + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.bits >> pair_index(u, v, self.order)) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i + 1, j + 1) for b, (i, j) in enumerate(pair_list(self.order)) if (self.bits >> b) & 1]

    @property
    def num_edges(self) -> int:
        return self.bits.bit_count()

    def neighbors(self, v: int) -> set[int]:
        r = self.rows[v - 1]
        return {u + 1 for u in range(self.order) if (r >> u) & 1}

    def degree(self, v: int) -> int:
        return self.rows[v - 1].bit_count()

    def complement(self) -> "Graph":
        return Graph(self.order, self.bits ^ full_mask(self.order))

    def is_subgraph_of(self, other: "Graph") -> bool:
        """Edge-subgraph test on the same labeled vertex set."""
        return self.order == other.order and self.bits & ~other.bits == 0


@dataclass(frozen=True)
class Coloring:
    """Map from host vertices ``1..n`` to colors in ``[palette]``."""

    palette: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.palette < 1:
            raise ValueError("palette must be positive")
        object.__setattr__(self, "colors", tuple(self.colors))
        for v, c in enumerate(self.colors, start=1):
            if not 1 <= c <= self.palette:
                raise ValueError(f"color {c} of vertex {v} outside [1, {self.palette}]")

    def __len__(self) -> int:
        return len(self.colors)

    def color(self, v: int) -> int:
        return self.colors[v - 1]

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        """0-based vertices of each color class, indexed by ``color - 1``."""
        out: list[list[int]] = [[] for _ in range(self.palette)]
        for v, c in enumerate(self.colors):
            out[c - 1].append(v)
        return tuple(tuple(x) for x in out)

    def relabel(self, perm: "Permutation") -> "Coloring":
        """The coloring ``perm o c``."""
        if len(perm) != self.palette:
            raise ValueError("permutation size does not match palette")
        return Coloring(self.palette, tuple(perm(c) for c in self.colors))


@dataclass(frozen=True)
class ColoredGraph:
    graph: Graph
    coloring: Coloring

    def __post_init__(self):
        if len(self.coloring) != self.graph.order:
            raise ValueError("coloring length differs from host order")

    @property
    def order(self) -> int:
        return self.graph.order

    @property
    def palette(self) -> int:
        return self.coloring.palette


@dataclass(frozen=True)
class ColoredTournament:
    tournament: Tournament
    coloring: Coloring

    def __post_init__(self):
        if len(self.coloring) != self.tournament.order:
            raise ValueError("coloring length differs from host order")

    @property
    def order(self) -> int:
        return self.tournament.order

    @property
    def palette(self) -> int:
        return self.coloring.palette


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``[k]`` given by its 1-based image sequence."""

    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f"not a permutation: {self.image}")

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(tuple(range(1, k + 1)))

    def __len__(self) -> int:
        return len(self.image)

    def __call__(self, v: int) -> int:
        return self.image[v - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for i, x in enumerate(self.image, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """``self o other``."""
        return Permutation(tuple(self(other(v)) for v in range(1, len(other) + 1)))


# --- named objects -------------------------------------------------------

def transitive_tournament(k: int) -> Tournament:
    """TT_k: ``i -> j`` iff ``i < j``."""
    _check_order(k)
    return Tournament(k, full_mask(k))


def triangle() -> Tournament:
    """The cyclic triangle 1 -> 2 -> 3 -> 1."""
    return Tournament.from_arcs(3, [(1, 2), (2, 3), (3, 1)])


def flipped_transitive(k: int) -> Tournament:
    """TT_k with the pair ``{floor(k/2) - 1, floor(k/2) + 1}`` reversed (needs k >= 4)."""
    if k < 4:
        raise ValueError("needs k >= 4")
    h = k // 2
    return Tournament(k, full_mask(k) ^ (1 << pair_index(h - 1, h + 1, k)))


def complete_graph(k: int) -> Graph:
    _check_order(k)
    return Graph(k, full_mask(k))


def empty_graph(k: int) -> Graph:
    _check_order(k)
    return Graph(k, 0)


def matching(k: int) -> Graph:
    """M_k with edges {1,2}, {3,4}, ... (the last vertex stays unmatched for odd k)."""
    _check_order(k)
    return Graph.from_edges(k, [(2 * i - 1, 2 * i) for i in range(1, k // 2 + 1)])


def anti_matching(k: int) -> Graph:
    """Complement of :func:`matching`."""
    return matching(k).complement()


# --- generic operations --------------------------------------------------

def _rows_of(x: Tournament | Graph) -> tuple[int, ...]:
    return x.out_rows if isinstance(x, Tournament) else x.rows


def induced(x: Tournament | Graph, vertices: Iterable[int]):
    """Substructure induced by a 1-based vertex set, relabeled by rank."""
    verts = sorted(set(vertices))
    if not verts:
        raise ValueError("induced structure needs a non-empty vertex set")
    if verts[0] < 1 or verts[-1] > x.order:
        raise ValueError("vertex outside the structure")
    code = induced_code(_rows_of(x), [v - 1 for v in verts])
    return type(x)(len(verts), code)


def is_transitive(t: Tournament) -> tuple[bool, tuple[int, ...] | None]:
    """Whether ``t`` is acyclic, with its vertices by decreasing out-degree if so."""
    scores = t.scores()
    if sorted(scores) != list(range(t.order)):
        return False, None
    order = sorted(t.vertices, key=lambda v: -scores[v - 1])
    return True, tuple(order)


def _permute_bits(bits: int, k: int, image: Sequence[int], directed: bool) -> int:
    # image is 0-based
    idx = pair_index_table(k)
    out = 0
    for b, (i, j) in enumerate(pair_list(k)):
        si, sj = image[i], image[j]
        bit = (bits >> b) & 1
        if directed:
            # arc i->j (bit set) becomes si->sj
            if (si < sj) == bool(bit):
                out |= 1 << idx[si][sj]
        elif bit:
            out |= 1 << idx[si][sj]
    return out


def apply_permutation(x: Tournament | Graph, sigma: Permutation):
    """``x^sigma`` with arcs/edges ``(sigma(u), sigma(v))``."""
    if len(sigma) != x.order:
        raise ValueError("permutation size does not match order")
    image = [s - 1 for s in sigma.image]
    return type(x)(x.order, _permute_bits(x.bits, x.order, image, isinstance(x, Tournament)))


def symdiff_edges(t1: Tournament, t2: Tournament) -> set[tuple[int, int]]:
    """Pairs on which the two tournaments disagree, as 1-based ``(i, j)`` with ``i < j``."""
    if t1.order != t2.order:
        raise ValueError("tournaments of different order")
    diff = t1.bits ^ t2.bits
    return {(i + 1, j + 1) for b, (i, j) in enumerate(pair_list(t1.order)) if (diff >> b) & 1}


def _rng(seed_or_rng) -> SplitMix64:
    return seed_or_rng if isinstance(seed_or_rng, SplitMix64) else SplitMix64(seed_or_rng)


def random_tournament(k: int, seed) -> Tournament:
    """Uniform tournament; pair bits come from the splitmix64 stream in pair order."""
    _check_order(k)
    return Tournament(k, _rng(seed).bits(num_pairs(k)))


def random_graph(k: int, seed) -> Graph:
    """Uniform labeled graph (edge probability 1/2), same bit stream as tournaments."""
    _check_order(k)
    return Graph(k, _rng(seed).bits(num_pairs(k)))


def random_coloring(n: int, palette: int, seed) -> Coloring:
    rng = _rng(seed)
    return Coloring(palette, tuple(rng.below(palette) + 1 for _ in range(n)))


def random_colored_graph(n: int, palette: int, seed) -> ColoredGraph:
    rng = _rng(seed)
    g = random_graph(n, rng)
    return ColoredGraph(g, random_coloring(n, palette, rng))


def random_colored_tournament(n: int, palette: int, seed) -> ColoredTournament:
    rng = _rng(seed)
    t = random_tournament(n, rng)
    return ColoredTournament(t, random_coloring(n, palette, rng))
