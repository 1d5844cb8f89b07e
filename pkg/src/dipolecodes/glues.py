"""Glue functions, bond graphs, and bipartition machinery."""

from collections import deque
from dataclasses import dataclass


class ConflictingEntry(ValueError):
    """Duplicate (i, j) glue entries with different values."""


@dataclass(frozen=True)
class GlueFunction:
    """Symmetric integer bonding-strength table over glue indices 1..k."""

    k: int
    values: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("glue count must be non-negative")
        if len(self.values) != self.k or any(len(row) != self.k for row in self.values):
            raise ValueError(f"value table must be {self.k}x{self.k}")
        for i in range(self.k):
            for j in range(i + 1, self.k):
                if self.values[i][j] != self.values[j][i]:
                    raise ValueError(
                        f"asymmetric glue table at ({i + 1}, {j + 1}): "
                        f"{self.values[i][j]} != {self.values[j][i]}"
                    )

    def value(self, i: int, j: int) -> int:
        """Bond strength between glues i and j (1-based indices)."""
        if not (1 <= i <= self.k and 1 <= j <= self.k):
            raise IndexError(f"glue index out of range: ({i}, {j}) with k={self.k}")
        return self.values[i - 1][j - 1]

    def row(self, i: int) -> tuple[int, ...]:
        """Row i of the value table (1-based)."""
        return self.values[i - 1]


@dataclass(frozen=True)
class BondGraph:
    """Graph on glue indices with an edge wherever the glue value is positive.

    Edges are unordered pairs (i, j) with i <= j; a positive diagonal entry
    shows up as the loop (i, i).
    """

    vertex_count: int
    edges: frozenset


def make_glue(k: int, entries=()) -> GlueFunction:
    """Build a glue function from sparse (i, j, value) entries.

    Unspecified pairs default to 0. (i, j) and (j, i) are the same slot, so
    duplicate entries must carry equal values.
    """
    table = [[0] * k for _ in range(k)]
    seen = {}
    for i, j, value in entries:
        if not (1 <= i <= k and 1 <= j <= k):
            raise IndexError(f"glue index out of range: ({i}, {j}) with k={k}")
        key = (min(i, j), max(i, j))
        if key in seen and seen[key] != value:
            raise ConflictingEntry(
                f"conflicting values for glue pair {key}: {seen[key]} and {value}"
            )
        seen[key] = value
        table[i - 1][j - 1] = value
        table[j - 1][i - 1] = value
    return GlueFunction(k, tuple(tuple(row) for row in table))


def canonical_unsigned(k: int) -> GlueFunction:
    """Each glue bonds to itself and nothing else."""
    return GlueFunction(
        k, tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))
    )


def canonical_signed(pairs: int) -> GlueFunction:
    """2*pairs glues in complementary pairs: (2a-1, 2a) bond, nothing else."""
    k = 2 * pairs
    def entry(i, j):
        lo, hi = min(i, j), max(i, j)
        return 1 if (lo % 2 == 1 and hi == lo + 1) else 0
    return GlueFunction(
        k, tuple(tuple(entry(i + 1, j + 1) for j in range(k)) for i in range(k))
    )


def bond_graph(glue: GlueFunction) -> BondGraph:
    """The graph with an edge (or loop) wherever the glue value is positive."""
    edges = set()
    for i in range(1, glue.k + 1):
        for j in range(i, glue.k + 1):
            if glue.value(i, j) > 0:
                edges.add((i, j))
    return BondGraph(glue.k, frozenset(edges))


def bipartition(glue: GlueFunction):
    """Split glue indices so every bond crosses sides, larger side first.

    Returns (v1, v2) as frozensets with |v1| >= |v2|, or None when the bond
    graph is not 2-colorable. A positive diagonal entry is a loop and always
    disqualifies. Isolated vertices land in v1; on a tied component the side
    containing its smallest vertex goes to v1.
    """
    k = glue.k
    adjacency = [[] for _ in range(k + 1)]
    for i in range(1, k + 1):
        if glue.value(i, i) > 0:
            return None  # a loop is an odd cycle
        for j in range(i + 1, k + 1):
            if glue.value(i, j) > 0:
                adjacency[i].append(j)
                adjacency[j].append(i)
    color = [None] * (k + 1)
    v1, v2 = set(), set()
    for start in range(1, k + 1):
        if color[start] is not None:
            continue
        color[start] = 0
        sides = ([start], [])
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adjacency[u]:
                if color[w] is None:
                    color[w] = color[u] ^ 1
                    sides[color[w]].append(w)
                    queue.append(w)
                elif color[w] == color[u]:
                    return None  # odd cycle
        # The larger side of each component joins v1, so |v1| >= |v2| holds
        # globally; ties keep the side with the component's smallest vertex.
        if len(sides[1]) > len(sides[0]):
            big, small = sides[1], sides[0]
        else:
            big, small = sides
        v1.update(big)
        v2.update(small)
    return frozenset(v1), frozenset(v2)


def signed_double(glue: GlueFunction) -> GlueFunction:
    """Double a glue function into a bipartite one over 2k glues.

    Glue i splits into the pair (i, i+k); every bond (i, j) becomes the two
    cross bonds (i, j+k) and (j, i+k). All bonds of the result cross the
    blocks {1..k} and {k+1..2k}, so its bond graph is always bipartite, and
    self-bonding glues lose their loops.
    """
    k = glue.k
    n = 2 * k
    table = [[0] * n for _ in range(n)]
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            v = glue.value(i, j)
            table[i - 1][k + j - 1] = v
            table[k + j - 1][i - 1] = v
    return GlueFunction(n, tuple(tuple(row) for row in table))
