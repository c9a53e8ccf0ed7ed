"""Graphs, ground-state potential matrices, and named bipartitions.

Vertices are integers 0..n-1.  For the d-dimensional hypercube the label of a
vertex is read as a d-bit string, bit a giving the coordinate along axis a,
so vertex 0 is the all-zeros corner and Hamming weight stratifies the graph
into distance shells around it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DefinitenessError,
    EdgeListError,
    GraphSizeError,
    SchemeError,
)

# Largest graph we will represent at all, and the largest one for which we
# agree to materialize dense n x n matrices.
MAX_VERTICES = 1 << 20
MAX_DENSE_VERTICES = 4096
MAX_HYPERCUBE_DIM = 20

_SCHEMES = ("parity", "coordinate", "half_strata")


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph with a canonical edge array.

    edges is an (m, 2) int64 array with i < j in every row, sorted
    lexicographically and free of duplicates.  Instances compare equal iff
    vertex count and edge arrays match exactly.
    """

    n: int
    edges: np.ndarray

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphSizeError("vertex count must be a positive integer")
        if self.n > MAX_VERTICES:
            raise GraphSizeError(
                "vertex count %d exceeds the supported maximum %d"
                % (self.n, MAX_VERTICES)
            )
        e = np.asarray(self.edges, dtype=np.int64)
        if e.ndim != 2 or e.shape[1] != 2:
            raise EdgeListError("edge array must have shape (m, 2)")
        object.__setattr__(self, "edges", e)
        if e.shape[0]:
            if e.min() < 0 or e.max() >= self.n:
                raise EdgeListError("edge endpoint out of range")
            if not (e[:, 0] < e[:, 1]).all():
                raise EdgeListError("edges must satisfy i < j (no self-loops)")
        e.setflags(write=False)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges.tobytes()))

    @property
    def num_edges(self) -> int:
        return int(self.edges.shape[0])

    def degrees(self) -> np.ndarray:
        """Vertex degrees as an int64 vector."""
        return np.bincount(self.edges.ravel(), minlength=self.n).astype(np.int64)

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix (only for n <= MAX_DENSE_VERTICES)."""
        self._check_dense()
        a = np.zeros((self.n, self.n))
        if self.num_edges:
            i, j = self.edges[:, 0], self.edges[:, 1]
            a[i, j] = 1.0
            a[j, i] = 1.0
        return a

    def laplacian(self) -> np.ndarray:
        """Dense combinatorial Laplacian D - A."""
        self._check_dense()
        lap = -self.adjacency_matrix()
        lap[np.diag_indices(self.n)] = self.degrees()
        return lap

    def cut_size(self, cut: "Bipartition") -> int:
        """Number of edges with exactly one endpoint on side A of the cut."""
        if cut.n != self.n:
            raise ValueError("bipartition size does not match graph")
        in_a = np.zeros(self.n, dtype=bool)
        in_a[list(cut.side_a)] = True
        crossings = in_a[self.edges[:, 0]] ^ in_a[self.edges[:, 1]]
        return int(crossings.sum())

    def to_edge_list(self) -> str:
        """Plain-text edge list, one "i j" pair per line."""
        return "\n".join("%d %d" % (i, j) for i, j in self.edges) + "\n"

    def _check_dense(self):
        if self.n > MAX_DENSE_VERTICES:
            raise GraphSizeError(
                "dense matrices limited to %d vertices (graph has %d)"
                % (MAX_DENSE_VERTICES, self.n)
            )


@dataclass(frozen=True)
class Bipartition:
    """A two-sided split of vertices 0..n-1 into non-empty sides A and B."""

    side_a: tuple
    side_b: tuple

    def __post_init__(self):
        a = tuple(sorted(int(v) for v in self.side_a))
        b = tuple(sorted(int(v) for v in self.side_b))
        object.__setattr__(self, "side_a", a)
        object.__setattr__(self, "side_b", b)
        if not a or not b:
            raise ValueError("both sides of a bipartition must be non-empty")
        seen = set(a)
        if len(seen) != len(a) or len(set(b)) != len(b):
            raise ValueError("bipartition sides contain duplicate vertices")
        if seen & set(b):
            raise ValueError("bipartition sides overlap")
        union = sorted(a + b)
        if union[0] != 0 or union[-1] != len(union) - 1:
            raise ValueError("bipartition must cover vertices 0..n-1 exactly")

    @classmethod
    def from_side_a(cls, n: int, side_a) -> "Bipartition":
        """Build a bipartition of 0..n-1 from one side."""
        chosen = set(int(v) for v in side_a)
        if any(v < 0 or v >= n for v in chosen):
            raise ValueError("side A vertex out of range")
        rest = tuple(v for v in range(n) if v not in chosen)
        return cls(tuple(sorted(chosen)), rest)

    @property
    def n(self) -> int:
        return len(self.side_a) + len(self.side_b)


@dataclass(frozen=True, eq=False)
class PotentialMatrix:
    """Ground-state potential matrix V = I + 2g L, certified positive definite.

    The Gaussian ground state of the coupled-oscillator Hamiltonian has
    wavefunction proportional to exp(-x^T V x / 2); everything downstream
    (entropy engines, censuses) consumes this object or its .matrix.
    """

    matrix: np.ndarray
    g: float

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("potential matrix must be square")
        if not np.allclose(m, m.T, rtol=0.0, atol=1e-12):
            raise ValueError("potential matrix must be symmetric")
        try:
            np.linalg.cholesky(m)
        except np.linalg.LinAlgError:
            raise DefinitenessError(
                "potential matrix is not positive definite (g too negative?)"
            ) from None
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "g", float(self.g))

    @property
    def n(self) -> int:
        return self.matrix.shape[0]


def hypercube_graph(d: int) -> Graph:
    """The binary hypercube H(d,2): 2^d vertices, edges between labels at
    Hamming distance 1."""
    if not isinstance(d, int) or not 1 <= d <= MAX_HYPERCUBE_DIM:
        raise GraphSizeError(
            "hypercube dimension must be an integer in 1..%d" % MAX_HYPERCUBE_DIM
        )
    n = 1 << d
    idx = np.arange(n, dtype=np.int64)
    blocks = []
    for a in range(d):
        lo = idx[(idx >> a) & 1 == 0]
        blocks.append(np.column_stack([lo, lo | (1 << a)]))
    edges = np.vstack(blocks)
    order = np.lexsort((edges[:, 1], edges[:, 0]))
    return Graph(n, edges[order])


def graph_from_edge_list(text: str) -> Graph:
    """Parse a plain-text edge list.

    One edge per line as two whitespace-separated non-negative integers.
    Blank lines are skipped and '#' starts a comment.  The vertex count is
    one plus the largest index mentioned; duplicate edges (in either
    orientation) collapse to one.
    """
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListError(
                "expected two vertex indices, got %d tokens" % len(tokens), lineno
            )
        try:
            i, j = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListError("non-integer vertex index", lineno) from None
        if i < 0 or j < 0:
            raise EdgeListError("negative vertex index", lineno)
        if i == j:
            raise EdgeListError("self-loop on vertex %d" % i, lineno)
        pairs.append((min(i, j), max(i, j)))
    if not pairs:
        raise EdgeListError("edge list contains no edges")
    edges = np.array(sorted(set(pairs)), dtype=np.int64)
    n = int(edges.max()) + 1
    return Graph(n, edges)


def graph_from_uri(uri: str) -> Graph:
    """Resolve "hypercube:<d>" or "file:<path>" to a Graph."""
    kind, sep, rest = uri.partition(":")
    if not sep:
        raise ValueError("graph URI must look like hypercube:<d> or file:<path>")
    if kind == "hypercube":
        try:
            d = int(rest)
        except ValueError:
            raise GraphSizeError("hypercube dimension must be an integer") from None
        return hypercube_graph(d)
    if kind == "file":
        with open(rest, "r", encoding="utf-8") as handle:
            return graph_from_edge_list(handle.read())
    raise ValueError("unknown graph URI scheme %r" % kind)


def potential_matrix(graph: Graph, g: float) -> PotentialMatrix:
    """V = I + 2 g L for the graph Laplacian L.

    g >= 0 always yields a positive definite V; mildly negative g is accepted
    as long as definiteness survives (construction verifies it).
    """
    lap = graph.laplacian()
    v = 2.0 * float(g) * lap
    v[np.diag_indices(graph.n)] += 1.0
    return PotentialMatrix(v, float(g))


def hamming_weights(d: int) -> np.ndarray:
    """Hamming weight of every d-bit label 0..2^d-1."""
    if not isinstance(d, int) or not 1 <= d <= MAX_HYPERCUBE_DIM:
        raise GraphSizeError(
            "hypercube dimension must be an integer in 1..%d" % MAX_HYPERCUBE_DIM
        )
    idx = np.arange(1 << d, dtype=np.int64)
    w = np.zeros(1 << d, dtype=np.int64)
    for a in range(d):
        w += (idx >> a) & 1
    return w


def strata_partition(d: int) -> list:
    """Vertices of H(d,2) grouped by Hamming weight, weight 0 first.

    Stratum k has binomial(d, k) vertices; the strata are the distance
    shells around vertex 0.
    """
    w = hamming_weights(d)
    return [np.flatnonzero(w == k).tolist() for k in range(d + 1)]


def named_bipartition(d: int, scheme: str, axis: int | None = None) -> Bipartition:
    """One of the structured equal bipartitions of H(d,2).

    parity      side A = even Hamming weight labels.
    coordinate  side A = labels with bit `axis` clear (axis defaults to 0);
                this is the cut between two opposite facets.
    half_strata side A = strata 0..(d-1)/2, defined only for odd d.
    """
    if scheme not in _SCHEMES:
        raise SchemeError(
            "unknown scheme %r (choose from %s)" % (scheme, ", ".join(_SCHEMES))
        )
    w = hamming_weights(d)
    n = 1 << d
    if scheme == "parity":
        side_a = np.flatnonzero(w % 2 == 0)
    elif scheme == "coordinate":
        if axis is None:
            axis = 0
        if not 0 <= axis < d:
            raise SchemeError("coordinate axis %r out of range for d=%d" % (axis, d))
        idx = np.arange(n, dtype=np.int64)
        side_a = np.flatnonzero((idx >> axis) & 1 == 0)
    else:
        if d % 2 == 0:
            raise SchemeError("half_strata is defined only for odd d")
        side_a = np.flatnonzero(w <= (d - 1) // 2)
    return Bipartition.from_side_a(n, side_a.tolist())
