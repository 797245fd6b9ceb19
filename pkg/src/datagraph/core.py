"""Attribute-bearing graph model with columnar node/edge data storage.

A :class:`DataGraph` keeps an ordered node registry, an ordered edge
registry of index pairs, per-node adjacency lists, and three attribute
stores: a dense node table, a dense edge table, and a scalar map for
graph-level values. Node and edge data live in :class:`AttributeTable`
objects where each row is one entity and each named attribute is one
column, so an attribute name is stored once no matter how many entities
carry it.

Node keys may be 64-bit integers, text strings, or tuples of two or
three integers (the tuple form names matrix/tensor entries like
``(i, j)``). Keys of different shapes never collide.

Undirected edges are stored canonically with the smaller node index
first. Self-loops and duplicate edges are rejected. All indices quoted
in error messages are 1-based; internal storage is 0-based.
"""

from __future__ import annotations

from bisect import insort
from typing import Iterable, Optional, Sequence, Union

import numpy as np
import scipy.sparse as sp

from .errors import (
    KindMismatchError,
    LengthMismatchError,
    SelfLoopError,
    UnknownAttributeError,
    UnknownEdgeError,
    UnknownNodeError,
)

UNDIRECTED = "undirected"
DIRECTED = "directed"

NodeKey = Union[int, str, tuple]


def check_key(key) -> NodeKey:
    """Validate and normalize a node key.

    Accepts integers (not booleans), strings, and tuples of 2 or 3
    integers. Integer-like values such as numpy ints are coerced to
    plain ``int`` so hashing is stable across input sources.
    """
    if isinstance(key, bool):
        raise TypeError("booleans are not valid node keys")
    if isinstance(key, str):
        return key
    if isinstance(key, tuple):
        if len(key) not in (2, 3):
            raise TypeError(f"tuple keys must have 2 or 3 entries, got {len(key)}")
        out = []
        for part in key:
            if isinstance(part, bool) or not hasattr(part, "__index__"):
                raise TypeError(f"tuple key entries must be integers, got {part!r}")
            out.append(int(part))
        return tuple(out)
    if hasattr(key, "__index__"):
        return int(key)
    raise TypeError(
        f"node keys must be int, str, or a 2/3-tuple of ints, got {type(key).__name__}"
    )


def key_text(key: NodeKey) -> str:
    """Render a key the way file formats and error messages spell it."""
    if isinstance(key, tuple):
        return "(" + ",".join(str(p) for p in key) + ")"
    return str(key)


class AttributeTable:
    """Dense float64 table: rows are entities, columns are named attributes.

    Cells that were never written hold the fill value 0.0. Columns are
    append/overwrite only.
    """

    def __init__(self, n_rows: int = 0):
        self._values = np.zeros((n_rows, 0), dtype=np.float64)
        self.attribute_names: list[str] = []
        self.attribute_map: dict[str, int] = {}

    @property
    def n_rows(self) -> int:
        return self._values.shape[0]

    @property
    def n_cols(self) -> int:
        return self._values.shape[1]

    def has(self, name: str) -> bool:
        return name in self.attribute_map

    def _require(self, name: str) -> int:
        try:
            return self.attribute_map[name]
        except KeyError:
            raise UnknownAttributeError(
                f"unknown attribute {name!r}; have {self.attribute_names}"
            ) from None

    def ensure_column(self, name: str) -> int:
        """Return the column index for ``name``, appending a zero-filled
        column if the attribute is new."""
        if not isinstance(name, str) or not name:
            raise TypeError("attribute names must be nonempty strings")
        if name in self.attribute_map:
            return self.attribute_map[name]
        col = np.zeros((self.n_rows, 1), dtype=np.float64)
        self._values = np.hstack([self._values, col]) if self.n_cols else col
        self.attribute_map[name] = len(self.attribute_names)
        self.attribute_names.append(name)
        return self.attribute_map[name]

    def set_cell(self, row: int, name: str, value: float) -> None:
        col = self.ensure_column(name)
        self._values[row, col] = float(value)

    def set_column(self, name: str, values) -> None:
        values = np.asarray(values, dtype=np.float64).reshape(-1)
        if values.shape[0] != self.n_rows:
            raise LengthMismatchError(
                f"dataset has {values.shape[0]} values but the table has "
                f"{self.n_rows} rows"
            )
        col = self.ensure_column(name)
        self._values[:, col] = values

    def column(self, name: str) -> np.ndarray:
        return self._values[:, self._require(name)].copy()

    def matrix(self) -> np.ndarray:
        return self._values.copy()

    def append_rows(self, count: int = 1) -> None:
        if count:
            self._values = np.vstack(
                [self._values, np.zeros((count, self.n_cols), dtype=np.float64)]
            )

    def take_rows(self, rows: Sequence[int]) -> "AttributeTable":
        """New table with the same columns and the selected rows, in order."""
        out = AttributeTable(0)
        out._values = self._values[np.asarray(rows, dtype=np.intp)].copy()
        out.attribute_names = list(self.attribute_names)
        out.attribute_map = dict(self.attribute_map)
        return out

    def permute_rows(self, perm: Sequence[int]) -> None:
        self._values = self._values[np.asarray(perm, dtype=np.intp)]

    def row(self, i: int) -> np.ndarray:
        return self._values[i].copy()

    def copy(self) -> "AttributeTable":
        return self.take_rows(range(self.n_rows))

    def __eq__(self, other) -> bool:
        if not isinstance(other, AttributeTable):
            return NotImplemented
        return self.attribute_names == other.attribute_names and np.array_equal(
            self._values, other._values, equal_nan=True
        )

    def __repr__(self) -> str:
        return f"AttributeTable({self.n_rows} rows, {self.attribute_names})"


class DataGraph:
    """Graph with named nodes, indexed edges, and columnar attribute data.

    Parameters
    ----------
    kind:
        ``"undirected"`` or ``"directed"``. Directed graphs keep
        separate out- and in-neighbor lists and treat ``(u, v)`` and
        ``(v, u)`` as distinct edges.
    """

    def __init__(self, kind: str = UNDIRECTED):
        if kind not in (UNDIRECTED, DIRECTED):
            raise ValueError(f"kind must be {UNDIRECTED!r} or {DIRECTED!r}")
        self.kind = kind
        self.nodes: list[NodeKey] = []
        self.node_map: dict[NodeKey, int] = {}
        self.edges: list[tuple[int, int]] = []
        self.edge_map: dict[tuple[int, int], int] = {}
        self._adj_out: list[list[int]] = []
        self._adj_in: Optional[list[list[int]]] = [] if kind == DIRECTED else None
        self.node_data = AttributeTable()
        self.edge_data = AttributeTable()
        self.graph_data: dict[str, float] = {}

    @classmethod
    def undirected(cls) -> "DataGraph":
        return cls(UNDIRECTED)

    @classmethod
    def directed(cls) -> "DataGraph":
        return cls(DIRECTED)

    @property
    def is_directed(self) -> bool:
        return self.kind == DIRECTED

    @property
    def num_nodes(self) -> int:
        return len(self.nodes)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    # -- node and edge registration --------------------------------------

    def add_node(self, key) -> bool:
        """Register a node. Returns False without change if the key exists."""
        key = check_key(key)
        if key in self.node_map:
            return False
        self.node_map[key] = len(self.nodes)
        self.nodes.append(key)
        self._adj_out.append([])
        if self._adj_in is not None:
            self._adj_in.append([])
        self.node_data.append_rows(1)
        return True

    def node_index(self, key) -> int:
        """0-based index of a registered key."""
        key = check_key(key)
        try:
            return self.node_map[key]
        except KeyError:
            raise UnknownNodeError(f"unknown node {key_text(key)}") from None

    def has_node(self, key) -> bool:
        try:
            return check_key(key) in self.node_map
        except TypeError:
            return False

    def _canonical(self, iu: int, iv: int) -> tuple[int, int]:
        if self.is_directed or iu < iv:
            return (iu, iv)
        return (iv, iu)

    def add_edge(self, u, v) -> bool:
        """Register an edge, auto-registering unknown endpoint keys.

        Undirected edges are stored with the smaller node index first;
        adding the reverse of an existing undirected edge is a no-op.
        Returns False without change if the edge already exists.
        """
        ku, kv = check_key(u), check_key(v)
        if ku == kv:
            raise SelfLoopError(f"self-loop on {key_text(ku)} is not allowed")
        self.add_node(ku)
        self.add_node(kv)
        iu, iv = self.node_map[ku], self.node_map[kv]
        edge = self._canonical(iu, iv)
        if edge in self.edge_map:
            return False
        self.edge_map[edge] = len(self.edges)
        self.edges.append(edge)
        if self.is_directed:
            insort(self._adj_out[edge[0]], edge[1])
            insort(self._adj_in[edge[1]], edge[0])
        else:
            insort(self._adj_out[edge[0]], edge[1])
            insort(self._adj_out[edge[1]], edge[0])
        self.edge_data.append_rows(1)
        return True

    def edge_index(self, u, v) -> int:
        """0-based index of an edge given its endpoint keys."""
        iu = self.node_index(u)
        iv = self.node_index(v)
        edge = self._canonical(iu, iv)
        try:
            return self.edge_map[edge]
        except KeyError:
            raise UnknownEdgeError(
                f"no edge between {key_text(check_key(u))} and "
                f"{key_text(check_key(v))}"
            ) from None

    def has_edge(self, u, v) -> bool:
        try:
            iu = self.node_map[check_key(u)]
            iv = self.node_map[check_key(v)]
        except (KeyError, TypeError):
            return False
        return self._canonical(iu, iv) in self.edge_map

    # -- attribute data ---------------------------------------------------

    def add_node_data(self, key, value: float, attr: str) -> None:
        """Set one node's value for ``attr``, creating the column if new."""
        self.node_data.set_cell(self.node_index(key), attr, value)

    def add_node_dataset(self, values, attr: str) -> None:
        """Set ``attr`` for every node at once, in node-index order."""
        self.node_data.set_column(attr, values)

    def add_edge_data(self, u, v, value: float, attr: str) -> None:
        row = self._edge_row(u, v)
        self.edge_data.set_cell(row, attr, value)

    def add_edge_dataset(self, values, attr: str) -> None:
        self.edge_data.set_column(attr, values)

    def add_graph_data(self, value: float, attr: str) -> None:
        if not isinstance(attr, str) or not attr:
            raise TypeError("attribute names must be nonempty strings")
        self.graph_data[attr] = float(value)

    def _edge_row(self, u, v) -> int:
        ku, kv = check_key(u), check_key(v)
        if ku not in self.node_map or kv not in self.node_map:
            raise UnknownEdgeError(
                f"no edge between {key_text(ku)} and {key_text(kv)}"
            )
        edge = self._canonical(self.node_map[ku], self.node_map[kv])
        if edge not in self.edge_map:
            raise UnknownEdgeError(
                f"no edge between {key_text(ku)} and {key_text(kv)}"
            )
        return self.edge_map[edge]

    def get_node_data(self, attr: Optional[str] = None) -> np.ndarray:
        """Copy of one node column, or of the whole node table."""
        if attr is None:
            return self.node_data.matrix()
        return self.node_data.column(attr)

    def get_edge_data(self, attr: Optional[str] = None) -> np.ndarray:
        if attr is None:
            return self.edge_data.matrix()
        return self.edge_data.column(attr)

    # -- canonical edge ordering ------------------------------------------

    def _edge_order(self) -> list[int]:
        """Permutation that sorts edges by (source, destination) index.

        Undirected edges are already stored as (min, max), so the sort
        groups all edges touching the lowest-indexed node first, which
        is the row order neural-network toolkits expect for edge data.
        """
        return sorted(range(len(self.edges)), key=self.edges.__getitem__)

    def get_ordered_edge_data(self, attr: Optional[str] = None) -> np.ndarray:
        """Edge data rows permuted into canonical edge order; no mutation."""
        perm = np.asarray(self._edge_order(), dtype=np.intp)
        if attr is None:
            return self.edge_data.matrix()[perm]
        return self.edge_data.column(attr)[perm]

    def order_edges(self) -> None:
        """Permute the edge registry and data rows into canonical order.

        Afterwards ``get_edge_data`` and ``get_ordered_edge_data`` agree.
        Idempotent.
        """
        perm = self._edge_order()
        self.edges = [self.edges[p] for p in perm]
        self.edge_map = {e: i for i, e in enumerate(self.edges)}
        self.edge_data.permute_rows(perm)

    # -- adjacency queries --------------------------------------------------

    def neighbors(self, key) -> list[NodeKey]:
        """Neighbor keys in ascending node-index order. For directed
        graphs this is the union of in- and out-neighbors."""
        i = self.node_index(key)
        if self.is_directed:
            idx = sorted(set(self._adj_out[i]) | set(self._adj_in[i]))
        else:
            idx = self._adj_out[i]
        return [self.nodes[j] for j in idx]

    def out_neighbors(self, key) -> list[NodeKey]:
        if not self.is_directed:
            raise KindMismatchError("out_neighbors requires a directed graph")
        return [self.nodes[j] for j in self._adj_out[self.node_index(key)]]

    def in_neighbors(self, key) -> list[NodeKey]:
        if not self.is_directed:
            raise KindMismatchError("in_neighbors requires a directed graph")
        return [self.nodes[j] for j in self._adj_in[self.node_index(key)]]

    def adjacency_matrix(self) -> sp.csr_matrix:
        """Sparse boolean adjacency; symmetric iff the graph is undirected."""
        n = self.num_nodes
        if not self.edges:
            return sp.csr_matrix((n, n), dtype=bool)
        arr = np.asarray(self.edges, dtype=np.intp)
        rows, cols = arr[:, 0], arr[:, 1]
        if not self.is_directed:
            rows, cols = np.concatenate([rows, cols]), np.concatenate([cols, rows])
        data = np.ones(rows.shape[0], dtype=bool)
        return sp.csr_matrix((data, (rows, cols)), shape=(n, n))

    # -- structural plumbing -----------------------------------------------

    @classmethod
    def _bulk(
        cls,
        kind: str,
        keys: Iterable[NodeKey],
        edge_pairs: Iterable[tuple[int, int]],
    ) -> "DataGraph":
        """Build a graph from pre-validated parts.

        ``keys`` must be unique, already normalized; ``edge_pairs`` must
        be unique 0-based pairs, canonical (u < v) when undirected, with
        no self-loops. Attribute tables come out empty with the right
        row counts.
        """
        g = cls(kind)
        g.nodes = list(keys)
        g.node_map = {k: i for i, k in enumerate(g.nodes)}
        g.edges = [tuple(e) for e in edge_pairs]
        g.edge_map = {e: i for i, e in enumerate(g.edges)}
        n = len(g.nodes)
        out_adj: list[list[int]] = [[] for _ in range(n)]
        in_adj: Optional[list[list[int]]] = None
        if kind == DIRECTED:
            in_adj = [[] for _ in range(n)]
            for u, v in g.edges:
                out_adj[u].append(v)
                in_adj[v].append(u)
            for lst in in_adj:
                lst.sort()
        else:
            for u, v in g.edges:
                out_adj[u].append(v)
                out_adj[v].append(u)
        for lst in out_adj:
            lst.sort()
        g._adj_out = out_adj
        g._adj_in = in_adj
        g.node_data = AttributeTable(n)
        g.edge_data = AttributeTable(len(g.edges))
        return g

    def copy(self) -> "DataGraph":
        g = DataGraph._bulk(self.kind, self.nodes, self.edges)
        g.node_data = self.node_data.copy()
        g.edge_data = self.edge_data.copy()
        g.graph_data = dict(self.graph_data)
        return g

    def __eq__(self, other) -> bool:
        if not isinstance(other, DataGraph):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.nodes == other.nodes
            and self.edges == other.edges
            and self.node_data == other.node_data
            and self.edge_data == other.edge_data
            and self.graph_data == other.graph_data
        )

    def __repr__(self) -> str:
        return (
            f"DataGraph(kind={self.kind!r}, nodes={self.num_nodes}, "
            f"edges={self.num_edges})"
        )


def new_graph(kind: str = UNDIRECTED) -> DataGraph:
    """Construct an empty graph of the given kind."""
    return DataGraph(kind)
