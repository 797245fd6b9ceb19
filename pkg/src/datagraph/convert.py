"""Build graphs out of matrices, 3-D tensors, and symmetric matrices.

A matrix becomes a node-weighted mesh: one node per entry, edges
between horizontally/vertically (optionally diagonally) adjacent
entries. A 3-D tensor can become either the same p x q mesh carrying
one attribute per slice of the third axis, or a full 3-D lattice with
one node per entry. A symmetric matrix becomes an edge-weighted
complete graph whose edge (i, j) carries the entry s[i, j].
"""

from __future__ import annotations

import numpy as np

from .core import DataGraph, UNDIRECTED
from .errors import DimensionError, NotFiniteError, NotSquareError, NotSymmetricError


def _as_finite_array(values, what: str) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    if arr.size == 0:
        raise DimensionError(f"{what} must have at least one entry per dimension")
    if not np.all(np.isfinite(arr)):
        raise NotFiniteError(f"{what} contains NaN or infinite entries")
    return arr


def _mesh_edges(p: int, q: int, diagonal: bool) -> np.ndarray:
    """0-based canonical edge pairs of a p x q grid in row-major indexing."""
    base = np.arange(p * q, dtype=np.intp).reshape(p, q)
    blocks = []
    right = base[:, :-1].ravel()
    blocks.append(np.column_stack([right, right + 1]))
    down = base[:-1, :].ravel()
    blocks.append(np.column_stack([down, down + q]))
    if diagonal:
        dr = base[:-1, :-1].ravel()
        blocks.append(np.column_stack([dr, dr + q + 1]))
        dl = base[:-1, 1:].ravel()
        blocks.append(np.column_stack([dl, dl + q - 1]))
    return np.vstack([b for b in blocks if b.size]) if blocks else np.empty((0, 2))


def matrix_to_graph(values, diagonal: bool = False, attr_base: str = "weight") -> DataGraph:
    """Represent a matrix (or the first two axes of a 3-D tensor) as a mesh.

    Nodes are named by 1-based entry tuples ``(i, j)`` and inserted in
    row-major order. A 2-D input stores each entry under the single node
    attribute ``attr_base``; a 3-D input of depth r stores r attributes
    named ``attr_base + "1"`` ... ``attr_base + "r"``, one per slice.
    With ``diagonal=True`` both diagonal neighbors are connected too.
    """
    arr = _as_finite_array(values, "matrix")
    if arr.ndim not in (2, 3):
        raise DimensionError(f"expected a 2-D or 3-D array, got {arr.ndim}-D")
    p, q = arr.shape[0], arr.shape[1]
    keys = [(i, j) for i in range(1, p + 1) for j in range(1, q + 1)]
    g = DataGraph._bulk(
        UNDIRECTED, keys, map(tuple, _mesh_edges(p, q, diagonal).tolist())
    )
    if arr.ndim == 2:
        g.add_node_dataset(arr.ravel(), attr_base)
    else:
        for k in range(arr.shape[2]):
            g.add_node_dataset(arr[:, :, k].ravel(), f"{attr_base}{k + 1}")
    return g


def tensor_to_graph(values, attr: str = "weight") -> DataGraph:
    """Represent a 3-D tensor as a lattice with one node per entry.

    Nodes are named ``(i, j, k)`` (1-based) and inserted with k as the
    outermost loop and j the innermost; entries adjacent along any
    single axis are connected (no diagonals). Each node stores its
    entry under the single attribute ``attr``.
    """
    arr = _as_finite_array(values, "tensor")
    if arr.ndim != 3:
        raise DimensionError(f"expected a 3-D array, got {arr.ndim}-D")
    p, q, r = arr.shape
    keys = [
        (i, j, k)
        for k in range(1, r + 1)
        for i in range(1, p + 1)
        for j in range(1, q + 1)
    ]
    plane = p * q
    base = np.arange(r * plane, dtype=np.intp).reshape(r, p, q)
    blocks = []
    right = base[:, :, :-1].ravel()
    blocks.append(np.column_stack([right, right + 1]))
    down = base[:, :-1, :].ravel()
    blocks.append(np.column_stack([down, down + q]))
    deep = base[:-1, :, :].ravel()
    blocks.append(np.column_stack([deep, deep + plane]))
    pairs = np.vstack([b for b in blocks if b.size])
    g = DataGraph._bulk(UNDIRECTED, keys, map(tuple, pairs.tolist()))
    g.add_node_dataset(np.moveaxis(arr, 2, 0).ravel(), attr)
    return g


def symmetric_matrix_to_graph(values, attr: str = "weight", tol: float = 1e-9) -> DataGraph:
    """Represent a symmetric matrix as an edge-weighted complete graph.

    Nodes are the integers 1..p; the edge (i, j) with i < j carries the
    entry s[i, j] under ``attr``. The diagonal is ignored. Asymmetry
    beyond ``tol`` (absolute) is rejected with the worst offending pair.
    """
    arr = _as_finite_array(values, "matrix")
    if arr.ndim != 2:
        raise DimensionError(f"expected a 2-D array, got {arr.ndim}-D")
    p, q = arr.shape
    if p != q:
        raise NotSquareError(f"matrix is {p}x{q}, not square")
    dev = np.abs(arr - arr.T)
    worst = float(dev.max()) if dev.size else 0.0
    if worst > tol:
        i, j = np.unravel_index(int(np.argmax(dev)), dev.shape)
        raise NotSymmetricError(
            f"matrix entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) differ "
            f"by {worst:.3g}, tolerance {tol:.3g}"
        )
    iu, iv = np.triu_indices(p, k=1)
    g = DataGraph._bulk(
        UNDIRECTED,
        range(1, p + 1),
        np.column_stack([iu, iv]).tolist() if iu.size else [],
    )
    g.edges = [tuple(e) for e in g.edges]
    g.edge_map = {e: i for i, e in enumerate(g.edges)}
    if iu.size:
        g.add_edge_dataset(arr[iu, iv], attr)
    else:
        g.edge_data.ensure_column(attr)
    return g
