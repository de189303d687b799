"""Mesh ingestion (OFF / OBJ), demo shapes and per-vertex measuring functions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from msize.io import read_columns
from msize.shape import FilteredGraph


class MeshParseError(ValueError):
    def __init__(self, path, lineno: int | None, message: str):
        self.path = str(path)
        self.lineno = lineno
        where = f"{path}:{lineno}" if lineno is not None else f"{path}"
        super().__init__(f"{where}: {message}")


@dataclass(frozen=True, eq=False)
class Mesh:
    vertices: np.ndarray  # (n, 3)
    edges: np.ndarray  # (m, 2), deduplicated, u < v
    faces: tuple[tuple[int, ...], ...] = ()

    @property
    def vertex_count(self) -> int:
        return self.vertices.shape[0]

    def to_graph(self, values) -> FilteredGraph:
        return FilteredGraph(values, self.edges)


def skeleton_edges(faces, extra=()) -> np.ndarray:
    """Boundary edges of every polygon (consecutive vertices, closing the loop)."""
    seen = set()
    for face in faces:
        for u, v in zip(face, face[1:] + face[:1]):
            if u != v:
                seen.add((min(u, v), max(u, v)))
    for u, v in extra:
        if u != v:
            seen.add((min(u, v), max(u, v)))
    return np.array(sorted(seen), dtype=np.int64).reshape(-1, 2)


def _content_lines(path):
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if line:
                yield lineno, line.split()


def _parse_off(path) -> Mesh:
    lines = _content_lines(path)
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise MeshParseError(path, None, "empty file") from None
    if not tokens[0].upper().endswith("OFF"):
        raise MeshParseError(path, lineno, f"expected OFF header, got {tokens[0]!r}")
    counts = tokens[1:]
    if not counts:
        try:
            lineno, counts = next(lines)
        except StopIteration:
            raise MeshParseError(path, lineno, "missing vertex/face counts") from None
    try:
        nv, nf = int(counts[0]), int(counts[1])
    except (ValueError, IndexError):
        raise MeshParseError(path, lineno, "malformed vertex/face counts") from None
    if nv < 1:
        raise MeshParseError(path, lineno, "mesh has no vertices")

    verts = []
    for _ in range(nv):
        try:
            lineno, tokens = next(lines)
        except StopIteration:
            raise MeshParseError(path, lineno, f"expected {nv} vertices, found {len(verts)}") from None
        try:
            verts.append([float(v) for v in tokens[:3]])
        except ValueError:
            raise MeshParseError(path, lineno, "malformed vertex coordinates") from None
        if len(verts[-1]) != 3:
            raise MeshParseError(path, lineno, "vertex needs three coordinates")

    faces = []
    for _ in range(nf):
        try:
            lineno, tokens = next(lines)
        except StopIteration:
            raise MeshParseError(path, lineno, f"expected {nf} faces, found {len(faces)}") from None
        try:
            size = int(tokens[0])
            face = tuple(int(v) for v in tokens[1:1 + size])
        except ValueError:
            raise MeshParseError(path, lineno, "malformed face") from None
        if len(face) != size or size < 1:
            raise MeshParseError(path, lineno, f"face declares {size} vertices, lists {len(face)}")
        if min(face) < 0 or max(face) >= nv:
            raise MeshParseError(path, lineno, "face references a missing vertex")
        faces.append(face)
    return Mesh(np.array(verts), skeleton_edges(faces), tuple(faces))


def _obj_index(token: str, count: int, path, lineno: int) -> int:
    try:
        idx = int(token.split("/")[0])
    except ValueError:
        raise MeshParseError(path, lineno, f"malformed vertex reference {token!r}") from None
    idx = idx - 1 if idx > 0 else count + idx
    if not 0 <= idx < count:
        raise MeshParseError(path, lineno, f"vertex reference {token!r} out of range")
    return idx


def _parse_obj(path) -> Mesh:
    verts, faces, polylines = [], [], []
    for lineno, tokens in _content_lines(path):
        tag = tokens[0]
        if tag == "v":
            try:
                coords = [float(v) for v in tokens[1:4]]
            except ValueError:
                raise MeshParseError(path, lineno, "malformed vertex coordinates") from None
            if len(coords) != 3:
                raise MeshParseError(path, lineno, "vertex needs three coordinates")
            verts.append(coords)
        elif tag in ("f", "l"):
            idx = tuple(_obj_index(t, len(verts), path, lineno) for t in tokens[1:])
            if len(idx) < 2:
                raise MeshParseError(path, lineno, f"{tag!r} element needs at least two vertices")
            if tag == "f":
                faces.append(idx)
            else:
                polylines.extend(zip(idx, idx[1:]))
    if not verts:
        raise MeshParseError(path, None, "no vertices found")
    return Mesh(np.array(verts), skeleton_edges(faces, polylines), tuple(faces))


def load_mesh(path) -> Mesh:
    """Read an ASCII OFF or OBJ file and extract its 1-skeleton."""
    path = Path(path)
    suffix = path.suffix.lower()
    if suffix == ".off":
        return _parse_off(path)
    if suffix == ".obj":
        return _parse_obj(path)
    raise MeshParseError(path, None, f"unsupported mesh format {suffix!r} (use .off or .obj)")


def write_off(path, mesh: Mesh) -> None:
    lines = ["OFF", f"{mesh.vertex_count} {len(mesh.faces)} {len(mesh.edges)}"]
    lines += [" ".join(repr(float(c)) for c in v) for v in mesh.vertices]
    lines += [" ".join(map(str, (len(f),) + tuple(f))) for f in mesh.faces]
    Path(path).write_text("\n".join(lines) + "\n")


def cube_mesh(subdiv: int) -> Mesh:
    """Boundary of [-1, 1]^3, each face split into a subdiv x subdiv grid of quads."""
    if subdiv < 1:
        raise ValueError("subdiv must be >= 1")
    n = subdiv
    index: dict[tuple[int, int, int], int] = {}
    coords = []

    def vid(p):
        if p not in index:
            index[p] = len(coords)
            coords.append(p)
        return index[p]

    faces = []
    for axis in range(3):
        u, v = [a for a in range(3) if a != axis]
        for side in (0, n):
            for i in range(n):
                for j in range(n):
                    quad = []
                    for di, dj in ((0, 0), (1, 0), (1, 1), (0, 1)):
                        p = [0, 0, 0]
                        p[axis], p[u], p[v] = side, i + di, j + dj
                        quad.append(vid(tuple(p)))
                    faces.append(tuple(quad))
    verts = -1.0 + 2.0 * np.array(coords, dtype=float) / n
    return Mesh(verts, skeleton_edges(faces), tuple(faces))


def _icosahedron():
    phi = (1 + math.sqrt(5)) / 2
    verts = [
        (-1, phi, 0), (1, phi, 0), (-1, -phi, 0), (1, -phi, 0),
        (0, -1, phi), (0, 1, phi), (0, -1, -phi), (0, 1, -phi),
        (phi, 0, -1), (phi, 0, 1), (-phi, 0, -1), (-phi, 0, 1),
    ]
    faces = [
        (0, 11, 5), (0, 5, 1), (0, 1, 7), (0, 7, 10), (0, 10, 11),
        (1, 5, 9), (5, 11, 4), (11, 10, 2), (10, 7, 6), (7, 1, 8),
        (3, 9, 4), (3, 4, 2), (3, 2, 6), (3, 6, 8), (3, 8, 9),
        (4, 9, 5), (2, 4, 11), (6, 2, 10), (8, 6, 7), (9, 8, 1),
    ]
    v = np.array(verts, dtype=float)
    return list(v / np.linalg.norm(v, axis=1, keepdims=True)), faces


def icosphere(subdiv: int) -> Mesh:
    """Unit sphere from an icosahedron, each triangle split into four subdiv times."""
    if subdiv < 0:
        raise ValueError("subdiv must be >= 0")
    verts, faces = _icosahedron()
    for _ in range(subdiv):
        midpoint: dict[tuple[int, int], int] = {}

        def mid(a, b):
            key = (min(a, b), max(a, b))
            if key not in midpoint:
                m = verts[a] + verts[b]
                verts.append(m / np.linalg.norm(m))
                midpoint[key] = len(verts) - 1
            return midpoint[key]

        new_faces = []
        for a, b, c in faces:
            ab, bc, ca = mid(a, b), mid(b, c), mid(c, a)
            new_faces += [(a, ab, ca), (b, bc, ab), (c, ca, bc), (ab, bc, ca)]
        faces = new_faces
    return Mesh(np.array(verts), skeleton_edges(faces), tuple(faces))


def demo_mesh(name: str, subdiv: int | None = None) -> Mesh:
    if name == "cube":
        return cube_mesh(20 if subdiv is None else subdiv)
    if name == "sphere":
        return icosphere(5 if subdiv is None else subdiv)
    raise ValueError(f"unknown demo shape {name!r} (choose cube or sphere)")


_BUILTIN = {
    "abs_x": lambda v, c: np.abs(v[:, 0]),
    "abs_y": lambda v, c: np.abs(v[:, 1]),
    "abs_z": lambda v, c: np.abs(v[:, 2]),
    "coord_x": lambda v, c: v[:, 0].copy(),
    "coord_y": lambda v, c: v[:, 1].copy(),
    "coord_z": lambda v, c: v[:, 2].copy(),
    "dist_center": lambda v, c: np.linalg.norm(v - c, axis=1),
}


def parse_measure_spec(spec: str) -> list[str]:
    """Split ``"abs_x,abs_z"`` into terms, validating each one."""
    terms = [t.strip() for t in spec.split(",") if t.strip()]
    if not terms:
        raise ValueError("measuring spec needs at least one term")
    for term in terms:
        if term not in _BUILTIN and not term.startswith("file:"):
            raise ValueError(f"unknown measuring function {term!r}; built-ins: {', '.join(_BUILTIN)}, file:<path>[#col]")
    return terms


def measure(mesh: Mesh, terms: list[str]) -> np.ndarray:
    """Evaluate measuring terms at every vertex; returns shape (n, k).

    ``file:<path>`` reads one CSV column per vertex (``#col`` picks a 0-based
    column, default 0). ``dist_center`` measures from the vertex centroid.
    """
    center = mesh.vertices.mean(axis=0)
    cols = []
    for term in terms:
        if term in _BUILTIN:
            cols.append(_BUILTIN[term](mesh.vertices, center))
            continue
        if not term.startswith("file:"):
            raise ValueError(f"unknown measuring function {term!r}")
        path, _, col = term[len("file:"):].partition("#")
        table = read_columns(path)
        column = int(col) if col else 0
        if column >= table.shape[1]:
            raise ValueError(f"{path}: no column {column}")
        if table.shape[0] != mesh.vertex_count:
            raise ValueError(f"{path}: {table.shape[0]} rows for {mesh.vertex_count} vertices")
        cols.append(table[:, column])
    return np.column_stack(cols)
