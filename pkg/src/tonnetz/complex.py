"""Closed triangulated pseudo-surfaces described by incidence slots.

Edges list two vertex slots and faces list three edge slots.  Nothing is
inferred from vertex pairs, so loops and parallel edges (which small torus
quotients need) are representable.  Incidences are always counted by
slot: a loop contributes two slots to the valency of its vertex and an
edge appearing twice on one face lies in that face twice.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterable, NamedTuple, Optional, Sequence

__all__ = [
    "SimplexId",
    "SimplicialSurface",
    "Violation",
    "ValidationReport",
    "ComplexAutomorphism",
    "validate",
    "euler_characteristic",
    "valency",
    "find_automorphisms",
    "tetrahedron",
    "face_corners",
]


class SimplexId(NamedTuple):
    dim: int
    index: int

    def __repr__(self) -> str:
        return f"{'VEF'[self.dim]}{self.index}"


def _corner_solutions(edges_of_face, edge_verts):
    """All corner triples (c0, c1, c2) with e0={c0,c1}, e1={c1,c2}, e2={c2,c0}."""
    e0, e1, e2 = (edge_verts[e] for e in edges_of_face)
    found = []
    for c0, c1 in ((e0[0], e0[1]), (e0[1], e0[0])):
        for c2 in (e1[0], e1[1]):
            if sorted(e1) != sorted((c1, c2)):
                continue
            if sorted(e2) != sorted((c2, c0)):
                continue
            if (c0, c1, c2) not in found:
                found.append((c0, c1, c2))
    return found


def face_corners(surface: "SimplicialSurface", face: int):
    """Corner vertices of a face, or ``None`` if its edges do not close up.

    Corner ``i`` sits between edge slots ``i-1`` and ``i``, so edge slot 0
    joins corners 0 and 1, slot 1 joins corners 1 and 2 and slot 2 joins
    corners 2 and 0.
    """
    sols = _corner_solutions(surface.faces[face], surface.edges)
    return sols[0] if sols else None


@dataclass(frozen=True)
class SimplicialSurface:
    """A finite 2-complex given by explicit incidence slots.

    ``edges[i]`` is the pair of vertex indices of edge ``i`` and
    ``faces[j]`` the triple of edge indices of face ``j``.  The name tuples
    are what documents and reports print; they default to ``v0``, ``e0``,
    ``f0`` style names.
    """

    vertex_names: tuple
    edges: tuple
    faces: tuple
    edge_names: tuple = ()
    face_names: tuple = ()
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self) -> None:
        set_ = object.__setattr__
        set_(self, "vertex_names", tuple(str(v) for v in self.vertex_names))
        set_(self, "edges", tuple(tuple(int(x) for x in e) for e in self.edges))
        set_(self, "faces", tuple(tuple(int(x) for x in f) for f in self.faces))
        if not self.edge_names:
            set_(self, "edge_names", tuple(f"e{i}" for i in range(len(self.edges))))
        if not self.face_names:
            set_(self, "face_names", tuple(f"f{i}" for i in range(len(self.faces))))
        set_(self, "edge_names", tuple(str(n) for n in self.edge_names))
        set_(self, "face_names", tuple(str(n) for n in self.face_names))
        nv, ne = len(self.vertex_names), len(self.edges)
        if len(self.edge_names) != ne or len(self.face_names) != len(self.faces):
            raise ValueError("name lists must match the simplex lists")
        for i, e in enumerate(self.edges):
            if len(e) != 2 or not all(0 <= v < nv for v in e):
                raise ValueError(f"edge {self.edge_names[i]!r} must name 2 existing vertices")
        for j, f in enumerate(self.faces):
            if len(f) != 3 or not all(0 <= e < ne for e in f):
                raise ValueError(f"face {self.face_names[j]!r} must name 3 existing edges")
        names = self.vertex_names + self.edge_names + self.face_names
        if len(set(names)) != len(names):
            dup = [n for n, k in Counter(names).items() if k > 1]
            raise ValueError(f"simplex names must be unique, repeated: {dup}")

    @classmethod
    def from_names(cls, vertices: Sequence[str], edges: Sequence, faces: Sequence) -> "SimplicialSurface":
        """Build from ``[(name, (v, v)), ...]`` and ``[(name, (e, e, e)), ...]`` pairs."""
        vidx = {v: i for i, v in enumerate(vertices)}
        eidx = {name: i for i, (name, _) in enumerate(edges)}
        return cls(
            vertex_names=tuple(vertices),
            edges=tuple((vidx[a], vidx[b]) for _, (a, b) in edges),
            faces=tuple(tuple(eidx[e] for e in es) for _, es in faces),
            edge_names=tuple(name for name, _ in edges),
            face_names=tuple(name for name, _ in faces),
        )

    # -- sizes and ids -------------------------------------------------
    @property
    def f_vector(self) -> tuple:
        return (len(self.vertex_names), len(self.edges), len(self.faces))

    def count(self, dim: int) -> int:
        return self.f_vector[dim]

    def simplices(self, dim: Optional[int] = None):
        dims = (0, 1, 2) if dim is None else (dim,)
        return [SimplexId(d, i) for d in dims for i in range(self.count(d))]

    @property
    def vertices(self):
        return self.simplices(0)

    def name(self, sid: SimplexId) -> str:
        return (self.vertex_names, self.edge_names, self.face_names)[sid.dim][sid.index]

    def lookup(self, name: str) -> SimplexId:
        table = self._cache.get("names")
        if table is None:
            table = {}
            for sid in self.simplices():
                table[self.name(sid)] = sid
            self._cache["names"] = table
        try:
            return table[name]
        except KeyError:
            raise KeyError(f"no simplex named {name!r}") from None

    # -- incidence -----------------------------------------------------
    def facets(self, sid: SimplexId) -> tuple:
        """Facet slots of an edge or face, in slot order (with repetition)."""
        if sid.dim == 1:
            return tuple(SimplexId(0, v) for v in self.edges[sid.index])
        if sid.dim == 2:
            return tuple(SimplexId(1, e) for e in self.faces[sid.index])
        return ()

    def cofaces(self, sid: SimplexId) -> tuple:
        """Coface slots of a vertex or edge, one entry per incidence slot."""
        table = self._cache.get("cofaces")
        if table is None:
            table = {}
            for i, e in enumerate(self.edges):
                for v in e:
                    table.setdefault(SimplexId(0, v), []).append(SimplexId(1, i))
            for j, f in enumerate(self.faces):
                for e in f:
                    table.setdefault(SimplexId(1, e), []).append(SimplexId(2, j))
            table = {k: tuple(v) for k, v in table.items()}
            self._cache["cofaces"] = table
        if sid.dim == 2:
            return ()
        self._check(sid)
        return table.get(sid, ())

    def corners(self, face: int):
        return face_corners(self, face)

    def _check(self, sid: SimplexId) -> None:
        if not (0 <= sid.dim <= 2 and 0 <= sid.index < self.count(sid.dim)):
            raise KeyError(f"unknown simplex {sid!r}")

    def has_loops(self) -> bool:
        return any(a == b for a, b in self.edges)

    def remove_face(self, index: int) -> "SimplicialSurface":
        keep = [j for j in range(len(self.faces)) if j != index]
        return SimplicialSurface(
            self.vertex_names,
            self.edges,
            tuple(self.faces[j] for j in keep),
            self.edge_names,
            tuple(self.face_names[j] for j in keep),
        )


def tetrahedron(names: Iterable[str] = ("a", "b", "c", "d")) -> SimplicialSurface:
    """Boundary of a tetrahedron; faces are the vertex triples in lexicographic order."""
    vs = list(names)
    pairs = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    eidx = {p: k for k, p in enumerate(pairs)}
    faces = []
    for a, b, c in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]:
        faces.append((eidx[(a, b)], eidx[(b, c)], eidx[(a, c)]))
    return SimplicialSurface(
        tuple(vs),
        tuple(pairs),
        tuple(faces),
        tuple(f"{vs[i]}{vs[j]}" for i, j in pairs),
        tuple(f"{vs[a]}{vs[b]}{vs[c]}" for a, b, c in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]),
    )


# -- validation --------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    simplex: str
    message: str

    def __str__(self) -> str:
        return f"{self.simplex}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "valid closed pseudo-surface"
        return "\n".join(str(v) for v in self.violations)


def validate(surface: SimplicialSurface) -> ValidationReport:
    """Check the closed pseudo-surface conditions, listing every failure."""
    out = []
    face_slots = Counter(e for f in surface.faces for e in f)
    for i, name in enumerate(surface.edge_names):
        k = face_slots.get(i, 0)
        if k != 2:
            out.append(Violation(name, f"edge lies in {k} face slot(s), expected 2"))
    for j, name in enumerate(surface.face_names):
        if face_corners(surface, j) is None:
            out.append(Violation(name, "edges do not meet in three consistent corners"))
    used = {v for e in surface.edges for v in e}
    for v, name in enumerate(surface.vertex_names):
        if v not in used:
            out.append(Violation(name, "vertex lies on no edge"))
    if not surface.faces:
        out.append(Violation("<surface>", "no faces"))
    return ValidationReport(tuple(out))


def euler_characteristic(surface: SimplicialSurface) -> int:
    v, e, f = surface.f_vector
    return v - e + f


def valency(surface: SimplicialSurface, vertex) -> int:
    """Number of edge slots at ``vertex`` (a loop counts twice)."""
    if isinstance(vertex, str):
        vertex = surface.lookup(vertex)
    elif isinstance(vertex, int) and not isinstance(vertex, SimplexId):
        vertex = SimplexId(0, vertex)
    if vertex.dim != 0:
        raise KeyError(f"{vertex!r} is not a vertex")
    return len(surface.cofaces(vertex))


# -- automorphisms -----------------------------------------------------

def _cycle_lcm(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    out = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        n, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            n += 1
        out = out * n // math.gcd(out, n)
    return out


@dataclass(frozen=True)
class ComplexAutomorphism:
    """Incidence-preserving permutations of vertices, edges and faces.

    ``vertex_perm[i]`` is the image of vertex ``i`` and likewise for the
    other two tuples.
    """

    vertex_perm: tuple
    edge_perm: tuple
    face_perm: tuple

    def image(self, sid: SimplexId) -> SimplexId:
        perm = (self.vertex_perm, self.edge_perm, self.face_perm)[sid.dim]
        return SimplexId(sid.dim, perm[sid.index])

    def compose(self, other: "ComplexAutomorphism") -> "ComplexAutomorphism":
        """``self`` after ``other``."""
        return ComplexAutomorphism(
            tuple(self.vertex_perm[i] for i in other.vertex_perm),
            tuple(self.edge_perm[i] for i in other.edge_perm),
            tuple(self.face_perm[i] for i in other.face_perm),
        )

    def inverse(self) -> "ComplexAutomorphism":
        def inv(p):
            out = [0] * len(p)
            for i, j in enumerate(p):
                out[j] = i
            return tuple(out)

        return ComplexAutomorphism(inv(self.vertex_perm), inv(self.edge_perm), inv(self.face_perm))

    def is_identity(self) -> bool:
        return all(p == tuple(range(len(p))) for p in (self.vertex_perm, self.edge_perm, self.face_perm))

    def order(self) -> int:
        out = 1
        for p in (self.vertex_perm, self.edge_perm, self.face_perm):
            k = _cycle_lcm(p)
            out = out * k // math.gcd(out, k)
        return out

    def preserves_incidence(self, surface: SimplicialSurface) -> bool:
        for i, (a, b) in enumerate(surface.edges):
            img = surface.edges[self.edge_perm[i]]
            if sorted(img) != sorted((self.vertex_perm[a], self.vertex_perm[b])):
                return False
        for j, f in enumerate(surface.faces):
            img = surface.faces[self.face_perm[j]]
            if sorted(img) != sorted(self.edge_perm[e] for e in f):
                return False
        return True

    def describe(self, surface: SimplicialSurface) -> dict:
        return {
            "vertices": {surface.vertex_names[i]: surface.vertex_names[j] for i, j in enumerate(self.vertex_perm)},
            "edges": {surface.edge_names[i]: surface.edge_names[j] for i, j in enumerate(self.edge_perm)},
            "faces": {surface.face_names[i]: surface.face_names[j] for i, j in enumerate(self.face_perm)},
        }


# The six ways to lay one triangle's edge slots onto another's.
_DIHEDRAL = tuple(permutations(range(3)))

# Compatibility hook: called as accept(sid, image_sid) before a simplex is mapped.
Accept = Callable[[SimplexId, SimplexId], bool]


def _corner_table(surface):
    """For each face: the corner solutions, keyed by edge-slot pair."""
    table = []
    for j, f in enumerate(surface.faces):
        sols = _corner_solutions(f, surface.edges)
        table.append(sols)
    return table


def find_automorphisms(
    surface: SimplicialSurface,
    limit: Optional[int] = None,
    accept: Optional[Accept] = None,
) -> list:
    """Enumerate incidence-preserving bijections by backtracking.

    The search fixes the image of a face together with a matching of its
    edge slots, then walks across shared edges: the face on the far side
    of an edge must land on the face on the far side of that edge's image.
    ``accept`` can veto individual simplex assignments, which prunes the
    search when looking for label-compatible symmetries.
    """
    nv, ne, nf = surface.f_vector
    if nf == 0:
        return []
    corners = _corner_table(surface)
    if any(not c for c in corners):
        raise ValueError("surface does not validate: a face has inconsistent corners")
    edge_faces = [[] for _ in range(ne)]
    for j, f in enumerate(surface.faces):
        for slot, e in enumerate(f):
            edge_faces[e].append((j, slot))
    sig_f = [tuple(sorted(len(surface.cofaces(SimplexId(0, v))) for v in set(c[0]))) for c in corners]

    results = []
    vmap = [-1] * nv
    emap = [-1] * ne
    fmap = [-1] * nf
    vused = [False] * nv
    eused = [False] * ne
    fused = [False] * nf

    def try_map(kind, src, dst, mp, used, trail):
        if mp[src] == dst:
            return True
        if mp[src] != -1 or used[dst]:
            return False
        if accept is not None and not accept(SimplexId(kind, src), SimplexId(kind, dst)):
            return False
        mp[src] = dst
        used[dst] = True
        trail.append((mp, used, src, dst))
        return True

    def undo(trail):
        while trail:
            mp, used, src, dst = trail.pop()
            mp[src] = -1
            used[dst] = False

    def place(f, g, perm, trail):
        """Map face f to g sending edge slot i to slot perm[i]."""
        if not try_map(2, f, g, fmap, fused, trail):
            return False
        ef, eg = surface.faces[f], surface.faces[g]
        for i in range(3):
            if not try_map(1, ef[i], eg[perm[i]], emap, eused, trail):
                return False
        # corner between slots (i-1, i) goes to the corner between the image slots
        for cf in corners[f][:1]:
            ok_any = False
            for cg in corners[g]:
                sub = []
                good = True
                for i in range(3):
                    a, b = perm[(i - 1) % 3], perm[i]
                    # corner of g shared by slots a and b
                    k = b if (a + 1) % 3 == b else a
                    if not try_map(0, cf[i], cg[k], vmap, vused, sub):
                        good = False
                        break
                if good:
                    trail.extend(sub)
                    ok_any = True
                    break
                undo(sub)
            if not ok_any:
                return False
        return True

    def next_pending():
        for f in range(nf):
            if fmap[f] == -1:
                continue
            for e in surface.faces[f]:
                for (h, slot) in edge_faces[e]:
                    if fmap[h] == -1:
                        return h, slot, e
        return None

    def candidates(h, slot, e):
        """Placements for face h whose edge slot ``slot`` holds the mapped edge e."""
        e_img = emap[e]
        out = []
        for (g, gslot) in edge_faces[e_img]:
            if fused[g]:
                continue
            for perm in _DIHEDRAL:
                if perm[slot] == gslot:
                    out.append((g, perm))
        return out

    def complete():
        return all(x != -1 for x in fmap) and all(x != -1 for x in emap) and all(x != -1 for x in vmap)

    def search():
        if limit is not None and len(results) >= limit:
            return
        pend = next_pending()
        if pend is None:
            unmapped = [f for f in range(nf) if fmap[f] == -1]
            if not unmapped:
                if complete():
                    results.append(ComplexAutomorphism(tuple(vmap), tuple(emap), tuple(fmap)))
                return
            f = unmapped[0]
            options = [(g, p) for g in range(nf) if not fused[g] for p in _DIHEDRAL]
        else:
            f, slot, e = pend
            options = candidates(f, slot, e)
        for g, perm in options:
            if sig_f[f] != sig_f[g]:
                continue
            trail = []
            if place(f, g, perm, trail):
                search()
            undo(trail)
            if limit is not None and len(results) >= limit:
                return

    search()
    results.sort(key=lambda a: (not a.is_identity(), a.face_perm, a.edge_perm, a.vertex_perm))
    return results
