"""Shift-stable triangulations of the marked infinite strip (annulus cover).

Marked points live on two boundary lines: ("top", i) and ("bot", j) with
integer indices increasing to the right. The shift Sigma moves top indices
by k1 and bottom indices by k2 (one annulus period). Arcs are isotopy
classes, identified with their endpoint pairs; crossing tests are pure
integer inequalities in strip coordinates. A triangulation is stored by one
representative arc per Sigma-orbit.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import InputError, UnflippableArcError
from .periodic import PeriodicQuiver, admissibility_check
from .quiver import IceQuiver

TOP = "top"
BOT = "bot"


class MarkedRibbon(NamedTuple):
    k1: int  # marks per period on the top boundary
    k2: int  # marks per period on the bottom boundary

    def validate(self):
        if self.k1 <= 0 or self.k2 <= 0:
            raise InputError("both boundaries need at least one mark per period")
        return self

    def x(self, point) -> int:
        """Strip x-coordinate; Sigma shifts every point by 2*k1*k2."""
        boundary, idx = point
        return 2 * idx * (self.k2 if boundary == TOP else self.k1)

    def shift_point(self, point, k: int):
        boundary, idx = point
        return (boundary, idx + k * (self.k1 if boundary == TOP else self.k2))

    def period_x(self) -> int:
        return 2 * self.k1 * self.k2


class Arc(NamedTuple):
    """Unordered pair of marked points, stored sorted for canonical equality."""

    p1: tuple
    p2: tuple

    @staticmethod
    def of(a, b) -> "Arc":
        if a == b:
            raise InputError("arc endpoints must be distinct")
        if a[0] == b[0] and abs(a[1] - b[1]) < 2:
            raise InputError(f"endpoints {a}, {b} are neighboring boundary points")
        return Arc(*sorted((a, b)))

    def is_bridging(self) -> bool:
        return self.p1[0] != self.p2[0]

    def boundary(self):
        return self.p1[0] if not self.is_bridging() else None

    def top_point(self):
        return self.p1 if self.p1[0] == TOP else self.p2

    def bot_point(self):
        return self.p1 if self.p1[0] == BOT else self.p2


def shift_arc(ribbon: MarkedRibbon, arc: Arc, k: int) -> Arc:
    return Arc(*sorted((ribbon.shift_point(arc.p1, k), ribbon.shift_point(arc.p2, k))))


def crosses(ribbon: MarkedRibbon, a: Arc, b: Arc) -> bool:
    """Whether the two isotopy classes intersect in the strip interior."""
    if a == b:
        return False
    if not a.is_bridging() and not b.is_bridging():
        if a.boundary() != b.boundary():
            return False
        a1, a2 = sorted((a.p1[1], a.p2[1]))
        b1, b2 = sorted((b.p1[1], b.p2[1]))
        return (a1 < b1 < a2 < b2) or (b1 < a1 < b2 < a2)
    if a.is_bridging() and b.is_bridging():
        dt = ribbon.x(a.top_point()) - ribbon.x(b.top_point())
        db = ribbon.x(a.bot_point()) - ribbon.x(b.bot_point())
        return dt * db < 0
    same, bridge = (a, b) if not a.is_bridging() else (b, a)
    t = bridge.top_point() if same.boundary() == TOP else bridge.bot_point()
    lo, hi = sorted((same.p1[1], same.p2[1]))
    return lo < t[1] < hi


class SigmaTriangulation:
    """Maximal shift-stable arc system, one representative per orbit."""

    __slots__ = ("ribbon", "arcs")

    def __init__(self, ribbon: MarkedRibbon, arcs, _validated=False):
        self.ribbon = ribbon.validate()
        self.arcs = tuple(arcs)
        if not _validated:
            self._validate()

    def _validate(self):
        n = self.ribbon.k1 + self.ribbon.k2
        if len(self.arcs) != n:
            raise InputError(
                f"a triangulation of this strip has {n} arc orbits, got {len(self.arcs)}"
            )
        if len(set(self.arcs)) != len(self.arcs):
            raise InputError("duplicate arc orbits")
        span = max(
            abs(self.ribbon.x(a.p1) - self.ribbon.x(a.p2)) for a in self.arcs
        )
        K = span // self.ribbon.period_x() + 2
        for i, a in enumerate(self.arcs):
            for j, b in enumerate(self.arcs):
                for k in range(-K, K + 1):
                    if i == j and k == 0:
                        continue
                    if crosses(self.ribbon, a, shift_arc(self.ribbon, b, k)):
                        raise InputError(
                            f"arcs {a} and shift^{k} of {b} cross; not a triangulation"
                        )

    def __eq__(self, other):
        return (
            isinstance(other, SigmaTriangulation)
            and self.ribbon == other.ribbon
            and self.arcs == other.arcs
        )

    def __hash__(self):
        return hash((self.ribbon, self.arcs))

    def __repr__(self):
        return f"SigmaTriangulation(k1={self.ribbon.k1}, k2={self.ribbon.k2}, {list(self.arcs)})"


# -- lifted window: planar graph, rotation systems, faces ----------------------


def _window_data(T: SigmaTriangulation, width: int):
    """Lift arc orbits to shifts [-width, width]; return edges and labels.

    Returns (edges, labels) where ``edges`` is a set of frozenset point
    pairs including boundary segments, and ``labels`` maps an arc edge to
    its (orbit index, shift).
    """
    ribbon = T.ribbon
    labels = {}
    points = set()
    for idx, rep in enumerate(T.arcs):
        for k in range(-width, width + 1):
            arc = shift_arc(ribbon, rep, k)
            labels[frozenset((arc.p1, arc.p2))] = (idx, k)
            points.add(arc.p1)
            points.add(arc.p2)
    edges = set(labels)
    for boundary in (TOP, BOT):
        idxs = sorted(i for (b, i) in points if b == boundary)
        if not idxs:
            continue
        for i in range(idxs[0] - 1, idxs[-1] + 1):
            edges.add(frozenset(((boundary, i), (boundary, i + 1))))
    return edges, labels


def _rotations(ribbon: MarkedRibbon, edges):
    """Counterclockwise neighbor order around every vertex of the window graph."""
    incident: dict[tuple, list] = {}
    for e in edges:
        u, v = tuple(e)
        incident.setdefault(u, []).append(v)
        incident.setdefault(v, []).append(u)

    rot = {}
    for v, nbrs in incident.items():
        boundary, i = v
        east = [p for p in nbrs if p[0] == boundary and p[1] == i + 1]
        west = [p for p in nbrs if p[0] == boundary and p[1] == i - 1]
        same_r = sorted(
            (p for p in nbrs if p[0] == boundary and p[1] > i + 1), key=lambda p: -p[1]
        )
        same_l = sorted(
            (p for p in nbrs if p[0] == boundary and p[1] < i - 1), key=lambda p: -p[1]
        )
        bridge = [p for p in nbrs if p[0] != boundary]
        if boundary == TOP:
            # edges hang below; ccw sweep: east bnd, west bnd, left arcs
            # nearest-first, bridges by bottom x ascending, right arcs
            # farthest-first (hugging-arc embedding)
            bridge.sort(key=ribbon.x)
            rot[v] = east + west + same_l + bridge + same_r
        else:
            # edges rise above; ccw sweep: east bnd, right arcs nearest-first,
            # bridges by top x descending, left arcs farthest-first, west bnd
            bridge.sort(key=ribbon.x, reverse=True)
            same_r.sort(key=lambda p: p[1])
            same_l.sort(key=lambda p: p[1])
            rot[v] = east + same_r + bridge + same_l + west
    return rot


def _trace_faces(rot):
    """All face cycles of the rotation system, as vertex tuples."""
    next_half = {}
    for v, nbrs in rot.items():
        deg = len(nbrs)
        for idx, u in enumerate(nbrs):
            # face-successor of half-edge (u -> v): predecessor of u in ccw
            # order around v, giving one consistent orientation per face
            next_half[(u, v)] = (v, nbrs[(idx - 1) % deg])
    faces = []
    seen = set()
    for start in next_half:
        if start in seen:
            continue
        cycle = []
        h = start
        while h not in seen:
            seen.add(h)
            cycle.append(h)
            h = next_half[h]
        if h == start:
            faces.append(tuple(u for (u, _v) in cycle))
    return faces


def _triangles(T: SigmaTriangulation):
    """One representative per Sigma-orbit of triangles.

    Returns a list of cyclically ordered side triples, each side either
    ("arc", orbit, shift) or ("bnd",), with shifts normalized per triangle.
    """
    ribbon = T.ribbon
    span = max(abs(ribbon.x(a.p1) - ribbon.x(a.p2)) for a in T.arcs)
    width = span // ribbon.period_x() + 3
    edges, labels = _window_data(T, width)
    rot = _rotations(ribbon, edges)

    # only trust faces whose vertices sit well inside the window
    xs = [ribbon.x(p) for p in rot]
    margin = span + 2 * ribbon.period_x()
    lo, hi = min(xs) + margin, max(xs) - margin

    found = {}
    for face in _trace_faces(rot):
        if len(face) != 3 or len(set(face)) != 3:
            continue
        if not all(lo <= ribbon.x(p) <= hi for p in face):
            continue
        sides = []
        for idx in range(3):
            e = frozenset((face[idx], face[(idx + 1) % 3]))
            sides.append(("arc", *labels[e]) if e in labels else ("bnd",))
        arc_shifts = [s[2] for s in sides if s[0] == "arc"]
        if not arc_shifts:
            continue
        base = min(arc_shifts)
        norm = [
            ("arc", s[1], s[2] - base) if s[0] == "arc" else ("bnd",) for s in sides
        ]
        # canonical cyclic rotation for deduplication across Sigma-translates
        best = min(tuple(norm[i:] + norm[:i]) for i in range(3))
        found[best] = best
    return list(found.values())


def quiver_of(T: SigmaTriangulation) -> PeriodicQuiver:
    """Quiver of the triangulation: one site per arc orbit.

    Within each triangle, consecutive arc sides (in the triangle's cyclic
    orientation) contribute an arrow; the shift label records which
    Sigma-translates of the representatives bound the triangle.
    """
    n = len(T.arcs)
    triangles = _triangles(T)
    if len(triangles) != n:
        raise InputError(
            f"expected {n} triangle orbits per period, found {len(triangles)}"
        )
    arrows: dict[tuple, int] = {}
    for sides in triangles:
        for idx in range(3):
            a, b = sides[idx], sides[(idx + 1) % 3]
            if a[0] == "arc" and b[0] == "arc":
                # the face trace runs against the quiver orientation, so the
                # arrow points from the later side to the earlier one
                key = (b[1], a[1], a[2] - b[2])
                arrows[key] = arrows.get(key, 0) + 1
    return PeriodicQuiver(n, {i: False for i in range(n)}, arrows)


def flip(T: SigmaTriangulation, orbit: int) -> SigmaTriangulation:
    """Replace the orbit's arcs by the other diagonals of their quadrilaterals."""
    if not 0 <= orbit < len(T.arcs):
        raise InputError(f"unknown arc orbit {orbit}")
    ribbon = T.ribbon
    span = max(abs(ribbon.x(a.p1) - ribbon.x(a.p2)) for a in T.arcs)
    width = span // ribbon.period_x() + 3
    edges, labels = _window_data(T, width)
    rot = _rotations(ribbon, edges)
    target = shift_arc(ribbon, T.arcs[orbit], 0)
    target_edge = frozenset((target.p1, target.p2))
    opposite = []
    for face in _trace_faces(rot):
        if len(face) != 3 or len(set(face)) != 3:
            continue
        face_edges = [
            frozenset((face[i], face[(i + 1) % 3])) for i in range(3)
        ]
        if target_edge in face_edges:
            third = next(p for p in face if p not in target_edge)
            opposite.append(third)
    if len(opposite) != 2:
        raise UnflippableArcError(
            f"arc orbit {orbit} does not sit inside a quadrilateral"
        )
    try:
        new_arc = Arc.of(opposite[0], opposite[1])
    except InputError as exc:
        raise UnflippableArcError(
            f"flipping orbit {orbit} would produce a boundary-parallel arc"
        ) from exc
    arcs = list(T.arcs)
    arcs[orbit] = new_arc
    return SigmaTriangulation(ribbon, arcs)


def check_no_virtual_2cycles(T: SigmaTriangulation) -> dict:
    """Two independent detectors for the forbidden folded-2-cycle pattern.

    The quiver detector runs the admissibility report on quiver_of(T); the
    geometric detector scans quadrilaterals (pairs of adjacent triangles)
    for two sides in one Sigma-orbit that share an endpoint. Both verdicts
    are reported, with an agreement flag.
    """
    report = admissibility_check(quiver_of(T))
    quiver_violation = not report["admissible"]

    ribbon = T.ribbon
    geo_witnesses = []
    triangles = _triangles(T)
    # adjacency via shared arc sides: collect, per arc (orbit, shift) pattern,
    # the triangles it bounds; a quadrilateral is a pair of triangles glued
    # along one arc
    by_side: dict[tuple, list] = {}
    expanded = []
    for sides in triangles:
        for k in (0, 1):  # a translate, to catch gluings across the period
            shifted = tuple(
                ("arc", s[1], s[2] + k) if s[0] == "arc" else ("bnd",) for s in sides
            )
            expanded.append(shifted)
    for tri_idx, sides in enumerate(expanded):
        for s in sides:
            if s[0] == "arc":
                by_side.setdefault((s[1], s[2]), []).append(tri_idx)
    for (orbit, sh), tris in by_side.items():
        for i in range(len(tris)):
            for j in range(i + 1, len(tris)):
                quad_sides = [
                    s
                    for t in (expanded[tris[i]], expanded[tris[j]])
                    for s in t
                    if s[0] == "arc" and (s[1], s[2]) != (orbit, sh)
                ]
                for a in range(len(quad_sides)):
                    for b in range(a + 1, len(quad_sides)):
                        sa, sb = quad_sides[a], quad_sides[b]
                        if sa[1] != sb[1] or sa[2] == sb[2]:
                            continue
                        arc_a = shift_arc(ribbon, T.arcs[sa[1]], sa[2])
                        arc_b = shift_arc(ribbon, T.arcs[sb[1]], sb[2])
                        if {arc_a.p1, arc_a.p2} & {arc_b.p1, arc_b.p2}:
                            geo_witnesses.append(
                                {"orbit": sa[1], "shifts": sorted((sa[2], sb[2]))}
                            )
    geometric_violation = bool(geo_witnesses)
    return {
        "quiver_detector": {
            "violation": quiver_violation,
            "violations": report["violations"],
        },
        "geometric_detector": {
            "violation": geometric_violation,
            "witnesses": geo_witnesses,
        },
        "agree": quiver_violation == geometric_violation,
        "clean": not quiver_violation and not geometric_violation,
    }


def default_triangulation(cyclicQ: IceQuiver) -> SigmaTriangulation:
    """Staircase triangulation of the strip whose quiver is the periodic
    line quiver of the given cycle orientation.

    Every arc bridges the two boundaries; consecutive arcs share a top or a
    bottom endpoint according to the direction of the cycle arrow between
    the corresponding sites, so the two arrow directions map to the two
    boundaries. A cyclically oriented input leaves one boundary without
    marks (no annulus), which is an input error.
    """
    from .periodic import build_AQ

    pq = build_AQ(cyclicQ)  # validates the cycle and fixes site positions
    n = len(pq.site_ids())
    # step m advances the top index when the cycle arrow runs m+1 -> m
    # (site order), and the bottom index when it runs m -> m+1
    steps = []
    for m in range(n):
        nxt = (m + 1) % n
        fwd = any(u == m and v == nxt for (u, v, _s) in pq.arrows)
        steps.append("bot" if fwd else "top")
    k1 = steps.count("top")
    k2 = steps.count("bot")
    if k1 == 0 or k2 == 0:
        raise InputError(
            "cyclically oriented cycle has no annulus model (one boundary empty)"
        )
    ribbon = MarkedRibbon(k1, k2)
    arcs = []
    t = b = 0
    for m in range(n):
        arcs.append(Arc.of((TOP, t), (BOT, b)))
        if steps[m] == "top":
            t += 1
        else:
            b += 1
    return SigmaTriangulation(ribbon, arcs)


def staircase_triangulation(k1: int, k2: int) -> SigmaTriangulation:
    """All-bridging zigzag triangulation of the (k1, k2) strip.

    Advances the top index k1 times, then the bottom index k2 times, per
    period. Useful when only the boundary mark counts matter (the
    n-cycle orientation behind it would be irrelevant or degenerate).
    """
    ribbon = MarkedRibbon(k1, k2).validate()
    arcs = []
    t = b = 0
    for step in ["top"] * k1 + ["bot"] * k2:
        arcs.append(Arc.of((TOP, t), (BOT, b)))
        if step == "top":
            t += 1
        else:
            b += 1
    return SigmaTriangulation(ribbon, arcs)


# -- plot data -----------------------------------------------------------------


def triangulation_to_json(T: SigmaTriangulation) -> dict:
    """Serializable dump with strip coordinates for an external renderer."""
    ribbon = T.ribbon
    return {
        "k1": ribbon.k1,
        "k2": ribbon.k2,
        "periodX": ribbon.period_x(),
        "arcs": [
            {
                "orbit": idx,
                "from": {"boundary": a.p1[0], "index": a.p1[1], "x": ribbon.x(a.p1)},
                "to": {"boundary": a.p2[0], "index": a.p2[1], "x": ribbon.x(a.p2)},
                "bridging": a.is_bridging(),
            }
            for idx, a in enumerate(T.arcs)
        ],
    }
