"""Finite ice quivers: arrow counting, mutation, normalization, JSON I/O."""

from __future__ import annotations

import json
from typing import Iterable

from .errors import FrozenVertexError, InputError
from .laurent import _site_sort_key


class IceQuiver:
    """Finite quiver with frozen flags and arrow multiplicities.

    Arrows are stored as a (source, target) -> multiplicity map, which is
    what the mutation rule manipulates. Instances are immutable and always
    kept in normal form: sorted vertex list, merged arrows, no zero
    multiplicities. Structural equality is equality of normal forms
    (label-sensitive, no isomorphism search).
    """

    __slots__ = ("vertices", "arrows", "_frozen", "_hash")

    def __init__(self, vertices, arrows, _validated=False):
        vs = sorted(dict(vertices).items(), key=lambda kv: _site_sort_key(kv[0]))
        self.vertices = tuple((v, bool(fr)) for v, fr in vs)
        merged: dict[tuple, int] = {}
        for (u, v), m in dict(arrows).items():
            m = int(m)
            if m < 0:
                raise InputError(f"negative multiplicity on arrow {u}->{v}")
            if m:
                merged[(u, v)] = merged.get((u, v), 0) + m
        self.arrows = dict(
            sorted(
                merged.items(),
                key=lambda kv: (_site_sort_key(kv[0][0]), _site_sort_key(kv[0][1])),
            )
        )
        self._frozen = frozenset(v for v, fr in self.vertices if fr)
        self._hash = None
        if not _validated:
            self._validate()

    def _validate(self):
        ids = [v for v, _ in self.vertices]
        if len(set(ids)) != len(ids):
            raise InputError("duplicate vertex ids")
        known = set(ids)
        for (u, v), m in self.arrows.items():
            if u not in known or v not in known:
                raise InputError(f"arrow {u}->{v} references unknown vertex")
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if (v, u) in self.arrows:
                raise InputError(f"2-cycle between {u} and {v}")
            if u in self._frozen and v in self._frozen:
                raise InputError(f"arrow between frozen vertices {u} and {v}")

    # -- protocol -----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, IceQuiver)
            and self.vertices == other.vertices
            and self.arrows == other.arrows
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vertices, tuple(self.arrows.items())))
        return self._hash

    def __repr__(self):
        arrows = ", ".join(f"{u}->{v}x{m}" for (u, v), m in self.arrows.items())
        return f"IceQuiver({[v for v, _ in self.vertices]}; {arrows})"

    # -- queries ------------------------------------------------------------

    def vertex_ids(self):
        return [v for v, _ in self.vertices]

    def is_frozen(self, v) -> bool:
        if v not in dict(self.vertices):
            raise InputError(f"unknown vertex {v}")
        return v in self._frozen

    def mutable_ids(self):
        return [v for v, fr in self.vertices if not fr]

    def frozen_ids(self):
        return [v for v, fr in self.vertices if fr]

    def mult(self, u, v) -> int:
        return self.arrows.get((u, v), 0)


def arr_count(q: IceQuiver, X: Iterable, Y: Iterable) -> int:
    """Number of arrows from vertex set X to vertex set Y (with multiplicity)."""
    xs, ys = set(X), set(Y)
    known = set(q.vertex_ids())
    for v in xs | ys:
        if v not in known:
            raise InputError(f"unknown vertex {v}")
    return sum(m for (u, v), m in q.arrows.items() if u in xs and v in ys)


def mutate(q: IceQuiver, z) -> IceQuiver:
    """Quiver mutation at the mutable vertex z."""
    if z not in set(q.vertex_ids()):
        raise InputError(f"unknown vertex {z}")
    if q.is_frozen(z):
        raise FrozenVertexError(f"cannot mutate at frozen vertex {z}")

    frozen = set(q.frozen_ids())
    into_z = {u: m for (u, v), m in q.arrows.items() if v == z}
    from_z = {v: m for (u, v), m in q.arrows.items() if u == z}

    new: dict[tuple, int] = {}
    # arrows incident to z are reversed
    for u, m in into_z.items():
        new[(z, u)] = m
    for v, m in from_z.items():
        new[(v, z)] = m
    # remaining pairs follow max{0, b_xy - b_yx} with
    # b_xy = Arr(x,y) + Arr(x,z) * Arr(z,y)
    pairs = set()
    for (u, v) in q.arrows:
        if z not in (u, v):
            pairs.add((u, v))
            pairs.add((v, u))
    for u in into_z:
        for v in from_z:
            if u != v and z not in (u, v):
                pairs.add((u, v))
                pairs.add((v, u))
    done = set()
    for (x, y) in pairs:
        if (x, y) in done or (y, x) in done:
            continue
        done.add((x, y))
        if x in frozen and y in frozen:
            continue
        bxy = q.mult(x, y) + into_z.get(x, 0) * from_z.get(y, 0)
        byx = q.mult(y, x) + into_z.get(y, 0) * from_z.get(x, 0)
        if bxy > byx:
            new[(x, y)] = bxy - byx
        elif byx > bxy:
            new[(y, x)] = byx - bxy
    return IceQuiver(dict(q.vertices), new, _validated=True)


def normalize(q: IceQuiver) -> IceQuiver:
    """Return the canonical form of q (constructor already normalizes)."""
    return IceQuiver(dict(q.vertices), dict(q.arrows), _validated=True)


# -- JSON wire format --------------------------------------------------------


def quiver_to_json(q: IceQuiver) -> dict:
    return {
        "vertices": [{"id": str(v), "frozen": fr} for v, fr in q.vertices],
        "arrows": [
            {"from": str(u), "to": str(v), "mult": m} for (u, v), m in q.arrows.items()
        ],
    }


def _vertex_id(raw):
    """Integer-looking ids become ints so JSON roundtrips integer labels."""
    s = str(raw)
    return int(s) if s.lstrip("-").isdigit() else s


def quiver_from_json(data: dict) -> IceQuiver:
    """Parse the JSON format, rejecting loops/2-cycles/frozen-frozen arrows."""
    try:
        vertices = {_vertex_id(v["id"]): bool(v.get("frozen", False)) for v in data["vertices"]}
        arrows: dict[tuple, int] = {}
        for a in data["arrows"]:
            u, v, m = _vertex_id(a["from"]), _vertex_id(a["to"]), int(a.get("mult", 1))
            arrows[(u, v)] = arrows.get((u, v), 0) + m
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed quiver JSON: {exc}") from exc
    frozen = {v for v, fr in vertices.items() if fr}
    for (u, v), m in arrows.items():
        if u == v:
            raise InputError(f"loop at vertex {u}")
        if arrows.get((v, u), 0) and m:
            raise InputError(f"2-cycle between vertices {u} and {v}")
        if u in frozen and v in frozen:
            raise InputError(f"arrow between frozen vertices {u} and {v}")
    return IceQuiver(vertices, arrows)


def quiver_from_path(path: str) -> IceQuiver:
    with open(path) as fh:
        return quiver_from_json(json.load(fh))
