"""Seeds and orbit-seeds: exchange-relation mutation of cluster variables.

A seed pairs a finite ice quiver with one Laurent polynomial per vertex; an
orbit-seed pairs a periodic quiver with one polynomial per site, the copy-0
representative (copy k is obtained by shifting every variable by k). All
divisions in the exchange relation must be exact; a remainder aborts the
computation loudly because it would falsify the Laurent phenomenon.
"""

from __future__ import annotations

from collections import deque
from typing import NamedTuple

from .errors import (
    FoldabilityViolationError,
    FrozenVertexError,
    InputError,
    SearchExhaustedError,
)
from .laurent import (
    FROZEN,
    MUT,
    LaurentPoly,
    VarKey,
    denominator_vector,
    exact_div,
    fold_substitute,
    poly_to_json,
    shift_substitute,
)
from .periodic import PeriodicQuiver, admissibility_check, fold, orbit_mutate
from .quiver import IceQuiver, mutate, quiver_to_json


class Seed:
    """Immutable (quiver, cluster, history) triple for a finite ice quiver."""

    __slots__ = ("quiver", "cluster", "history")

    def __init__(self, quiver: IceQuiver, cluster: dict, history=()):
        self.quiver = quiver
        self.cluster = dict(cluster)
        self.history = tuple(history)
        missing = set(quiver.vertex_ids()) - set(self.cluster)
        if missing:
            raise InputError(f"cluster missing entries for vertices {sorted(missing, key=str)}")

    def __eq__(self, other):
        return (
            isinstance(other, Seed)
            and self.quiver == other.quiver
            and self.cluster == other.cluster
        )

    def __hash__(self):
        return hash((self.quiver, frozenset(self.cluster.items())))

    def __repr__(self):
        return f"Seed(history={list(self.history)})"


class OrbitSeed:
    """Immutable (periodic quiver, copy-0 cluster, history) triple."""

    __slots__ = ("pquiver", "cluster", "history")

    def __init__(self, pquiver: PeriodicQuiver, cluster: dict, history=()):
        self.pquiver = pquiver
        self.cluster = dict(cluster)
        self.history = tuple(history)
        missing = set(pquiver.site_ids()) - set(self.cluster)
        if missing:
            raise InputError(f"cluster missing entries for sites {sorted(missing, key=str)}")

    def __eq__(self, other):
        return (
            isinstance(other, OrbitSeed)
            and self.pquiver == other.pquiver
            and self.cluster == other.cluster
        )

    def __hash__(self):
        return hash((self.pquiver, frozenset(self.cluster.items())))

    def __repr__(self):
        return f"OrbitSeed(history={list(self.history)})"


def initial_seed(q: IceQuiver) -> Seed:
    cluster = {
        v: LaurentPoly.var(VarKey(v, 0, FROZEN if fr else MUT)) for v, fr in q.vertices
    }
    return Seed(q, cluster)


def initial_orbit_seed(pq: PeriodicQuiver) -> OrbitSeed:
    report = admissibility_check(pq)
    if not report["admissible"]:
        raise InputError(f"initial quiver is inadmissible: {report['violations']}")
    cluster = {
        s: LaurentPoly.var(VarKey(s, 0, FROZEN if fr else MUT)) for s, fr in pq.sites
    }
    return OrbitSeed(pq, cluster)


def mutate_seed(s: Seed, z) -> Seed:
    """Exchange-relation mutation: x'_z = (prod out + prod in) / x_z."""
    if s.quiver.is_frozen(z):
        raise FrozenVertexError(f"cannot mutate seed at frozen vertex {z}")
    out_prod = LaurentPoly.one()
    in_prod = LaurentPoly.one()
    for (u, v), m in s.quiver.arrows.items():
        if u == z:
            out_prod = out_prod * s.cluster[v] ** m
        elif v == z:
            in_prod = in_prod * s.cluster[u] ** m
    new_var = exact_div(out_prod + in_prod, s.cluster[z])
    cluster = dict(s.cluster)
    cluster[z] = new_var
    return Seed(mutate(s.quiver, z), cluster, s.history + (z,))


def orbit_mutate_seed(os: OrbitSeed, K) -> OrbitSeed:
    """Simultaneous exchange at every copy of site K.

    Neighbor variables enter the exchange binomial with the shift dictated
    by the arrow: the stored polynomial is the copy-0 representative, so an
    arrow reaching copy k contributes its shift-k substitution.
    """
    if os.pquiver.is_frozen(K):
        raise FrozenVertexError(f"cannot mutate orbit seed at frozen site {K}")
    new_q = orbit_mutate(os.pquiver, K)
    report = admissibility_check(new_q)
    if not report["admissible"]:
        raise FoldabilityViolationError(
            f"orbit-mutation at {K} breaks admissibility",
            witness=list(os.history) + [K],
            violations=report["violations"],
        )
    out_prod = LaurentPoly.one()
    in_prod = LaurentPoly.one()
    for (u, v, sh), m in os.pquiver.arrows.items():
        if u == K:
            # (K, 0) -> (v, sh)
            out_prod = out_prod * shift_substitute(os.cluster[v], sh) ** m
        elif v == K:
            # (u, -sh) -> (K, 0)
            in_prod = in_prod * shift_substitute(os.cluster[u], -sh) ** m
    new_var = exact_div(out_prod + in_prod, os.cluster[K])
    cluster = dict(os.cluster)
    cluster[K] = new_var
    return OrbitSeed(new_q, cluster, os.history + (K,))


def fold_orbit_seed(os: OrbitSeed) -> Seed:
    """Collapse all copies onto copy 0: the folded seed over the folded quiver."""
    folded_cluster = {site: fold_substitute(p) for site, p in os.cluster.items()}
    return Seed(fold(os.pquiver), folded_cluster, os.history)


def seed_to_json(s: Seed) -> dict:
    return {
        "quiver": quiver_to_json(s.quiver),
        "cluster": {str(v): poly_to_json(p) for v, p in s.cluster.items()},
        "history": [str(z) for z in s.history],
    }


# -- windows of the doubly infinite alternating ice quiver --------------------


def build_window_seed(a: int, b: int) -> Seed:
    """Initial seed on the vertex window [a, b] of the infinite alternating quiver.

    Mutable vertices are the integers a..b; each has a frozen partner
    ("f", i). Even vertices source arrows to both horizontal neighbors and
    receive one from their frozen partner; odd vertices send one to theirs.
    Arrows leaving the window are dropped.
    """
    if a > b:
        raise InputError("empty window")
    vertices = {i: False for i in range(a, b + 1)}
    vertices.update({("f", i): True for i in range(a, b + 1)})
    arrows: dict[tuple, int] = {}
    for i in range(a, b + 1):
        if i % 2 == 0:
            if i + 1 <= b:
                arrows[(i, i + 1)] = 1
            if i - 1 >= a:
                arrows[(i, i - 1)] = 1
            arrows[(("f", i), i)] = 1
        else:
            arrows[(i, ("f", i))] = 1
    return initial_seed(IceQuiver(vertices, arrows))


class RootInterval(NamedTuple):
    """Almost positive root: the interval sum alpha_i + ... + alpha_j, or -alpha_i."""

    i: int
    j: int
    sign: str = "positive"  # or "negativeSimple"

    @staticmethod
    def positive(i: int, j: int) -> "RootInterval":
        if i > j:
            raise InputError("interval root requires i <= j")
        return RootInterval(i, j, "positive")

    @staticmethod
    def negative_simple(i: int) -> "RootInterval":
        return RootInterval(i, i, "negativeSimple")

    def length(self) -> int:
        return self.j - self.i + 1

    def validate(self):
        if self.sign not in ("positive", "negativeSimple"):
            raise InputError(f"unknown root sign {self.sign!r}")
        if self.sign == "negativeSimple" and self.i != self.j:
            raise InputError("negative simple root requires i == j")
        if self.i > self.j:
            raise InputError("interval root requires i <= j")
        return self


def is_orbit_cluster_root(root: RootInterval, n: int) -> bool:
    """Whether the root labels a cluster variable reachable by orbit-mutations.

    True for negative simple roots, intervals of odd length, and intervals
    of even length strictly smaller than 2n.
    """
    root.validate()
    if root.sign == "negativeSimple":
        return True
    length = root.length()
    return length % 2 == 1 or length < 2 * n


def _dvector_matches(p: LaurentPoly, root: RootInterval, mutable_keys) -> bool:
    dv = denominator_vector(p, mutable_keys)
    if root.sign == "negativeSimple":
        want = {k: (-1 if k.site == root.i else 0) for k in mutable_keys}
    else:
        want = {k: (1 if root.i <= k.site <= root.j else 0) for k in mutable_keys}
    return dv == want


def find_cluster_variable(
    window: Seed, root: RootInterval, bfs_budget: int = 10
) -> LaurentPoly:
    """Cluster variable of the window whose denominator vector equals the root.

    Tries the targeted sequence "mutate the support left to right" first;
    falls back to breadth-first search over seeds in lexicographic vertex
    order up to ``bfs_budget`` mutations. Deterministic: first match wins.
    """
    root.validate()
    mutable_keys = [VarKey(v, 0, MUT) for v in window.quiver.mutable_ids()]
    sites = {k.site for k in mutable_keys}
    if root.sign == "negativeSimple":
        if root.i not in sites:
            raise InputError(f"root vertex {root.i} outside window")
        return window.cluster[root.i]
    if not all(v in sites for v in range(root.i, root.j + 1)):
        raise InputError(f"root support [{root.i},{root.j}] outside window")

    # targeted pass: sweep the support left to right
    s = window
    for v in range(root.i, root.j + 1):
        s = mutate_seed(s, v)
        if _dvector_matches(s.cluster[v], root, mutable_keys):
            return s.cluster[v]

    # bounded BFS fallback
    order = sorted(window.quiver.mutable_ids())
    queue = deque([window])
    seen = {window}
    while queue:
        current = queue.popleft()
        if len(current.history) >= bfs_budget:
            continue
        for v in order:
            if current.history and current.history[-1] == v:
                continue
            nxt = mutate_seed(current, v)
            if _dvector_matches(nxt.cluster[v], root, mutable_keys):
                return nxt.cluster[v]
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    raise SearchExhaustedError(
        f"no cluster variable with denominator vector for [{root.i},{root.j}] "
        f"within budget {bfs_budget}"
    )
