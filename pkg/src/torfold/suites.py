"""Named verification suites with deterministic, machine-readable reports.

Each suite returns a plain dict (JSON-serializable, no volatile fields such
as timings, so identical configurations produce byte-identical reports).
All randomness flows from one seed; trial k uses its own stream seeded by
``seed + k`` so parallel or reordered execution cannot change the report.
"""

from __future__ import annotations

import itertools
import random

from .errors import InputError
from .laurent import MUT, denominator_vector
from .periodic import (
    PeriodicQuiver,
    admissibility_check,
    build_AQ,
    build_gamma_infinity,
    foldability_search,
    orbit_mutate,
)
from .quiver import IceQuiver, mutate
from .seeds import (
    RootInterval,
    Seed,
    fold_orbit_seed,
    initial_orbit_seed,
    is_orbit_cluster_root,
    mutate_seed,
    orbit_mutate_seed,
)
from .surface import (
    check_no_virtual_2cycles,
    default_triangulation,
    flip,
    quiver_of,
    staircase_triangulation,
)
from .ymono import (
    YMonomial,
    a_monomial,
    d_grade,
    nakajima_leq,
    phi_fold,
    xi,
    y_var,
)
from . import exchange

DEFAULT_SEED = 42
DEFAULT_DEPTH = 6
DEFAULT_TRIALS = 200


def _result(suite: str, config: dict, checks: list) -> dict:
    return {
        "suite": suite,
        "config": config,
        "passed": all(c["passed"] for c in checks),
        "checks": checks,
    }


def _check(name: str, passed: bool, **details) -> dict:
    out = {"name": name, "passed": bool(passed)}
    if details:
        out["details"] = details
    return out


# -- random generators ----------------------------------------------------------


def random_ice_quiver(rng: random.Random, max_vertices: int = 12, max_mult: int = 3):
    n = rng.randint(2, max_vertices)
    frozen = [rng.random() < 0.25 for _ in range(n)]
    if all(frozen):
        frozen[0] = False
    arrows = {}
    for u in range(n):
        for v in range(u + 1, n):
            if frozen[u] and frozen[v]:
                continue
            m = rng.randint(0, max_mult)
            if m:
                if rng.random() < 0.5:
                    arrows[(u, v)] = m
                else:
                    arrows[(v, u)] = m
    return IceQuiver({i: frozen[i] for i in range(n)}, arrows)


def _cycle_orientations(n: int):
    """All orientations of the n-cycle that are valid ice quivers."""
    for bits in itertools.product([0, 1], repeat=n):
        arrows = {}
        ok = True
        for m in range(n):
            nxt = (m + 1) % n
            key = (m, nxt) if bits[m] else (nxt, m)
            if (key[1], key[0]) in arrows:
                ok = False
                break
            arrows[key] = 1
        if ok:
            yield bits, IceQuiver({i: False for i in range(n)}, arrows)


def _is_cyclic(bits) -> bool:
    return all(b == bits[0] for b in bits)


# -- suites ----------------------------------------------------------------------


def suite_involution(trials: int = 1000, seed: int = DEFAULT_SEED) -> dict:
    """Mutation is an involution; distant mutations commute; invariants persist."""
    involution_fails = []
    commute_fails = []
    invariant_fails = []
    for t in range(trials):
        rng = random.Random(seed + t)
        q = random_ice_quiver(rng)
        mutables = q.mutable_ids()
        if not mutables:
            continue
        z = rng.choice(mutables)
        mz = mutate(q, z)
        try:
            mz._validate()
        except InputError as exc:
            invariant_fails.append({"trial": t, "error": str(exc)})
        if mutate(mz, z) != q:
            involution_fails.append({"trial": t, "vertex": z})
        pairs = [
            (a, b)
            for a in mutables
            for b in mutables
            if a < b and not q.mult(a, b) and not q.mult(b, a)
        ]
        if pairs:
            a, b = rng.choice(pairs)
            if mutate(mutate(q, a), b) != mutate(mutate(q, b), a):
                commute_fails.append({"trial": t, "pair": [a, b]})
    checks = [
        _check("involution", not involution_fails, failures=involution_fails[:5]),
        _check("commutation", not commute_fails, failures=commute_fails[:5]),
        _check("invariants-preserved", not invariant_fails, failures=invariant_fails[:5]),
    ]
    return _result("involution", {"trials": trials, "seed": seed}, checks)


def suite_foldability(
    pq: PeriodicQuiver | None = None,
    depth: int = DEFAULT_DEPTH,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
) -> dict:
    """Foldability of line quivers over cycle orientations (or one given quiver).

    Cyclic orientations must yield a virtual-2-cycle witness within the
    depth budget; non-cyclic orientations must survive random orbit
    sequences without ever losing admissibility.
    """
    checks = []
    if pq is not None:
        outcome = foldability_search(pq, depth)
        checks.append(
            _check(
                "search",
                True,
                verdict=outcome["verdict"],
                witness=outcome.get("witness"),
                violations=outcome.get("violations"),
            )
        )
        return _result("foldability", {"depth": depth, "input": "custom"}, checks)

    for n in range(3, 7):
        for bits, q in _cycle_orientations(n):
            aq = build_AQ(q)
            if _is_cyclic(bits):
                outcome = foldability_search(aq, depth)
                checks.append(
                    _check(
                        f"cyclic-n{n}",
                        outcome["verdict"] == "violation-found",
                        witness=outcome.get("witness"),
                        depth_found=len(outcome.get("witness") or []),
                    )
                )
            else:
                bad = None
                for t in range(trials):
                    rng = random.Random(seed + t)
                    current = aq
                    seq = []
                    for _ in range(rng.randint(1, depth)):
                        site = rng.randrange(n)
                        if seq and seq[-1] == site:
                            continue
                        current = orbit_mutate(current, site)
                        seq.append(site)
                        if not admissibility_check(current)["admissible"]:
                            bad = {"orientation": list(bits), "sequence": seq}
                            break
                    if bad:
                        break
                checks.append(
                    _check(f"noncyclic-n{n}-{''.join(map(str, bits))}", bad is None, witness=bad)
                )
    config = {"depth": depth, "trials": trials, "seed": seed, "cycles": "3..6"}
    return _result("foldability", config, checks)


def _unrolled_dvector(poly, period: int):
    """Denominator vector of an orbit-cluster entry, read on the unrolled line.

    Returns ("negativeSimple", v) for an initial variable, ("interval", a, b)
    for an all-ones contiguous support, or ("other", ...) otherwise.
    """
    keys = sorted(
        (k for k in poly.variables() if k.layer == MUT),
        key=lambda k: (k.site + period * k.shift),
    )
    dv = denominator_vector(poly, keys)
    neg = {k for k, e in dv.items() if e < 0}
    pos = {k for k, e in dv.items() if e > 0}
    if any(e not in (-1, 0, 1) for e in dv.values()):
        return ("other", "entry outside {-1,0,1}")
    if neg:
        if len(neg) == 1 and not pos:
            k = next(iter(neg))
            return ("negativeSimple", k.site + period * k.shift)
        return ("other", "mixed signs")
    line = sorted(k.site + period * k.shift for k in pos)
    if not line:
        return ("other", "zero vector")
    if line != list(range(line[0], line[-1] + 1)):
        return ("other", "support not an interval")
    return ("interval", line[0], line[-1])


def suite_cluster_folding(
    n: int,
    depth: int = DEFAULT_DEPTH,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
) -> dict:
    """Folding the orbit-seed commutes with mutating the folded seed, exactly.

    Also classifies every denominator vector met along the way (almost
    positive roots of odd length, or even length below the period) and
    checks each admissible root supported in one period is reachable.
    """
    p = 2 * n
    base = build_gamma_infinity(n)
    initial = initial_orbit_seed(base)
    folded_initial = fold_orbit_seed(initial)
    mismatch = []
    bad_roots = []
    seen_roots = set()
    for t in range(trials):
        rng = random.Random(seed + t)
        length = rng.randint(1, depth)
        os_ = initial
        fs = folded_initial
        seq = []
        for _ in range(length):
            site = rng.randrange(p)
            if seq and seq[-1] == site:
                continue
            seq.append(site)
            os_ = orbit_mutate_seed(os_, site)
            fs = mutate_seed(fs, site)
            if fold_orbit_seed(os_) != Seed(fs.quiver, fs.cluster):
                mismatch.append({"trial": t, "sequence": seq})
                break
            for s in range(p):
                kind = _unrolled_dvector(os_.cluster[s], p)
                if kind[0] == "negativeSimple":
                    seen_roots.add(("neg", kind[1]))
                elif kind[0] == "interval":
                    a, b = kind[1], kind[2]
                    root = RootInterval.positive(a, b)
                    if not is_orbit_cluster_root(root, n):
                        bad_roots.append({"trial": t, "sequence": list(seq), "interval": [a, b]})
                    seen_roots.add(("pos", a, b))
                else:
                    bad_roots.append({"trial": t, "sequence": list(seq), "reason": kind})
        if mismatch:
            break

    # reachability: sweep sequences realize every admissible root supported
    # in one period
    unreachable = []
    for a in range(p):
        for b in range(a, p):
            root = RootInterval.positive(a, b)
            if not is_orbit_cluster_root(root, n):
                continue
            os_ = initial
            for site in range(a, b + 1):
                os_ = orbit_mutate_seed(os_, site % p)
            kind = _unrolled_dvector(os_.cluster[b % p], p)
            if kind != ("interval", a, b):
                unreachable.append({"interval": [a, b], "got": list(kind)})
    checks = [
        _check("fold-commutes-with-mutation", not mismatch, failures=mismatch[:3]),
        _check("dvectors-are-orbit-roots", not bad_roots, failures=bad_roots[:5]),
        _check("admissible-roots-reachable", not unreachable, failures=unreachable[:5]),
    ]
    config = {"n": n, "depth": depth, "trials": trials, "seed": seed}
    return _result("cluster-folding", config, checks)


def suite_flip_mutation(
    depth: int = DEFAULT_DEPTH,
    trials: int = 25,
    seed: int = DEFAULT_SEED,
) -> dict:
    """Flip/orbit-mutation compatibility on strip triangulations.

    Random flip walks on four boundary-mark profiles, the two
    virtual-2-cycle detectors on every visited triangulation, and the
    staircase construction reproducing the line quiver of every cycle
    orientation up to 6 vertices.
    """
    walk_fails = []
    detector_fails = []
    for k1, k2 in [(1, 1), (1, 2), (2, 2), (3, 3)]:
        for t in range(trials):
            rng = random.Random(seed + t)
            T = staircase_triangulation(k1, k2)
            q = quiver_of(T)
            for step in range(depth):
                orbit = rng.randrange(k1 + k2)
                T2 = flip(T, orbit)
                q2 = quiver_of(T2)
                if q2 != orbit_mutate(q, orbit):
                    walk_fails.append({"ribbon": [k1, k2], "trial": t, "step": step})
                    break
                rep = check_no_virtual_2cycles(T2)
                if not rep["clean"] or not rep["agree"]:
                    detector_fails.append({"ribbon": [k1, k2], "trial": t, "report": rep})
                    break
                T, q = T2, q2

    default_fails = []
    for n in range(3, 7):
        for bits, q in _cycle_orientations(n):
            if _is_cyclic(bits):
                continue
            if quiver_of(default_triangulation(q)) != build_AQ(q):
                default_fails.append({"n": n, "orientation": list(bits)})
    checks = [
        _check("flip-equals-orbit-mutation", not walk_fails, failures=walk_fails[:5]),
        _check("no-virtual-2cycles", not detector_fails, failures=detector_fails[:3]),
        _check("default-triangulation-quiver", not default_fails, failures=default_fails[:5]),
    ]
    config = {"depth": depth, "trials": trials, "seed": seed}
    return _result("flip-mutation", config, checks)


def suite_exchange_identities(n: int = 3, budget: int = 10) -> dict:
    """The four standard identities on a grid plus the folded three-term sum."""
    reports = exchange.verify_exchange_identities(bfs_budget=budget)
    reports.append(exchange.verify_folded_identity(n, bfs_budget=budget))
    checks = [
        _check(
            f"{r['identity']}"
            + (f"-i{r['i']}-j{r['j']}" if "i" in r else f"-n{r.get('n')}"),
            r["status"] == "verified",
            frozen=r.get("discovered_frozen_monomials"),
            witness=r.get("witness"),
        )
        for r in reports
    ]
    return _result("exchange-identities", {"n": n, "budget": budget}, checks)


def suite_ymonomial(seed: int = DEFAULT_SEED) -> dict:
    """Folding map compatibility, Nakajima order laws, grading identities."""
    checks = []

    grid_fail = None
    for n in (1, 2, 3):
        for i in range(-8, 9):
            for k in range(-8, 9):
                if phi_fold(a_monomial(i, k), n) != a_monomial(i, k, modulus=2 * n):
                    grid_fail = {"n": n, "i": i, "k": k}
    checks.append(_check("phi-A-compatibility", grid_fail is None, failure=grid_fail))

    rng = random.Random(seed)
    hom_fail = None
    for _ in range(200):
        n = rng.randint(1, 3)
        m1 = YMonomial(
            {(rng.randint(-8, 8), rng.randint(-8, 8)): rng.randint(-3, 3) for _ in range(3)}
        )
        m2 = YMonomial(
            {(rng.randint(-8, 8), rng.randint(-8, 8)): rng.randint(-3, 3) for _ in range(3)}
        )
        if phi_fold(m1 * m2, n) != phi_fold(m1, n) * phi_fold(m2, n):
            hom_fail = {"n": n}
    checks.append(_check("phi-homomorphism", hom_fail is None, failure=hom_fail))

    worked_ok = nakajima_leq(
        YMonomial({(0, 2): 1, (2, 2): 1}), YMonomial({(1, 1): 1, (1, 3): 1})
    ) == (True, {(1, 2): 1})
    checks.append(_check("nakajima-worked-certificate", worked_ok))

    reflexive_fail = None
    injective_fail = None
    for t in range(1000):
        rng = random.Random(seed + t)
        fam = None if t % 2 == 0 else 2 * rng.randint(1, 3)
        m = YMonomial(
            {(rng.randint(-6, 6), rng.randint(-6, 6)): rng.randint(-2, 2) for _ in range(3)},
            fam,
        )
        ok, cert = nakajima_leq(m, m)
        if not ok or cert != {}:
            reflexive_fail = {"trial": t}
        prod = YMonomial({}, fam)
        nonzero = False
        for _ in range(rng.randint(1, 4)):
            c = rng.randint(0, 2)
            nonzero = nonzero or c > 0
            prod = prod * a_monomial(
                rng.randint(-5, 5), rng.randint(-5, 5), modulus=fam
            ) ** (-c)
        if nonzero and prod.is_trivial():
            injective_fail = {"trial": t}
    checks.append(_check("nakajima-reflexive", reflexive_fail is None, failure=reflexive_fail))
    checks.append(
        _check("certificate-map-injective", injective_fail is None, failure=injective_fail)
    )

    grading_fail = None
    for n in (1, 2, 3):
        p = 2 * n
        for i in range(p):
            pair = YMonomial({(i, xi(i)): 1, (i, xi(i) + 2): 1}, p)
            if d_grade(pair) != 0:
                grading_fail = {"n": n, "i": i, "kind": "pair"}
            m = y_var(i, xi(i), modulus=p) * y_var((i + 1) % p, xi(i + 1), modulus=p)
            drop = m * a_monomial(i, xi(i) + 1, modulus=p).inverse()
            if d_grade(drop) != d_grade(m) - 2:
                grading_fail = {"n": n, "i": i, "kind": "A-drop"}
    checks.append(_check("d-grading-identities", grading_fail is None, failure=grading_fail))

    return _result("ymonomial", {"seed": seed}, checks)


SUITES = {
    "involution": suite_involution,
    "foldability": suite_foldability,
    "cluster-folding": suite_cluster_folding,
    "flip-mutation": suite_flip_mutation,
    "exchange-identities": suite_exchange_identities,
    "ymonomial": suite_ymonomial,
}
