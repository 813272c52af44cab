"""Multiplicative monomials Y_{i,q^k} with integer spectral exponents.

A ``YMonomial`` is a finitely supported exponent map (site, qpower) -> int.
Sites live either on the integer line (``modulus is None``) or on residues
mod 2n (``modulus == 2n``); the two families never mix. All operations are
exact integer arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, InputError


class YMonomial:
    """Element of the free abelian group on the variables Y_{site, q^power}."""

    __slots__ = ("exps", "modulus", "_hash")

    def __init__(self, exps=None, modulus=None):
        self.modulus = None if modulus is None else int(modulus)
        if self.modulus is not None and self.modulus <= 0:
            raise InputError("modulus must be positive")
        merged: dict[tuple, int] = {}
        for (site, power), e in dict(exps or {}).items():
            if self.modulus is not None:
                site = site % self.modulus
            key = (int(site), int(power))
            ne = merged.get(key, 0) + int(e)
            if ne:
                merged[key] = ne
            elif key in merged:
                del merged[key]
        self.exps = tuple(sorted(merged.items()))
        self._hash = None

    # -- protocol ------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, YMonomial)
            and self.modulus == other.modulus
            and self.exps == other.exps
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.modulus, self.exps))
        return self._hash

    def __repr__(self):
        return f"YMonomial({self.as_str()}, mod={self.modulus})"

    def as_str(self) -> str:
        if not self.exps:
            return "1"
        parts = []
        for (i, k), e in self.exps:
            parts.append(f"Y[{i},{k}]" + (f"^{e}" if e != 1 else ""))
        return "*".join(parts)

    # -- group operations ------------------------------------------------------

    def _check_family(self, other: "YMonomial"):
        if self.modulus != other.modulus:
            raise InputError("cannot mix monomials from different index families")

    def __mul__(self, other: "YMonomial") -> "YMonomial":
        self._check_family(other)
        out = dict(self.exps)
        for key, e in other.exps:
            out[key] = out.get(key, 0) + e
        return YMonomial(out, self.modulus)

    def inverse(self) -> "YMonomial":
        return YMonomial({key: -e for key, e in self.exps}, self.modulus)

    def __pow__(self, n: int) -> "YMonomial":
        return YMonomial({key: e * n for key, e in self.exps}, self.modulus)

    def is_trivial(self) -> bool:
        return not self.exps

    def is_dominant(self) -> bool:
        """All exponents nonnegative (a product of Y's without inverses)."""
        return all(e >= 0 for _, e in self.exps)

    def exponent(self, site: int, power: int) -> int:
        if self.modulus is not None:
            site = site % self.modulus
        return dict(self.exps).get((site, power), 0)


def y_var(site: int, power: int, modulus=None, exp: int = 1) -> YMonomial:
    return YMonomial({(site, power): exp}, modulus)


def a_monomial(i: int, k: int, modulus=None) -> YMonomial:
    """A_{i,q^k} = Y_{i,k-1} Y_{i,k+1} Y_{i-1,k}^{-1} Y_{i+1,k}^{-1}.

    On toroidal sites the neighbors i±1 wrap modulo 2n, which can merge
    them (modulus 2 gives Y_{i+1,k}^{-2}).
    """
    exps: dict[tuple, int] = {}
    for key, e in [((i, k - 1), 1), ((i, k + 1), 1), ((i - 1, k), -1), ((i + 1, k), -1)]:
        site, power = key
        if modulus is not None:
            site = site % modulus
        exps[(site, power)] = exps.get((site, power), 0) + e
    return YMonomial(exps, modulus)


def phi_fold(m: YMonomial, n: int) -> YMonomial:
    """Fold the integer-line monomial onto residues mod 2n (site i -> i mod 2n)."""
    if m.modulus is not None:
        raise InputError("phi_fold expects a monomial on the integer line")
    if n <= 0:
        raise InputError("n must be positive")
    p = 2 * n
    folded: dict[tuple, int] = {}
    for (site, power), e in m.exps:
        key = (site % p, power)
        folded[key] = folded.get(key, 0) + e
    return YMonomial(folded, p)


# -- Nakajima partial order ----------------------------------------------------


def nakajima_leq(m1: YMonomial, m2: YMonomial):
    """Decide m1 <= m2, i.e. m1 * m2^{-1} is a product of A^{-1} factors.

    Returns (True, certificate) where ``certificate`` maps (site, qpower) to
    the nonnegative exponent c with m1 = m2 * prod A_{i,q^k}^{-c(i,k)}, or
    (False, None). Decision by an exact linear solve over a bounding box of
    the support (the exponent system is triangular in the q-power direction,
    so certificates localize near the support; the box is expanded once on
    infeasibility before reporting False).
    """
    m1._check_family(m2)
    diff = m1 * m2.inverse()
    if diff.is_trivial():
        return True, {}
    for pad in (1, 2):
        cert = _solve_a_certificate(diff, pad)
        if cert is not None:
            return True, cert
    return False, None


def _solve_a_certificate(diff: YMonomial, pad: int):
    """Solve diff = prod A_{i,q^k}^{-c(i,k)} for integer c >= 0 on a padded box."""
    modulus = diff.modulus
    sites = [s for (s, _p), _e in diff.exps]
    powers = [p for (_s, p), _e in diff.exps]
    pmin, pmax = min(powers) - pad, max(powers) + pad
    if modulus is None:
        smin, smax = min(sites) - pad, max(sites) + pad
        unknown_sites = range(smin, smax + 1)
    else:
        unknown_sites = range(modulus)
    unknowns = [(s, p) for s in unknown_sites for p in range(pmin, pmax + 1)]
    index = {u: idx for idx, u in enumerate(unknowns)}

    # exponent of Y_{j,l} in prod A_{i,k}^{-c}:
    #   -c(j,l-1) - c(j,l+1) + c(j-1,l) + c(j+1,l)
    def contributions(j, l):
        out: dict[int, int] = {}
        for (s, p), w in [((j, l - 1), -1), ((j, l + 1), -1), ((j - 1, l), 1), ((j + 1, l), 1)]:
            if modulus is not None:
                s = s % modulus
            if (s, p) in index:
                out[index[(s, p)]] = out.get(index[(s, p)], 0) + w
        return out

    # equations at every Y-slot any unknown can touch
    eq_sites = set()
    for (s, p) in unknowns:
        for (j, l) in [(s, p - 1), (s, p + 1), (s - 1, p), (s + 1, p)]:
            if modulus is not None:
                j = j % modulus
            eq_sites.add((j, l))
    eq_sites |= {key for key, _ in diff.exps}

    target = dict(diff.exps)
    rows = []
    for (j, l) in sorted(eq_sites):
        coeffs = contributions(j, l)
        rhs = target.get((j, l), 0)
        if coeffs or rhs:
            rows.append((coeffs, rhs))

    solution = _solve_exact(rows, len(unknowns))
    if solution is None:
        return None
    cert = {}
    for (s, p), idx in index.items():
        val = solution[idx]
        if val.denominator != 1 or val < 0:
            return None
        if val:
            cert[(s, p)] = int(val)
    return cert


def _solve_exact(rows, nvars):
    """Gaussian elimination over the rationals; None when inconsistent.

    Free variables are pinned to zero (the certificate map is injective, so
    a genuine solution is unique and elimination recovers it exactly).
    """
    matrix = []
    for coeffs, rhs in rows:
        row = [Fraction(0)] * nvars + [Fraction(rhs)]
        for idx, w in coeffs.items():
            row[idx] = Fraction(w)
        matrix.append(row)
    pivots = []
    r = 0
    for c in range(nvars):
        pivot = next((k for k in range(r, len(matrix)) if matrix[k][c] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        pv = matrix[r][c]
        matrix[r] = [x / pv for x in matrix[r]]
        for k in range(len(matrix)):
            if k != r and matrix[k][c] != 0:
                factor = matrix[k][c]
                matrix[k] = [a - factor * b for a, b in zip(matrix[k], matrix[r])]
        pivots.append(c)
        r += 1
        if r == len(matrix):
            break
    for k in range(r, len(matrix)):
        if matrix[k][nvars] != 0:
            return None
    solution = [Fraction(0)] * nvars
    for row_idx, c in enumerate(pivots):
        solution[c] = matrix[row_idx][nvars]
    return solution


# -- root monomials, KR monomials, grading -------------------------------------


def xi(i: int) -> int:
    """Parity marker: 0 on even sites, 1 on odd sites."""
    return i % 2


def m_alpha_simple(i: int, positive: bool) -> YMonomial:
    """Monomial of +/- a simple root on the integer line.

    Positive simple roots take q-power xi(i) on even sites and xi(i)+2 on
    odd sites; negative simples swap the two.
    """
    if positive:
        power = xi(i) if i % 2 == 0 else xi(i) + 2
    else:
        power = xi(i) + 2 if i % 2 == 0 else xi(i)
    return y_var(i, power)


def m_alpha(root) -> YMonomial:
    """Monomial of an almost positive root (interval product of simples)."""
    root.validate()
    if root.sign == "negativeSimple":
        return m_alpha_simple(root.i, positive=False)
    out = YMonomial({}, None)
    for k in range(root.i, root.j + 1):
        out = out * m_alpha_simple(k, positive=True)
    return out


def kr_monomial(i: int, aPower: int, k: int, modulus=None) -> YMonomial:
    """Kirillov-Reshetikhin highest weight: prod_{j=1}^{k} Y_{i, aPower+2(j-1)}."""
    if k < 0:
        raise InputError("k must be nonnegative")
    exps: dict[tuple, int] = {}
    for j in range(k):
        key = (i, aPower + 2 * j)
        exps[key] = exps.get(key, 0) + 1
    return YMonomial(exps, modulus)


def d_grade(m: YMonomial) -> int:
    """Integer grading on the subgroup generated by Y_{i,xi(i)} and Y_{i,xi(i)+2}.

    Generator values: Y_{i,xi(i)} grades +1 on even sites, -1 on odd;
    Y_{i,xi(i)+2} the opposite. This is the unique sign choice (up to global
    negation fixed here) making partner pairs grade 0 while every
    A_{i,xi(i)+1}^{-1} factor drops the grade by exactly 2 — the two
    identities the grading exists to provide. Extended multiplicatively;
    values outside the subgroup are a domain error.
    """
    if m.modulus is None or m.modulus % 2 != 0:
        raise DomainError("d-grading requires toroidal sites with even modulus")
    total = 0
    for (i, power), e in m.exps:
        if power == xi(i):
            g = 1 if i % 2 == 0 else -1
        elif power == xi(i) + 2:
            g = -1 if i % 2 == 0 else 1
        else:
            raise DomainError(f"Y[{i},{power}] lies outside the graded subgroup")
        total += g * e
    return total


def is_mu_dominated(element) -> tuple:
    """Decide mu-dominance of a finite formal sum of (YMonomial, coefficient).

    Requires (1) a dominant monomial m with coefficient 1, (2) every
    monomial of the sum <= m in the Nakajima order, and (3) that
    m * (Y_{i,xi(i)} Y_{i,xi(i)+2})^{-1} is not dominant for any site i.
    Returns (True, m) or (False, reason).
    """
    terms = dict(element)
    if not terms:
        return False, "empty sum"
    moduli = {m.modulus for m in terms}
    if len(moduli) != 1:
        return False, "mixed index families"
    modulus = moduli.pop()
    candidates = sorted(
        (m for m, c in terms.items() if c == 1 and m.is_dominant()),
        key=lambda m: m.exps,
    )
    if not candidates:
        return False, "no dominant monomial with coefficient 1"
    reason = "no candidate passes"
    for cand in candidates:
        if not all(nakajima_leq(m, cand)[0] for m in terms):
            reason = "a monomial is not below the candidate in the Nakajima order"
            continue
        sites = (
            range(modulus)
            if modulus is not None
            else sorted({s for m in terms for (s, _), _ in m.exps})
        )
        shed = None
        for i in sites:
            pair_inv = YMonomial(
                {(i, xi(i)): -1, (i, xi(i) + 2): -1}, modulus
            )
            if (cand * pair_inv).is_dominant():
                shed = i
                break
        if shed is not None:
            reason = f"candidate stays dominant after shedding the pair at site {shed}"
            continue
        return True, cand
    return False, reason


# -- JSON / text ---------------------------------------------------------------


def ymono_to_json(m: YMonomial) -> dict:
    return {
        "modulus": m.modulus,
        "exps": [{"site": s, "qpower": p, "e": e} for (s, p), e in m.exps],
    }


def ymono_from_json(data: dict) -> YMonomial:
    try:
        exps = {
            (int(x["site"]), int(x["qpower"])): int(x["e"]) for x in data["exps"]
        }
        return YMonomial(exps, data.get("modulus"))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed monomial JSON: {exc}") from exc
