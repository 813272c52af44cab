"""Sparse exact Laurent polynomials over arbitrary-precision integers.

Variables are indexed by a ``VarKey`` triple (site, shift, layer): ``site``
is the quiver vertex label, ``shift`` the copy index of a periodic quiver
(always 0 in finite-quiver contexts), and ``layer`` distinguishes mutable
from frozen variables. Everything is immutable; arithmetic returns fresh
canonical values.
"""

from __future__ import annotations

from functools import cmp_to_key
from typing import Callable, Iterable, NamedTuple

from .errors import InexactDivisionError, InputError

MUT = "mut"
FROZEN = "frozen"


class VarKey(NamedTuple):
    site: object
    shift: int
    layer: str


def _site_sort_key(site):
    # sites can be ints, strings, or tuples; keep each family ordered and
    # the families apart so sorting never compares across types
    if isinstance(site, bool):
        return (3, str(site))
    if isinstance(site, int):
        return (0, site)
    if isinstance(site, tuple):
        return (1, tuple(_site_sort_key(s) for s in site))
    return (2, str(site))


def vk_sort_key(key: VarKey):
    return (_site_sort_key(key.site), key.shift, key.layer)


# A monomial is a tuple of (VarKey, exponent) pairs, sorted by vk_sort_key,
# with all exponents nonzero. The empty tuple is the constant monomial.
Monomial = tuple


def make_monomial(exps: Iterable[tuple[VarKey, int]]) -> Monomial:
    merged: dict[VarKey, int] = {}
    for key, e in exps:
        if e:
            merged[key] = merged.get(key, 0) + e
            if merged[key] == 0:
                del merged[key]
    return tuple(sorted(merged.items(), key=lambda kv: vk_sort_key(kv[0])))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    return make_monomial(list(a) + list(b))


def mono_inv(a: Monomial) -> Monomial:
    return tuple((k, -e) for k, e in a)


class LaurentPoly:
    """Canonical sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict[Monomial, int] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}
        self._hash = None

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly({})

    @staticmethod
    def const(c: int) -> "LaurentPoly":
        return LaurentPoly({(): int(c)})

    @staticmethod
    def var(key: VarKey, exp: int = 1) -> "LaurentPoly":
        return LaurentPoly({make_monomial([(key, exp)]): 1})

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly.const(1)

    # -- basic protocol ----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self.as_str()})"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            nc = out.get(m, 0) + c
            if nc:
                out[m] = nc
            elif m in out:
                del out[m]
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                nc = out.get(m, 0) + c1 * c2
                if nc:
                    out[m] = nc
                elif m in out:
                    del out[m]
        return LaurentPoly(out)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise InputError("negative power of a general Laurent polynomial")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- structure ----------------------------------------------------------

    def variables(self) -> set[VarKey]:
        return {k for m in self.terms for k, _ in m}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_one(self) -> bool:
        return self.terms == {(): 1}

    def map_vars(self, fn: Callable[[VarKey], VarKey]) -> "LaurentPoly":
        """Apply a variable substitution key -> key (a ring homomorphism)."""
        out: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            nm = make_monomial([(fn(k), e) for k, e in m])
            nc = out.get(nm, 0) + c
            if nc:
                out[nm] = nc
            elif nm in out:
                del out[nm]
        return LaurentPoly(out)

    def as_str(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda kv: _mono_order_key(kv[0])):
            factors = []
            for key, e in m:
                name = "x" if key.layer == MUT else "f"
                label = f"{key.site}" if key.shift == 0 else f"{key.site};{key.shift}"
                factors.append(f"{name}[{label}]" + (f"^{e}" if e != 1 else ""))
            body = "*".join(factors) if factors else "1"
            if c == 1 and factors:
                parts.append(body)
            elif c == -1 and factors:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}" if factors else str(c))
        joined = " + ".join(parts)
        return joined.replace("+ -", "- ")


def _mono_cmp(m1: Monomial, m2: Monomial) -> int:
    # graded lexicographic order: total degree first, then exponents on the
    # merged sorted key list (missing = 0). Multiplicative, so exact long
    # division always finds the quotient term by term.
    d1 = sum(e for _, e in m1)
    d2 = sum(e for _, e in m2)
    if d1 != d2:
        return -1 if d1 < d2 else 1
    e1, e2 = dict(m1), dict(m2)
    for k in sorted(set(e1) | set(e2), key=vk_sort_key):
        a, b = e1.get(k, 0), e2.get(k, 0)
        if a != b:
            return 1 if a > b else -1
    return 0


_mono_order_key = cmp_to_key(_mono_cmp)


def leading_monomial(p: LaurentPoly) -> Monomial:
    if not p.terms:
        raise InputError("zero polynomial has no leading monomial")
    return max(p.terms, key=_mono_order_key)


def shift_substitute(p: LaurentPoly, k: int) -> LaurentPoly:
    """Shift every variable (site, s, layer) to (site, s+k, layer)."""
    if k == 0:
        return p
    return p.map_vars(lambda key: VarKey(key.site, key.shift + k, key.layer))


def fold_substitute(p: LaurentPoly) -> LaurentPoly:
    """Collapse every variable onto its shift-0 representative."""
    return p.map_vars(lambda key: VarKey(key.site, 0, key.layer))


def _content_monomial(p: LaurentPoly) -> Monomial:
    """Greatest monomial dividing every term of p (exponent-wise minimum)."""
    mins: dict[VarKey, int] = {}
    keys = {k for m in p.terms for k, _ in m}
    for k in keys:
        mins[k] = min(dict(m).get(k, 0) for m in p.terms)
    return make_monomial(mins.items())


def _mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when monomial a divides b with nonnegative exponents."""
    be = dict(b)
    return all(e <= be.get(k, 0) for k, e in a)


# process-wide count of failed exact divisions; each one is a would-be
# falsifier of the Laurent property, so verification runs assert it stays 0
inexact_division_count = 0


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return q with q*b == a, or raise InexactDivisionError."""
    if not b.terms:
        raise InputError("division by zero")
    if not a.terms:
        return LaurentPoly.zero()
    # pull out the monomial content of each operand; what remains is an
    # honest polynomial not divisible by any variable, so an exact quotient
    # of the remainders is itself an honest polynomial and plain long
    # division finds it (monomial factors are invertible in the Laurent ring)
    ca = _content_monomial(a)
    cb = _content_monomial(b)
    num = a * LaurentPoly({mono_inv(ca): 1})
    den = b * LaurentPoly({mono_inv(cb): 1})
    lt_den = leading_monomial(den)
    lc_den = den.terms[lt_den]

    quotient: dict[Monomial, int] = {}
    rem = num
    while rem.terms:
        lt = leading_monomial(rem)
        lc = rem.terms[lt]
        if not _mono_divides(lt_den, lt) or lc % lc_den != 0:
            global inexact_division_count
            inexact_division_count += 1
            raise InexactDivisionError(
                "non-exact division", remainder=rem * LaurentPoly({ca: 1})
            )
        qm = make_monomial(
            [(k, e - dict(lt_den).get(k, 0)) for k, e in lt]
            + [(k, -e) for k, e in lt_den if k not in dict(lt)]
        )
        qc = lc // lc_den
        quotient[qm] = quotient.get(qm, 0) + qc
        rem = rem - LaurentPoly({qm: qc}) * den
    # restore the extracted contents: q_true = q * ca / cb
    adjust = mono_mul(ca, mono_inv(cb))
    return LaurentPoly(quotient) * LaurentPoly({adjust: 1})


def denominator_vector(p: LaurentPoly, mutables: Iterable[VarKey]) -> dict[VarKey, int]:
    """Denominator vector of a cluster variable in its initial cluster.

    Entry at a mutable initial variable v is -(minimum exponent of v over
    all terms); the initial variable itself gets -1 at its own slot.
    Frozen variables are excluded by construction of ``mutables``.
    """
    if not p.terms:
        raise InputError("zero polynomial has no denominator vector")
    out = {}
    for key in mutables:
        m = min(dict(mono).get(key, 0) for mono in p.terms)
        out[key] = -m
    return out


# -- JSON wire format --------------------------------------------------------


def poly_to_json(p: LaurentPoly) -> dict:
    terms = []
    for m, c in sorted(p.terms.items(), key=lambda kv: _mono_order_key(kv[0])):
        exps = [
            {"site": k.site, "shift": k.shift, "layer": k.layer, "e": e} for k, e in m
        ]
        terms.append({"coeff": str(c), "exps": exps})
    return {"terms": terms}


def poly_from_json(data: dict) -> LaurentPoly:
    try:
        terms: dict[Monomial, int] = {}
        for t in data["terms"]:
            m = make_monomial(
                [
                    (VarKey(_site_from_json(x["site"]), int(x["shift"]), x["layer"]), int(x["e"]))
                    for x in t["exps"]
                ]
            )
            terms[m] = terms.get(m, 0) + int(t["coeff"])
        return LaurentPoly(terms)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed polynomial JSON: {exc}") from exc


def _site_from_json(site):
    if isinstance(site, list):
        return tuple(site)
    return site
