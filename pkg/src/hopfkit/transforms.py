"""Boolean transform of sequences and necessary conditions on dimension sequences.

Sequences are lists ``[a_1, ..., a_N]`` of exact rationals indexed from 1;
the degree-0 term is implicitly 1 whenever a sequence is read as the power
series ``1 + sum a_n x^n``.

The Boolean transform ``b`` of ``a`` is defined by
``sum b_n x^n = 1 - 1/(1 + sum a_n x^n)``, equivalently
``a_n = sum over compositions alpha of n of b_alpha`` where ``b_alpha`` is
the product of ``b`` over the parts of ``alpha``.

A connected Hopf monoid has a dimension sequence with nonnegative Boolean
transform.  :func:`feasibility` evaluates that and three older necessary
conditions independently; passing them all never certifies that a Hopf
monoid exists.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .compositions import (
    canonical,
    enumerate_int_compositions,
    enumerate_set_compositions,
    is_indecomposable,
)
from .config import HARD_CEILING, check_cap
from .errors import SequenceError, SpeciesError
from .series import GFSeries, to_fraction
from .species import SpeciesSpec, free_species, set_partitions


def as_seq(terms: Iterable) -> list:
    out = [to_fraction(t) for t in terms]
    if not out:
        raise SequenceError("a sequence needs at least one term")
    return out


def boolean_transform(a: Iterable) -> list:
    """``b_n = a_n - sum_{k<n} a_{n-k} b_k``."""
    a = as_seq(a)
    b: list = []
    for n in range(1, len(a) + 1):
        s = a[n - 1]
        for k in range(1, n):
            s -= a[n - k - 1] * b[k - 1]
        b.append(s)
    return b


def inverse_boolean(b: Iterable) -> list:
    """``a_n = b_n + sum_{k<n} a_{n-k} b_k``; inverse of :func:`boolean_transform`."""
    b = as_seq(b)
    a: list = []
    for n in range(1, len(b) + 1):
        s = b[n - 1]
        for k in range(1, n):
            s += a[n - k - 1] * b[k - 1]
        a.append(s)
    return a


def boolean_transform_series(a: Iterable) -> list:
    """Series route: coefficients of ``1 - 1/(1 + sum a_n x^n)``."""
    a = as_seq(a)
    recip = GFSeries.from_tail(a).reciprocal()
    return [-c for c in recip.tail()]


def _product_over_parts(seq: list, parts) -> Fraction:
    out = Fraction(1)
    for p in parts:
        out *= seq[p - 1]
    return out


def inverse_boolean_compositions(b: Iterable) -> list:
    """Composition route: ``a_n = sum_{alpha |= n} b_alpha`` by explicit enumeration."""
    b = as_seq(b)
    if len(b) > 2 * HARD_CEILING:
        raise SequenceError(f"composition enumeration is capped at length {2 * HARD_CEILING}")
    return [sum((_product_over_parts(b, alpha.parts) for alpha in enumerate_int_compositions(n)), Fraction(0))
            for n in range(1, len(b) + 1)]


def _mask_products(seq: list, n: int) -> list:
    """``seq_alpha`` for every composition of ``n``, indexed by partial-sum bitmask."""
    out = []
    for mask in range(1 << (n - 1)):
        prod = Fraction(1)
        last = 0
        for k in range(1, n):
            if mask >> (k - 1) & 1:
                prod *= seq[k - last - 1]
                last = k
        prod *= seq[n - last - 1]
        out.append(prod)
    return out


def hadamard_boolean(p: Iterable, q: Iterable, method: str = "enumerate") -> list:
    """Boolean transform of the termwise product of the sequences whose transforms are ``p`` and ``q``.

    ``method="enumerate"`` sums ``p_alpha q_beta`` over pairs of compositions
    of ``n`` whose meet is ``(n)``, i.e. whose partial-sum masks are
    disjoint.  ``method="transform"`` inverts, multiplies and transforms.
    """
    p, q = as_seq(p), as_seq(q)
    if len(p) != len(q):
        raise SequenceError(f"length mismatch: {len(p)} vs {len(q)}")
    if method == "transform":
        a, b = inverse_boolean(p), inverse_boolean(q)
        return boolean_transform([x * y for x, y in zip(a, b)])
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    if len(p) > HARD_CEILING:
        raise SequenceError(f"pair enumeration is capped at N = {HARD_CEILING}")
    r = []
    for n in range(1, len(p) + 1):
        P, Q = _mask_products(p, n), _mask_products(q, n)
        full = (1 << (n - 1)) - 1
        total = Fraction(0)
        for A, pa in enumerate(P):
            if not pa:
                continue
            # B ranges over submasks of the complement of A
            comp = full & ~A
            B = comp
            while True:
                total += pa * Q[B]
                if B == 0:
                    break
                B = (B - 1) & comp
        r.append(total)
    return r


# -- feasibility ------------------------------------------------------------

@dataclass
class Verdict:
    passed: bool
    witness: object = None

    def to_json(self) -> dict:
        return {"pass": self.passed, "witness": self.witness}


@dataclass
class FeasibilityReport:
    terms: list
    verdicts: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts.values())

    def failed(self) -> list:
        return [k for k, v in self.verdicts.items() if not v.passed]

    def to_json(self) -> dict:
        return {
            "sequence": [str(t) for t in self.terms],
            "conditions": {k: v.to_json() for k, v in self.verdicts.items()},
            "pass": self.passed,
            "note": ("violates a necessary condition" if not self.passed
                     else "passes all implemented necessary conditions (not sufficient)"),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)


def _dimension_seq(a: Iterable) -> list:
    a = as_seq(a)
    for n, x in enumerate(a, 1):
        if x.denominator != 1:
            raise SequenceError(f"a_{n} = {x} is not an integer")
        if x < 0:
            raise SequenceError(f"a_{n} = {x} is negative")
    return a


def check_boolean_nonneg(a: list) -> Verdict:
    b = boolean_transform(a)
    for n, x in enumerate(b, 1):
        if x < 0:
            return Verdict(False, {"n": n, "b_n": str(x), "transform": [str(t) for t in b[:n]]})
    return Verdict(True)


def check_submult(a: list) -> Verdict:
    N = len(a)
    for n in range(2, N + 1):
        for i in range(1, n // 2 + 1):
            j = n - i
            if a[i - 1] * a[j - 1] > a[n - 1]:
                return Verdict(False, {"i": i, "j": j, "a_i*a_j": str(a[i - 1] * a[j - 1]), "a_n": str(a[n - 1])})
    return Verdict(True)


def exp_ratio_series(a: list) -> list:
    """Coefficients ``n >= 1`` of ``(1 + sum a_n x^n) / (1 + sum a_n/n! x^n)``."""
    a = as_seq(a)
    num = GFSeries.from_tail(a)
    den = GFSeries.from_tail(x / math.factorial(n) for n, x in enumerate(a, 1))
    return (num / den).tail()


def check_exp_ratio(a: list) -> Verdict:
    for n, c in enumerate(exp_ratio_series(a), 1):
        if c < 0:
            return Verdict(False, {"n": n, "coefficient": str(c)})
    return Verdict(True)


def check_cubic(a: list) -> Verdict:
    """``a_3 >= 3 a_2 a_1 - 2 a_1^3``; vacuous below length 3."""
    if len(a) < 3:
        return Verdict(True, None)
    bound = 3 * a[1] * a[0] - 2 * a[0] ** 3
    if a[2] < bound:
        return Verdict(False, {"a_3": str(a[2]), "bound": str(bound)})
    return Verdict(True)


CONDITIONS = {
    "boolean_nonneg": check_boolean_nonneg,
    "submult": check_submult,
    "exp_ratio": check_exp_ratio,
    "cubic": check_cubic,
}


def feasibility(a: Iterable) -> FeasibilityReport:
    """Evaluate every condition on a prefix of a dimension sequence, without short-circuiting."""
    a = _dimension_seq(a)
    return FeasibilityReport(a, {name: fn(a) for name, fn in CONDITIONS.items()})


def min_next_term(a: Iterable) -> int:
    """Smallest ``a_{N+1}`` keeping ``b_{N+1} >= 0``."""
    a = _dimension_seq(a)
    b = boolean_transform(a)
    if any(x < 0 for x in b):
        raise SequenceError("prefix already has a negative Boolean transform term")
    N = len(a)
    bound = sum((a[N - k] * b[k - 1] for k in range(1, N + 1)), Fraction(0))
    return math.ceil(bound)


# -- species-level oracles ----------------------------------------------------

def indecomposable_transform(p: SpeciesSpec, N: int) -> list:
    """``b_n = sum over indecomposable F |= [n] of dim p(F)``, ``n = 1..N``."""
    if not p.positive:
        raise SpeciesError(f"{p.name} is not positive")
    check_cap(N, "degree")
    dims = p.dims(N)
    out = []
    for n in range(1, N + 1):
        total = 0
        for F in enumerate_set_compositions(canonical(n)):
            if is_indecomposable(F):
                total += math.prod(dims[len(b)] for b in F.blocks)
        out.append(total)
    return out


def free_dims_transform(p: SpeciesSpec, N: int) -> list:
    """Boolean transform of the dimensions of ``T(p)`` in degrees ``1..N``."""
    return boolean_transform(free_species(p).dims(N)[1:])


def atomic_partitions(n: int) -> int:
    """Set partitions of ``[n]`` where no proper prefix ``[i]`` is a union of blocks (brute force)."""
    check_cap(n, "n")
    if n == 0:
        return 0
    count = 0
    for part in set_partitions(tuple(range(1, n + 1))):
        top = [max(b) for b in part]
        low = [min(b) for b in part]
        # [i] is a union of blocks iff no block straddles i
        if all(any(lo <= i < hi for lo, hi in zip(low, top)) for i in range(1, n)):
            count += 1
    return count


def weighted_ratio_series(a: Iterable, w: Iterable) -> tuple:
    """Coefficients ``n >= 1`` of ``1 - A_w/A`` and ``A/A_w``, with ``A = 1 + sum a_n x^n`` and ``A_w`` weighted."""
    a, w = as_seq(a), as_seq(w)
    if len(a) != len(w):
        raise SequenceError("weights and sequence must have the same length")
    if w[0] > 1 or any(x < y for x, y in zip(w, w[1:])):
        raise SequenceError("weights must be weakly decreasing with w_1 <= 1")
    A = GFSeries.from_tail(a)
    Aw = GFSeries.from_tail(x * y for x, y in zip(w, a))
    first = GFSeries.one(len(a)) - Aw / A
    second = A / Aw
    return first.tail(), second.tail()


# -- text forms -------------------------------------------------------------

def parse_seq(text: str) -> list:
    """Comma-separated decimals/rationals, or a JSON array of strings or integers."""
    text = text.strip()
    if not text:
        raise SequenceError("empty sequence")
    try:
        if text.startswith("["):
            items = json.loads(text)
            if not isinstance(items, list) or any(isinstance(x, float) for x in items):
                raise SequenceError("JSON sequences must be arrays of strings or integers")
            return as_seq(Fraction(str(x)) for x in items)
        return as_seq(Fraction(tok.strip()) for tok in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise SequenceError(f"malformed sequence {text!r}: {exc}") from None


def render_seq(seq: Iterable, fmt: str = "plain") -> str:
    terms = [str(t) for t in seq]
    if fmt == "json":
        return json.dumps(terms)
    if fmt == "csv":
        return "\n".join(["n,value"] + [f"{n},{t}" for n, t in enumerate(terms, 1)])
    return ",".join(terms)
