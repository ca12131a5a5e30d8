"""q-Hopf monoids in species as explicit sparse structure maps.

A :class:`HopfStructure` supplies basis-level formulas for the product
``mu_{S,T}`` and coproduct ``Delta_{S,T}``; materialized maps are
:class:`~hopfkit.sparse.SparseMap` objects keyed by tuples of basis labels
and cached per decomposition.  The checkers below compare composite maps
entrywise over exact rationals and report every failing identity with a
witness basis element.

The deformation parameter is an exact rational.  The identities checked
are polynomial in ``q`` of degree at most ``floor(n^2/4)`` on a degree-``n``
component, so agreement at ``floor(n^2/4) + 1`` distinct sample values is
equivalent to agreement as polynomials; :func:`verify_over_samples`
enforces that count.
"""
from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .compositions import (
    EMPTY,
    Decomposition,
    SetComposition,
    area,
    canonical,
    concat_set,
    decompositions,
    is_admissible,
    leq,
    meet_set,
    restrict,
)
from .errors import StructureError
from .sparse import SparseMap, add_to, tensor_basis
from .species import (
    Order,
    Pair,
    SpeciesSpec,
    TensorWord,
    Unit,
    builtin,
    free_species,
    hadamard_species,
    star,
)

SAMPLE_QS = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2))


def as_scalar(q) -> Fraction:
    if isinstance(q, float):
        raise TypeError("use an exact rational for q, e.g. Fraction(1, 2) or '1/2'")
    return Fraction(q)


def q_degree_bound(n: int) -> int:
    """Largest power of q that can occur in a degree-n identity."""
    return n * n // 4


# -- structures ---------------------------------------------------------------

class HopfStructure:
    """Product and coproduct on a connected carrier species.

    Subclasses implement ``_mu(S, T, x, y)`` returning ``{label: coef}``
    and ``_delta(S, T, z)`` returning ``{(x, y): coef}``, for all
    decompositions including those with an empty part.
    """

    def __init__(self, name: str, carrier: SpeciesSpec, q):
        self.name = name
        self.carrier = carrier
        self.q = as_scalar(q)
        self._maps: dict = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return f"{type(self).__name__}({self.name}, q={self.q})"

    def unit_element(self):
        basis = self.carrier.basis(())
        if len(basis) != 1:
            raise StructureError(f"{self.name} is not connected")
        return basis[0]

    def counit(self, z) -> Fraction:
        return Fraction(1) if z == self.unit_element() else Fraction(0)

    def mu(self, S, T, x, y) -> dict:
        return self._mu(frozenset(S), frozenset(T), x, y)

    def delta(self, S, T, z) -> dict:
        return self._delta(frozenset(S), frozenset(T), z)

    def _mu(self, S, T, x, y):
        raise NotImplementedError

    def _delta(self, S, T, z):
        raise NotImplementedError

    def _cached(self, key, build):
        try:
            return self._maps[key]
        except KeyError:
            pass
        value = build()
        with self._lock:
            return self._maps.setdefault(key, value)

    def product(self, D: Decomposition) -> SparseMap:
        """``mu_{S,T}`` from ``H[S] (x) H[T]`` to ``H[I]``."""
        def build():
            dom = tensor_basis(self.carrier.basis(D.S), self.carrier.basis(D.T))
            cod = tensor_basis(self.carrier.basis(D.ground))
            return SparseMap.from_function(
                dom, cod, lambda k: {(z,): c for z, c in self._mu(D.S, D.T, k[0], k[1]).items()}, 2, 1)
        return self._cached(("mu", D), build)

    def coproduct(self, D: Decomposition) -> SparseMap:
        """``Delta_{S,T}`` from ``H[I]`` to ``H[S] (x) H[T]``."""
        def build():
            dom = tensor_basis(self.carrier.basis(D.ground))
            cod = tensor_basis(self.carrier.basis(D.S), self.carrier.basis(D.T))
            return SparseMap.from_function(dom, cod, lambda k: self._delta(D.S, D.T, k[0]), 1, 2)
        return self._cached(("delta", D), build)

    def identity(self, labels) -> SparseMap:
        return SparseMap.identity(tensor_basis(self.carrier.basis(labels)), 1)


def _power(q: Fraction, e: int) -> Fraction:
    return q ** e  # 0 ** 0 == 1, matching the polynomial specialization


class LinearOrders(HopfStructure):
    """``L_q``: concatenation of linear orders, restriction weighted by the Schubert cocycle."""

    def __init__(self, q):
        super().__init__("L", builtin("L"), q)

    def _mu(self, S, T, x, y):
        return {Order(x.word + y.word): Fraction(1)}

    def _delta(self, S, T, z):
        e = area(Decomposition(S, T), SetComposition.linear(z.word))
        left = Order(tuple(a for a in z.word if a in S))
        right = Order(tuple(a for a in z.word if a in T))
        c = _power(self.q, e)
        return {(left, right): c} if c else {}


def linear_orders_hopf(q=1) -> LinearOrders:
    return LinearOrders(q)


def split_word(word: TensorWord, S) -> tuple:
    """Split a tensor word along an admissible ``S`` into its ``S`` and complement parts."""
    F = word.composition
    T = F.ground - frozenset(S)
    left = restrict(F, S)
    right = restrict(F, T)
    lf = tuple(f for b, f in zip(F.blocks, word.factors) if b[0] in S)
    rf = tuple(f for b, f in zip(F.blocks, word.factors) if b[0] not in S)
    return TensorWord(left, lf), TensorWord(right, rf)


def concat_words(u: TensorWord, v: TensorWord) -> TensorWord:
    return TensorWord(concat_set(u.composition, v.composition), u.factors + v.factors)


class FreeHopf(HopfStructure):
    """``T_q(base)``: concatenation of tensor words; deconcatenation-type coproduct weighted by area."""

    def __init__(self, q, base: SpeciesSpec):
        super().__init__(f"free({base.name})", free_species(base), q)
        self.base = base

    def _mu(self, S, T, x, y):
        return {concat_words(x, y): Fraction(1)}

    def coproduct_exponent(self, S, T, z):
        """``(area, (left, right))`` when ``S`` is admissible for the word's composition, else None."""
        F = z.composition
        if not is_admissible(S, F):
            return None
        return area(Decomposition(S, T), F), split_word(z, S)

    def _delta(self, S, T, z):
        term = self.coproduct_exponent(S, T, z)
        if term is None:
            return {}
        e, key = term
        c = _power(self.q, e)
        return {key: c} if c else {}


def free_hopf(q, base: SpeciesSpec) -> FreeHopf:
    return FreeHopf(q, base)


def zero_coproduct(base_word: TensorWord, S, T) -> dict:
    """Coproduct of ``T_0`` straight from the order criterion: keep iff ``F = F|_S . F|_T``.

    For nonempty ``S`` and ``T`` this is ``(S, T) <= F``; independent of the
    area computation used by :class:`FreeHopf`.
    """
    S, T = frozenset(S), frozenset(T)
    F = base_word.composition
    if S and T:
        keep = leq(SetComposition.of(S, T), F)
    else:
        keep = True
    if not keep:
        return {}
    k = sum(1 for b in F.blocks if b[0] in S) if S else 0
    left = TensorWord(SetComposition(F.blocks[:k]), base_word.factors[:k])
    right = TensorWord(SetComposition(F.blocks[k:]), base_word.factors[k:])
    return {(left, right): Fraction(1)}


class HadamardHopf(HopfStructure):
    """Componentwise structure on ``h x k``; parameter is the product of the factors' parameters."""

    def __init__(self, h: HopfStructure, k: HopfStructure):
        super().__init__(f"hadamard({h.name},{k.name})", hadamard_species(h.carrier, k.carrier), h.q * k.q)
        self.h, self.k = h, k

    def _mu(self, S, T, x, y):
        out: dict = {}
        for z1, c1 in self.h._mu(S, T, x.left, y.left).items():
            for z2, c2 in self.k._mu(S, T, x.right, y.right).items():
                add_to(out, Pair(z1, z2), c1 * c2)
        return out

    def _delta(self, S, T, z):
        out: dict = {}
        for (a, b), c1 in self.h._delta(S, T, z.left).items():
            for (c, d), c2 in self.k._delta(S, T, z.right).items():
                add_to(out, (Pair(a, c), Pair(b, d)), c1 * c2)
        return out


def hadamard_hopf(h: HopfStructure, k: HopfStructure) -> HadamardHopf:
    return HadamardHopf(h, k)


class Exponential(HopfStructure):
    """``E`` with every structure map the identity of the one-dimensional spaces."""

    def __init__(self):
        super().__init__("E", builtin("E"), 1)

    def _mu(self, S, T, x, y):
        return {Unit(): Fraction(1)}

    def _delta(self, S, T, z):
        return {(Unit(), Unit()): Fraction(1)}


def exponential_hopf() -> Exponential:
    return Exponential()


def _even(ground):
    return [Unit()] if len(ground) % 2 == 0 else []


EVEN = SpeciesSpec("even", _even)


class MockEven(HopfStructure):
    """Dimensions 1, 0, 1, 0, ... with the forced isomorphisms on even splits.

    Satisfies ``Delta mu = id`` and the monoid/comonoid axioms but not the
    compatibility hexagon: it is the negative fixture for the checker.
    """

    def __init__(self, q=1):
        super().__init__("mock-even", EVEN, q)

    def _mu(self, S, T, x, y):
        return {Unit(): Fraction(1)}

    def _delta(self, S, T, z):
        if len(S) % 2 or len(T) % 2:
            return {}
        return {(Unit(), Unit()): Fraction(1)}


class Corrupted(HopfStructure):
    """Fault injection: ``h`` with one product value replaced."""

    def __init__(self, h: HopfStructure, S, T, x, y, image):
        super().__init__(f"{h.name}-corrupt", h.carrier, h.q)
        self.h = h
        self.target = (frozenset(S), frozenset(T), x, y)
        self.image = image

    def _mu(self, S, T, x, y):
        if (S, T, x, y) == self.target:
            return {self.image: Fraction(1)}
        return self.h._mu(S, T, x, y)

    def _delta(self, S, T, z):
        return self.h._delta(S, T, z)


def corrupted_linear_orders(q=1) -> Corrupted:
    """``L_q`` with ``mu_{{1},{2}}(1 (x) 2)`` sent to ``(2,1)`` instead of ``(1,2)``."""
    return Corrupted(LinearOrders(q), {1}, {2}, Order((1,)), Order((2,)), Order((2, 1)))


# -- braiding -----------------------------------------------------------------

def braiding(q, left_basis, right_basis, s_size: int, t_size: int) -> SparseMap:
    """``x (x) y -> q^{|S||T|} y (x) x`` on ``p[S] (x) q[T]``."""
    c = _power(as_scalar(q), s_size * t_size)
    dom = tensor_basis(left_basis, right_basis)
    cod = tensor_basis(right_basis, left_basis)
    return SparseMap.from_function(dom, cod, lambda k: {(k[1], k[0]): c} if c else {}, 2, 2)


# -- reports ---------------------------------------------------------------

def _render_key(key) -> str:
    return " (x) ".join(b.render() if hasattr(b, "render") else str(b) for b in key)


@dataclass(order=True)
class Failure:
    axiom: str
    I: tuple
    S: tuple = ()
    T: tuple = ()
    extra: tuple = ()
    witness: str = ""

    def to_json(self) -> dict:
        out = {"axiom": self.axiom, "I": list(self.I), "S": list(self.S), "T": list(self.T)}
        for k, v in self.extra:
            out[k] = list(v) if isinstance(v, tuple) else v
        out["witness"] = self.witness
        return out


@dataclass
class CheckReport:
    structure: str
    q: Fraction
    n_max: int
    failures: list = field(default_factory=list)
    checked: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, failure: Failure) -> None:
        self.failures.append(failure)

    def count(self, axiom: str, n: int = 1) -> None:
        self.checked[axiom] = self.checked.get(axiom, 0) + n

    def merge(self, other: "CheckReport") -> "CheckReport":
        out = CheckReport(self.structure, self.q, max(self.n_max, other.n_max),
                          sorted(self.failures + other.failures), dict(self.checked))
        for k, v in other.checked.items():
            out.checked[k] = out.checked.get(k, 0) + v
        return out

    def axioms_failed(self) -> set:
        return {f.axiom for f in self.failures}

    def to_json(self) -> dict:
        return {
            "structure": self.structure,
            "q": str(self.q),
            "n_max": self.n_max,
            "failures": [f.to_json() for f in sorted(self.failures)],
        }


def _s(labels) -> tuple:
    return tuple(sorted(labels))


def _compare(report, axiom, lhs: SparseMap, rhs: SparseMap, I, S=(), T=(), extra=()) -> None:
    report.count(axiom)
    witness = lhs.first_difference(rhs)
    if witness is not None:
        report.add(Failure(axiom, _s(I), _s(S), _s(T), tuple(extra), _render_key(witness)))


def _triple_decompositions(ground):
    elems = sorted(ground)
    for assignment in itertools.product(range(3), repeat=len(elems)):
        parts = [frozenset(x for x, a in zip(elems, assignment) if a == i) for i in range(3)]
        yield parts


# -- checkers -----------------------------------------------------------------

def check_monoid(h: HopfStructure, n_max: int) -> CheckReport:
    """Associativity over all triple decompositions of ``[n]`` and both unit laws."""
    report = CheckReport(h.name, h.q, n_max)
    u = h.unit_element()
    empty = frozenset()
    for n in range(n_max + 1):
        I = canonical(n)
        for S, T, U in _triple_decompositions(I):
            left = h.product(Decomposition(S | T, U)) @ h.product(Decomposition(S, T)).tensor(h.identity(U))
            right = h.product(Decomposition(S, T | U)) @ h.identity(S).tensor(h.product(Decomposition(T, U)))
            _compare(report, "assoc", left, right, I, S, T, (("U", _s(U)),))
        ident = h.identity(I)
        unit_left = SparseMap.from_function(ident.domain, tensor_basis([u], h.carrier.basis(I)),
                                            lambda k: {(u, k[0]): 1}, 1, 2)
        unit_right = SparseMap.from_function(ident.domain, tensor_basis(h.carrier.basis(I), [u]),
                                             lambda k: {(k[0], u): 1}, 1, 2)
        _compare(report, "unit", h.product(Decomposition(empty, I)) @ unit_left, ident, I, (), I)
        _compare(report, "unit", h.product(Decomposition(I, empty)) @ unit_right, ident, I, I, ())
    return report


def check_comonoid(h: HopfStructure, n_max: int) -> CheckReport:
    """Coassociativity over all triple decompositions and both counit laws."""
    report = CheckReport(h.name, h.q, n_max)
    u = h.unit_element()
    empty = frozenset()
    for n in range(n_max + 1):
        I = canonical(n)
        for S, T, U in _triple_decompositions(I):
            left = h.coproduct(Decomposition(S, T)).tensor(h.identity(U)) @ h.coproduct(Decomposition(S | T, U))
            right = h.identity(S).tensor(h.coproduct(Decomposition(T, U))) @ h.coproduct(Decomposition(S, T | U))
            _compare(report, "coassoc", left, right, I, S, T, (("U", _s(U)),))
        ident = h.identity(I)
        basis_i = tensor_basis(h.carrier.basis(I))
        counit_left = SparseMap.from_function(tensor_basis([u], h.carrier.basis(I)), basis_i,
                                              lambda k: {(k[1],): h.counit(k[0])}, 2, 1)
        counit_right = SparseMap.from_function(tensor_basis(h.carrier.basis(I), [u]), basis_i,
                                               lambda k: {(k[0],): h.counit(k[1])}, 2, 1)
        _compare(report, "counit", counit_left @ h.coproduct(Decomposition(empty, I)), ident, I, (), I)
        _compare(report, "counit", counit_right @ h.coproduct(Decomposition(I, empty)), ident, I, I, ())
    return report


def check_compat(h: HopfStructure, n_max: int) -> CheckReport:
    """The bimonoid hexagon for every pair of decompositions, plus ``Delta_{S,T} mu_{S,T} = id``."""
    report = CheckReport(h.name, h.q, n_max)
    for n in range(n_max + 1):
        I = canonical(n)
        decs = decompositions(I)
        for D in decs:
            mu = h.product(D)
            ident = SparseMap.identity(mu.domain, 2)
            _compare(report, "delta_mu_id", h.coproduct(D) @ mu, ident, I, D.S, D.T)
            for D2 in decs:
                A, B = D.S & D2.S, D.S & D2.T
                C, E = D.T & D2.S, D.T & D2.T
                lhs = h.coproduct(D2) @ mu
                down = h.coproduct(Decomposition(A, B)).tensor(h.coproduct(Decomposition(C, E)))
                swap = h.identity(A).tensor(
                    braiding(h.q, h.carrier.basis(B), h.carrier.basis(C), len(B), len(C))).tensor(h.identity(E))
                up = h.product(Decomposition(A, C)).tensor(h.product(Decomposition(B, E)))
                rhs = up @ swap @ down
                _compare(report, "compat", lhs, rhs, I, D.S, D.T, (("S_prime", _s(D2.S)), ("T_prime", _s(D2.T))))
    return report


def check_naturality(h: HopfStructure, n_max: int) -> CheckReport:
    """Spot check: structure maps commute with adjacent transpositions of ``[n]``."""
    report = CheckReport(h.name, h.q, n_max)
    for n in range(2, n_max + 1):
        I = canonical(n)
        for i in range(1, n):
            sigma = {k: k for k in I}
            sigma[i], sigma[i + 1] = i + 1, i
            for D in decompositions(I):
                D2 = Decomposition(frozenset(sigma[x] for x in D.S), frozenset(sigma[x] for x in D.T))
                mu, mu2 = h.product(D), h.product(D2)
                bad = None
                for k in mu.domain:
                    moved = {(z[0].relabel(sigma),): c for z, c in mu.columns[k].items()}
                    if moved != mu2.columns[tuple(b.relabel(sigma) for b in k)]:
                        bad = k
                        break
                if bad is None:
                    de, de2 = h.coproduct(D), h.coproduct(D2)
                    for k in de.domain:
                        moved = {tuple(b.relabel(sigma) for b in z): c for z, c in de.columns[k].items()}
                        if moved != de2.columns[(k[0].relabel(sigma),)]:
                            bad = k
                            break
                report.count("natural")
                if bad is not None:
                    report.add(Failure("natural", _s(I), _s(D.S), _s(D.T), (("swap", (i, i + 1)),), _render_key(bad)))
    return report


def check_all(h: HopfStructure, n_max: int) -> CheckReport:
    report = check_monoid(h, n_max)
    for extra in (check_comonoid, check_compat, check_naturality):
        report = report.merge(extra(h, n_max))
    return report


def verify_over_samples(build: Callable[[Fraction], HopfStructure], n_max: int, qs: Iterable = SAMPLE_QS) -> dict:
    """Run :func:`check_all` on ``build(q)`` for each sample ``q``.

    Raises when there are too few distinct samples for agreement at the
    samples to imply agreement as polynomials in ``q`` up to degree ``n_max``.
    """
    qs = sorted({as_scalar(q) for q in qs})
    need = q_degree_bound(n_max) + 1
    if len(qs) < need:
        raise StructureError(f"degree {n_max} needs at least {need} distinct q samples, got {len(qs)}")
    return {q: check_all(build(q), n_max) for q in qs}


# -- star isomorphism -----------------------------------------------------------

def star_to_pair(word: TensorWord) -> Pair:
    """Basis map ``T(p*q) -> T(p) x T(q)``: concatenate the components of each factor."""
    left = TensorWord(EMPTY, ())
    right = TensorWord(EMPTY, ())
    for factor in word.factors:
        left = concat_words(left, factor.left)
        right = concat_words(right, factor.right)
    return Pair(left, right)


def pair_to_star(pair: Pair) -> TensorWord:
    """Inverse basis map: cut both components along the meet of their compositions."""
    F, G = pair.left.composition, pair.right.composition
    H = meet_set(F, G)
    factors = []
    u, v = pair.left, pair.right
    for block in H.blocks:
        head_u, u = split_word(u, block)
        head_v, v = split_word(v, block)
        factors.append(Pair(head_u, head_v))
    return TensorWord(H, tuple(factors))


@dataclass
class StarIso:
    forward: SparseMap
    backward: SparseMap

    def is_bijection(self) -> bool:
        fwd = self.backward @ self.forward
        bwd = self.forward @ self.backward
        return (fwd == SparseMap.identity(self.forward.domain, 1)
                and bwd == SparseMap.identity(self.backward.domain, 1))


def star_iso(p: SpeciesSpec, q: SpeciesSpec, n: int) -> StarIso:
    """Mutually inverse maps between ``T(p*q)[n]`` and ``(T(p) x T(q))[n]``."""
    source = free_species(star(p, q))
    target = hadamard_species(free_species(p), free_species(q))
    dom = tensor_basis(source.basis_n(n))
    cod = tensor_basis(target.basis_n(n))
    forward = SparseMap.from_function(dom, cod, lambda k: {(star_to_pair(k[0]),): 1}, 1, 1)
    backward = SparseMap.from_function(cod, dom, lambda k: {(pair_to_star(k[0]),): 1}, 1, 1)
    return StarIso(forward, backward)


def _apply_basis_map(fn, vec: dict) -> dict:
    out: dict = {}
    for key, c in vec.items():
        add_to(out, tuple(fn(b) for b in key), c)
    return out


def check_star_iso_products(p: SpeciesSpec, q: SpeciesSpec, n_max: int) -> CheckReport:
    """``iso(mu(u (x) v)) = mu(iso u (x) iso v)`` on all basis pairs and decompositions."""
    left = FreeHopf(1, star(p, q))
    right = HadamardHopf(FreeHopf(1, p), FreeHopf(1, q))
    report = CheckReport(f"star_iso({p.name},{q.name})", Fraction(1), n_max)
    for n in range(n_max + 1):
        I = canonical(n)
        for D in decompositions(I):
            for u in left.carrier.basis(D.S):
                for v in left.carrier.basis(D.T):
                    report.count("iso_product")
                    lhs = _apply_basis_map(star_to_pair, {(z,): c for z, c in left.mu(D.S, D.T, u, v).items()})
                    rhs = {(z,): c for z, c in right.mu(D.S, D.T, star_to_pair(u), star_to_pair(v)).items()}
                    if lhs != rhs:
                        report.add(Failure("iso_product", _s(I), _s(D.S), _s(D.T), (), _render_key((u, v))))
    return report


def check_star_iso_coproducts(p: SpeciesSpec, q: SpeciesSpec, qparam, n_max: int) -> CheckReport:
    """``(iso (x) iso) Delta(b) = Delta(iso b)`` for ``T_q(p*q)`` against ``T_q(p) x T_q(q)``.

    Holds at ``q = 0``.  The right-hand structure has parameter ``q^2``;
    the comparison is between the free structures at the same ``q``.
    """
    qparam = as_scalar(qparam)
    left = FreeHopf(qparam, star(p, q))
    right = HadamardHopf(FreeHopf(qparam, p), FreeHopf(qparam, q))
    report = CheckReport(f"star_iso({p.name},{q.name})", qparam, n_max)
    for n in range(n_max + 1):
        I = canonical(n)
        for b in left.carrier.basis(I):
            image = star_to_pair(b)
            for D in decompositions(I):
                report.count("iso_coproduct")
                lhs = _apply_basis_map(star_to_pair, left.delta(D.S, D.T, b))
                rhs = right.delta(D.S, D.T, image)
                if lhs != rhs:
                    report.add(Failure("iso_coproduct", _s(I), _s(D.S), _s(D.T), (), _render_key((b,))))
    return report


def star_coproduct_witness(p: SpeciesSpec, q: SpeciesSpec, qparam=1, n: int = 2):
    """First ``(b, D, lhs, rhs)`` with ``b`` a single-block word of ``T(p*q)[n]`` where coproducts differ."""
    qparam = as_scalar(qparam)
    left = FreeHopf(qparam, star(p, q))
    right = HadamardHopf(FreeHopf(qparam, p), FreeHopf(qparam, q))
    I = canonical(n)
    for b in left.carrier.basis(I):
        if len(b.composition.blocks) != 1:
            continue
        for D in decompositions(I):
            lhs = _apply_basis_map(star_to_pair, left.delta(D.S, D.T, b))
            rhs = right.delta(D.S, D.T, star_to_pair(b))
            if lhs != rhs:
                return b, D, lhs, rhs
    return None


# -- universal property ------------------------------------------------------------

def universal_map_on(zeta: Callable, target: HopfStructure, word: TensorWord) -> dict:
    """Image of one word (on any label set) under ``zeta-hat``, as ``{label: coef}``.

    ``zeta(label)`` gives the image of a basis label of the base species on
    a block as ``{target label: coef}``; the factor images are multiplied
    left to right.
    """
    vec = {target.unit_element(): Fraction(1)}
    done = frozenset()
    for block, x in zip(word.composition.blocks, word.factors):
        block = frozenset(block)
        out: dict = {}
        zx = zeta(x)
        for a, c in vec.items():
            for b, d in zx.items():
                for z, e in target.mu(done, block, a, b).items():
                    add_to(out, z, c * d * e)
        vec = out
        done = done | block
    return vec


def universal_map(zeta: Callable, base: SpeciesSpec, target: HopfStructure, n: int) -> SparseMap:
    """The monoid map ``T(base)[n] -> target[n]`` extending ``zeta``."""
    if not isinstance(target, HopfStructure):
        raise StructureError(f"{target!r} carries no monoid structure")
    dom = tensor_basis(free_species(base).basis_n(n))
    cod = tensor_basis(target.carrier.basis_n(n))
    return SparseMap.from_function(
        dom, cod, lambda k: {(z,): c for z, c in universal_map_on(zeta, target, k[0]).items()}, 1, 1)


def check_universal(zeta: Callable, base: SpeciesSpec, target: HopfStructure, n_max: int) -> CheckReport:
    """``zeta-hat`` restricts to ``zeta`` on one-block words and preserves products."""
    if not isinstance(target, HopfStructure):
        raise StructureError(f"{target!r} carries no monoid structure")
    report = CheckReport(f"universal({base.name}->{target.name})", target.q, n_max)
    free = FreeHopf(1, base)
    for n in range(1, n_max + 1):
        I = canonical(n)
        for x in base.basis(I):
            report.count("extends")
            word = TensorWord(SetComposition((tuple(sorted(I)),)), (x,))
            want = {z: c for z, c in zeta(x).items() if c}
            if universal_map_on(zeta, target, word) != want:
                report.add(Failure("extends", _s(I), witness=_render_key((x,))))
    for n in range(n_max + 1):
        I = canonical(n)
        for D in decompositions(I):
            for u in free.carrier.basis(D.S):
                for v in free.carrier.basis(D.T):
                    report.count("morphism")
                    lhs: dict = {}
                    for w, c in free.mu(D.S, D.T, u, v).items():
                        for z, d in universal_map_on(zeta, target, w).items():
                            add_to(lhs, z, c * d)
                    rhs: dict = {}
                    for a, c in universal_map_on(zeta, target, u).items():
                        for b, d in universal_map_on(zeta, target, v).items():
                            for z, e in target.mu(D.S, D.T, a, b).items():
                                add_to(rhs, z, c * d * e)
                    if lhs != rhs:
                        report.add(Failure("morphism", _s(I), _s(D.S), _s(D.T), (), _render_key((u, v))))
    return report
