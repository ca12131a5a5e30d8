"""Vector species presented by explicit labeled bases.

A species here is a rule producing, for every finite label set ``I``, a
sorted tuple of basis labels, together with the relabeling action of
bijections.  All the built-ins and combinators are permutation species, so
orbit counting on basis labels gives the dimension of coinvariants.

Labels are small frozen dataclasses.  Each knows how to transport itself
along a bijection (a dict) and how to render itself as text.
"""
from __future__ import annotations

import itertools
import math
import threading
from dataclasses import dataclass
from typing import Callable, Iterable

from .compositions import (
    SetComposition,
    enumerate_set_compositions,
    meet_set,
    one_block,
    render_set,
)
from .config import check_cap
from .errors import SpeciesError
from .series import GFSeries


# -- basis labels -------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Unit:
    """The single basis element of a one-dimensional, relabel-invariant space."""

    def relabel(self, sigma):
        return self

    def render(self) -> str:
        return "*"


@dataclass(frozen=True, order=True)
class Singleton:
    element: int

    def relabel(self, sigma):
        return Singleton(sigma[self.element])

    def render(self) -> str:
        return str(self.element)


@dataclass(frozen=True, order=True)
class Order:
    word: tuple

    def relabel(self, sigma):
        return Order(tuple(sigma[x] for x in self.word))

    def render(self) -> str:
        return "(" + ",".join(map(str, self.word)) + ")"


@dataclass(frozen=True, order=True)
class Partition:
    blocks: tuple

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> "Partition":
        return cls(tuple(sorted(tuple(sorted(b)) for b in blocks)))

    def relabel(self, sigma):
        return Partition.of([sigma[x] for x in b] for b in self.blocks)

    def render(self) -> str:
        return "/".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)


@dataclass(frozen=True, order=True)
class Element:
    choice: int

    def relabel(self, sigma):
        return Element(sigma[self.choice])

    def render(self) -> str:
        return f"<{self.choice}>"


@dataclass(frozen=True, order=True)
class TensorWord:
    """A basis element of ``q(F)``: factor ``i`` is a label of ``q`` on block ``i``."""

    composition: SetComposition
    factors: tuple

    def __post_init__(self):
        if len(self.factors) != len(self.composition.blocks):
            raise SpeciesError("a tensor word needs one factor per block")

    def relabel(self, sigma):
        return TensorWord(self.composition.relabel(sigma), tuple(f.relabel(sigma) for f in self.factors))

    def render(self) -> str:
        return render_set(self.composition) + "[" + ";".join(f.render() for f in self.factors) + "]"


@dataclass(frozen=True, order=True)
class Pair:
    """Hadamard label: both components live on the same label set."""

    left: object
    right: object

    def relabel(self, sigma):
        return Pair(self.left.relabel(sigma), self.right.relabel(sigma))

    def render(self) -> str:
        return "<" + self.left.render() + "," + self.right.render() + ">"


@dataclass(frozen=True, order=True)
class Split:
    """Cauchy label: ``left`` lives on ``S``, ``right`` on the complement."""

    S: tuple
    left: object
    right: object

    def relabel(self, sigma):
        return Split(tuple(sorted(sigma[x] for x in self.S)), self.left.relabel(sigma), self.right.relabel(sigma))

    def render(self) -> str:
        return "{" + ",".join(map(str, self.S)) + "}:" + self.left.render() + "*" + self.right.render()


# -- species -----------------------------------------------------------------

class SpeciesSpec:
    """A species given by ``basis_fn(ground) -> iterable of labels``.

    ``ground`` is passed as a sorted tuple.  Results are sorted and memoized
    per label set; the memo is filled under a lock so concurrent readers see
    each entry written once.
    """

    def __init__(self, name: str, basis_fn: Callable[[tuple], Iterable], dim_fn: Callable[[int], int] | None = None):
        self.name = name
        self._basis_fn = basis_fn
        self._dim_fn = dim_fn
        self._cache: dict = {}
        self._dims: dict = {}
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"SpeciesSpec({self.name})"

    def basis(self, labels: Iterable[int]) -> tuple:
        key = frozenset(labels)
        try:
            return self._cache[key]
        except KeyError:
            pass
        check_cap(len(key), f"label set size for {self.name}")
        result = tuple(sorted(self._basis_fn(tuple(sorted(key)))))
        with self._lock:
            return self._cache.setdefault(key, result)

    def basis_n(self, n: int) -> tuple:
        return self.basis(range(1, n + 1))

    def dim(self, n: int) -> int:
        """``dim p[n]``; combinators count without building the basis."""
        if self._dim_fn is None:
            return len(self.basis_n(n))
        if n not in self._dims:
            check_cap(n, f"degree for {self.name}")
            value = self._dim_fn(n)
            with self._lock:
                self._dims.setdefault(n, value)
        return self._dims[n]

    def basis_size(self, n: int) -> int:
        return len(self.basis_n(n))

    def dims(self, N: int) -> list:
        return [self.dim(n) for n in range(N + 1)]

    @property
    def positive(self) -> bool:
        return len(self.basis(())) == 0

    @staticmethod
    def relabel(sigma, b):
        return b.relabel(sigma)


def _require_positive(*species: SpeciesSpec) -> None:
    for sp in species:
        if not sp.positive:
            raise SpeciesError(f"{sp.name} is not positive (it has a basis on the empty set)")


# -- built-ins ------------------------------------------------------------

def set_partitions(ground: tuple) -> list:
    """All set partitions of ``ground`` as lists of sorted tuples."""
    if not ground:
        return [[]]
    first, rest = ground[0], ground[1:]
    out = []
    for part in set_partitions(rest):
        out.append([(first,)] + part)
        for i in range(len(part)):
            out.append(part[:i] + [(first,) + part[i]] + part[i + 1:])
    return out


def _one(ground):
    return [Unit()] if not ground else []


def _X(ground):
    return [Singleton(ground[0])] if len(ground) == 1 else []


def _E(ground):
    return [Unit()]


def _Eplus(ground):
    return [Unit()] if ground else []


def _L(ground):
    return [Order(w) for w in itertools.permutations(ground)]


def _Pi(ground):
    return [Partition.of(p) for p in set_partitions(ground)]


def _elem(ground):
    return [Element(x) for x in ground]


_BUILTINS = {
    "one": _one,
    "X": _X,
    "E": _E,
    "Eplus": _Eplus,
    "L": _L,
    "Pi": _Pi,
    "elem": _elem,
}
_builtin_cache: dict = {}
_builtin_lock = threading.Lock()


def builtin(name: str) -> SpeciesSpec:
    """One of ``one, X, E, Eplus, L, Pi, elem`` (shared instances)."""
    if name not in _BUILTINS:
        raise SpeciesError(f"unknown species {name!r}; known: {', '.join(_BUILTINS)}")
    with _builtin_lock:
        if name not in _builtin_cache:
            _builtin_cache[name] = SpeciesSpec(name, _BUILTINS[name])
        return _builtin_cache[name]


# -- combinators ----------------------------------------------------------

def cauchy(p: SpeciesSpec, q: SpeciesSpec) -> SpeciesSpec:
    def basis_fn(ground):
        out = []
        for k in range(len(ground) + 1):
            for S in itertools.combinations(ground, k):
                T = tuple(x for x in ground if x not in S)
                for x in p.basis(S):
                    for y in q.basis(T):
                        out.append(Split(S, x, y))
        return out

    def dim_fn(n):
        return sum(math.comb(n, k) * p.dim(k) * q.dim(n - k) for k in range(n + 1))

    return SpeciesSpec(f"cauchy({p.name},{q.name})", basis_fn, dim_fn)


def hadamard_species(p: SpeciesSpec, q: SpeciesSpec) -> SpeciesSpec:
    def basis_fn(ground):
        return [Pair(x, y) for x in p.basis(ground) for y in q.basis(ground)]

    return SpeciesSpec(f"hadamard({p.name},{q.name})", basis_fn, lambda n: p.dim(n) * q.dim(n))


def words_over(q: SpeciesSpec, F: SetComposition) -> list:
    """Basis of ``q(F)``, the tensor product of ``q`` over the blocks of ``F``."""
    return [TensorWord(F, fs) for fs in itertools.product(*(q.basis(b) for b in F.blocks))]


def free_species(q: SpeciesSpec) -> SpeciesSpec:
    """Underlying species of the free monoid on a positive species."""
    _require_positive(q)

    def basis_fn(ground):
        out = []
        for F in enumerate_set_compositions(ground):
            out.extend(words_over(q, F))
        return out

    def dim_fn(n):
        # sum over integer compositions of multinomial(n; parts) * prod dim q[part]
        total = [1] + [0] * n
        for m in range(1, n + 1):
            total[m] = sum(math.comb(m, k) * q.dim(k) * total[m - k] for k in range(1, m + 1))
        return total[n]

    sp = SpeciesSpec(f"free({q.name})", basis_fn, dim_fn)
    sp.base = q
    return sp


def _weighted_flags(p: SpeciesSpec, n: int) -> list:
    """``(proper flag, dim p(F))`` over compositions ``F`` of ``[n]`` with ``p(F) != 0``.

    The proper flag is a frozenset of bitmasks of the initial unions other
    than the empty set and ``[n]``; two compositions meet in ``([n])``
    exactly when their proper flags are disjoint.
    """
    out = []
    for F in enumerate_set_compositions(range(1, n + 1)):
        w = math.prod(p.dim(len(b)) for b in F.blocks)
        if not w:
            continue
        acc, flag = 0, []
        for b in F.blocks[:-1]:
            for x in b:
                acc |= 1 << (x - 1)
            flag.append(acc)
        out.append((frozenset(flag), w))
    return out


def star(p: SpeciesSpec, q: SpeciesSpec) -> SpeciesSpec:
    """Positive species spanned by ``p(F) (x) q(G)`` over pairs with ``F ^ G = (I)``."""
    _require_positive(p, q)

    def basis_fn(ground):
        if not ground:
            return []
        top = one_block(ground)
        comps = enumerate_set_compositions(ground)
        pw = [(F, words_over(p, F)) for F in comps]
        qw = [(G, words_over(q, G)) for G in comps]
        pw = [t for t in pw if t[1]]
        qw = [t for t in qw if t[1]]
        out = []
        for F, us in pw:
            for G, vs in qw:
                if meet_set(F, G) == top:
                    out.extend(Pair(u, v) for u in us for v in vs)
        return out

    def dim_fn(n):
        if n == 0:
            return 0
        qf = _weighted_flags(q, n)
        return sum(wf * wg for ff, wf in _weighted_flags(p, n) for fg, wg in qf if not ff & fg)

    sp = SpeciesSpec(f"star({p.name},{q.name})", basis_fn, dim_fn)
    sp.factors = (p, q)
    return sp


# -- expression grammar ------------------------------------------------------

_COMBINATORS = {"cauchy": (2, cauchy), "hadamard": (2, hadamard_species), "star": (2, star), "free": (1, free_species)}


def _tokenize(text: str) -> list:
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "(),":
            tokens.append(c)
            i += 1
        else:
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] in "_-"):
                j += 1
            if j == i:
                raise SpeciesError(f"unexpected character {c!r} in species expression")
            tokens.append(text[i:j])
            i = j
    return tokens


def parse_species(text: str) -> SpeciesSpec:
    """Parse e.g. ``free(star(X,X))`` into a species."""
    tokens = _tokenize(text)
    pos = 0

    def expect(tok):
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != tok:
            raise SpeciesError(f"expected {tok!r} in species expression {text!r}")
        pos += 1

    def expr():
        nonlocal pos
        if pos >= len(tokens):
            raise SpeciesError(f"truncated species expression {text!r}")
        name = tokens[pos]
        pos += 1
        if name in _COMBINATORS:
            arity, fn = _COMBINATORS[name]
            expect("(")
            args = [expr()]
            for _ in range(arity - 1):
                expect(",")
                args.append(expr())
            expect(")")
            return fn(*args)
        return builtin(name)

    result = expr()
    if pos != len(tokens):
        raise SpeciesError(f"trailing tokens in species expression {text!r}")
    return result


# -- generating functions ------------------------------------------------------

def ordinary_gf(p: SpeciesSpec, N: int) -> GFSeries:
    check_cap(N, "series order")
    return GFSeries(tuple(p.dims(N)))


def _adjacent_transposition(n: int, i: int) -> dict:
    sigma = {k: k for k in range(1, n + 1)}
    sigma[i], sigma[i + 1] = i + 1, i
    return sigma


def orbit_count(p: SpeciesSpec, n: int) -> int:
    """Number of S_n-orbits on the basis of ``p[n]``, by closing under adjacent transpositions."""
    basis = p.basis_n(n)
    index = {b: k for k, b in enumerate(basis)}
    parent = list(range(len(basis)))

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for i in range(1, n):
        sigma = _adjacent_transposition(n, i)
        for k, b in enumerate(basis):
            image = index[b.relabel(sigma)]
            a, c = find(k), find(image)
            if a != c:
                parent[a] = c
    return sum(1 for k in range(len(basis)) if find(k) == k)


def integer_partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - k, k):
            yield (k,) + rest


def _cycle_type_representative(n: int, shape: tuple) -> dict:
    sigma = {}
    start = 1
    for length in shape:
        cycle = list(range(start, start + length))
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            sigma[a] = b
        start += length
    return sigma


def _centralizer_size(shape: tuple) -> int:
    out = 1
    for k in set(shape):
        m = shape.count(k)
        out *= k ** m * math.factorial(m)
    return out


def orbit_count_burnside(p: SpeciesSpec, n: int) -> int:
    """Orbit count as the average number of fixed basis labels, one representative per cycle type."""
    basis = p.basis_n(n)
    total = 0
    for shape in integer_partitions(n):
        sigma = _cycle_type_representative(n, shape)
        fixed = sum(1 for b in basis if b.relabel(sigma) == b)
        total += fixed * (math.factorial(n) // _centralizer_size(shape))
    count, rem = divmod(total, math.factorial(n))
    assert rem == 0, "Burnside sum not divisible by n!"
    return count


def type_gf(p: SpeciesSpec, N: int, method: str = "orbits") -> GFSeries:
    """Orbit counts of ``p[n]`` under relabeling, ``n = 0..N``."""
    check_cap(N, "series order")
    counters = {"orbits": orbit_count, "burnside": orbit_count_burnside}
    if method not in counters:
        raise ValueError(f"unknown method {method!r}; use 'orbits' or 'burnside'")
    counter = counters[method]
    return GFSeries(tuple(counter(p, n) for n in range(N + 1)))
