"""Sparse linear maps with exact rational entries.

Spaces are tensor products of species values.  A basis element of an
``r``-fold tensor product is an ``r``-tuple of labels, so every key is a
tuple and the tensor product of two maps is keyed by tuple concatenation.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence


def add_to(vec: dict, key, coef) -> None:
    """In-place ``vec[key] += coef``, dropping zeros."""
    if not coef:
        return
    value = vec.get(key, 0) + coef
    if value:
        vec[key] = value
    else:
        vec.pop(key, None)


class SparseMap:
    """A linear map given by its columns.

    ``columns[d]`` is the image of domain basis element ``d`` as a dict
    ``{codomain key: Fraction}`` with no explicit zeros.  ``domain`` fixes
    the column order and ``codomain`` the row order; both are sequences of
    keys of uniform arity.
    """

    def __init__(self, domain: Sequence[tuple], codomain: Sequence[tuple], columns: dict,
                 dom_arity: int | None = None, cod_arity: int | None = None):
        self.domain = tuple(domain)
        self.codomain = tuple(codomain)
        self.columns = {}
        for d in self.domain:
            col = {k: Fraction(v) for k, v in columns.get(d, {}).items() if v}
            self.columns[d] = col
        self._row_index = None
        self.dom_arity = dom_arity if dom_arity is not None else (len(self.domain[0]) if self.domain else 0)
        self.cod_arity = cod_arity if cod_arity is not None else (len(self.codomain[0]) if self.codomain else 0)

    @classmethod
    def from_function(cls, domain, codomain, fn: Callable[[tuple], dict], dom_arity=None, cod_arity=None) -> "SparseMap":
        return cls(domain, codomain, {d: fn(d) for d in domain}, dom_arity, cod_arity)

    @classmethod
    def identity(cls, basis: Sequence[tuple], arity: int | None = None) -> "SparseMap":
        return cls(basis, basis, {b: {b: 1} for b in basis}, arity, arity)

    @property
    def shape(self) -> tuple:
        return (len(self.codomain), len(self.domain))

    def row_index(self) -> dict:
        if self._row_index is None:
            self._row_index = {k: i for i, k in enumerate(self.codomain)}
        return self._row_index

    def entries(self) -> list:
        """Nonzero entries as sorted ``(row, col, value)`` triples."""
        rows = self.row_index()
        out = []
        for j, d in enumerate(self.domain):
            for k, v in self.columns[d].items():
                out.append((rows[k], j, v))
        out.sort()
        return out

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        for d, c in vec.items():
            try:
                col = self.columns[d]
            except KeyError:
                raise KeyError(f"{d!r} is not in the domain of this map") from None
            for k, v in col.items():
                add_to(out, k, c * v)
        return out

    def compose(self, other: "SparseMap") -> "SparseMap":
        """``self o other``: apply ``other`` first."""
        return SparseMap(other.domain, self.codomain, {d: self.apply(other.columns[d]) for d in other.domain},
                         other.dom_arity, self.cod_arity)

    def __matmul__(self, other: "SparseMap") -> "SparseMap":
        return self.compose(other)

    def tensor(self, other: "SparseMap") -> "SparseMap":
        columns = {}
        for a in self.domain:
            ca = self.columns[a]
            for b in other.domain:
                cb = other.columns[b]
                columns[a + b] = {x + y: u * v for x, u in ca.items() for y, v in cb.items()}
        domain = [a + b for a in self.domain for b in other.domain]
        codomain = [x + y for x in self.codomain for y in other.codomain]
        return SparseMap(domain, codomain, columns, self.dom_arity + other.dom_arity, self.cod_arity + other.cod_arity)

    def scale(self, c) -> "SparseMap":
        c = Fraction(c)
        return SparseMap(self.domain, self.codomain,
                         {d: {k: c * v for k, v in col.items()} for d, col in self.columns.items()},
                         self.dom_arity, self.cod_arity)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMap):
            return NotImplemented
        return set(self.domain) == set(other.domain) and all(self.columns[d] == other.columns[d] for d in self.domain)

    __hash__ = None

    def first_difference(self, other: "SparseMap"):
        """First domain key (in domain order) whose columns differ, else None."""
        for d in self.domain:
            if self.columns[d] != other.columns.get(d, {}):
                return d
        return None

    def is_zero(self) -> bool:
        return not any(self.columns.values())

    def rank(self) -> int:
        """Exact rank by Gaussian elimination over the rationals."""
        pivots: dict = {}
        rank = 0
        for d in self.domain:
            v = dict(self.columns[d])
            while v:
                key = min(v)
                if key not in pivots:
                    pivots[key] = v
                    rank += 1
                    break
                p = pivots[key]
                factor = v[key] / p[key]
                for k, x in p.items():
                    add_to(v, k, -factor * x)
        return rank

    def is_bijective(self) -> bool:
        return len(self.domain) == len(self.codomain) == self.rank()


def tensor_basis(*bases: Iterable) -> list:
    """Keys of a tensor product of spaces, each given by a list of labels."""
    out = [()]
    for basis in bases:
        out = [k + (b,) for k in out for b in basis]
    return out
