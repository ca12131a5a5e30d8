import itertools
import math

import pytest

from hopfkit.compositions import SetComposition, canonical, enumerate_set_compositions, meet_set
from hopfkit.errors import CapExceededError, SpeciesError
from hopfkit.series import GFSeries
from hopfkit.species import (
    Order,
    Pair,
    Partition,
    Singleton,
    TensorWord,
    builtin,
    cauchy,
    free_species,
    hadamard_species,
    ordinary_gf,
    orbit_count,
    orbit_count_burnside,
    parse_species,
    star,
    type_gf,
)

from oracles import bell, integer_partition_count, ordered_bell

X, E, Ep, L, Pi, elem, one = (builtin(n) for n in ("X", "E", "Eplus", "L", "Pi", "elem", "one"))
XX = star(X, X)


class TestBuiltins:
    def test_dimension_sequences(self):
        assert one.dims(4) == [1, 0, 0, 0, 0]
        assert X.dims(4) == [0, 1, 0, 0, 0]
        assert E.dims(4) == [1] * 5
        assert Ep.dims(4) == [0, 1, 1, 1, 1]
        assert L.dims(5) == [math.factorial(n) for n in range(6)]
        assert Pi.dims(6) == [bell(n) for n in range(7)]
        assert elem.dims(4) == [0, 1, 2, 3, 4]

    def test_examples(self):
        assert len(L.basis_n(3)) == 6
        assert len(Pi.basis_n(3)) == 5
        assert X.basis_n(2) == ()

    def test_unknown(self):
        with pytest.raises(SpeciesError):
            builtin("Y")

    def test_positive_flag(self):
        assert X.positive and Ep.positive and not E.positive and not L.positive

    def test_basis_on_arbitrary_labels(self):
        assert L.basis({7, 3}) == (Order((3, 7)), Order((7, 3)))
        assert X.basis({5}) == (Singleton(5),)

    def test_basis_sorted_and_deterministic(self):
        for sp in (L, Pi, cauchy(X, L), XX):
            b = sp.basis_n(3)
            assert list(b) == sorted(b)
            assert sp.basis_n(3) == b

    def test_cap(self):
        with pytest.raises(CapExceededError):
            L.basis_n(9)


class TestFunctoriality:
    @pytest.mark.parametrize("expr", ["L", "Pi", "elem", "cauchy(X,L)", "hadamard(L,Pi)", "star(X,Eplus)", "free(X)"])
    def test_identity_and_composition(self, expr):
        sp = parse_species(expr)
        I = canonical(3)
        perms = [dict(zip(sorted(I), p)) for p in itertools.permutations(sorted(I))]
        ident = {x: x for x in I}
        for b in sp.basis(I):
            assert b.relabel(ident) == b
        for s, t in itertools.product(perms[:4], perms[2:]):
            st = {x: s[t[x]] for x in I}
            for b in sp.basis(I):
                assert b.relabel(t).relabel(s) == b.relabel(st)

    def test_relabel_permutes_basis(self):
        sigma = {1: 5, 2: 9, 3: 4}
        for sp in (L, Pi, XX):
            moved = sorted(b.relabel(sigma) for b in sp.basis_n(3))
            assert moved == list(sp.basis(sigma.values()))


class TestCombinators:
    def test_cauchy(self):
        assert cauchy(X, X).dim(2) == 2
        assert cauchy(L, L).dim(2) == 6
        assert cauchy(one, Pi).dims(5) == Pi.dims(5)
        for n in range(5):
            assert cauchy(L, Pi).basis_size(n) == sum(
                math.comb(n, k) * math.factorial(k) * bell(n - k) for k in range(n + 1))

    def test_hadamard(self):
        assert hadamard_species(L, L).dims(4) == [math.factorial(n) ** 2 for n in range(5)]
        assert hadamard_species(Pi, E).dims(5) == Pi.dims(5)
        assert hadamard_species(X, Pi).dims(4) == [0, 1, 0, 0, 0]

    def test_free_dims(self):
        assert free_species(X).dims(5) == [math.factorial(n) for n in range(6)]
        assert free_species(Ep).dims(6) == [ordered_bell(n) for n in range(7)]
        assert free_species(XX).dims(4) == [math.factorial(n) ** 2 for n in range(5)]
        assert free_species(X).dim(0) == 1

    def test_free_needs_positive(self):
        with pytest.raises(SpeciesError):
            free_species(L)
        with pytest.raises(SpeciesError):
            star(E, X)

    def test_star_small_cases(self):
        assert XX.dim(1) == 1
        assert len(XX.basis_n(2)) == 2
        assert XX.dim(0) == 0

    def test_star_basis_is_pairs_with_trivial_meet(self):
        # brute force over pairs of linear orders
        for n in range(1, 5):
            I = canonical(n)
            pairs = []
            for u, v in itertools.product(itertools.permutations(sorted(I)), repeat=2):
                F, G = SetComposition.linear(u), SetComposition.linear(v)
                if meet_set(F, G) == SetComposition.of(I):
                    pairs.append((u, v))
            got = [(tuple(f.element for f in b.left.factors), tuple(f.element for f in b.right.factors))
                   for b in XX.basis(I)]
            assert sorted(got) == sorted(pairs)

    @pytest.mark.parametrize("expr", ["star(X,X)", "star(Eplus,X)", "star(elem,Eplus)", "free(star(X,X))",
                                      "free(Eplus)", "cauchy(L,Pi)", "hadamard(free(X),Pi)",
                                      "star(star(X,X),X)", "star(X,star(X,X))"])
    def test_dim_counting_matches_enumeration(self, expr):
        sp = parse_species(expr)
        for n in range(5):
            assert sp.dim(n) == sp.basis_size(n)

    def test_star_associative_dims(self):
        left, right = star(XX, X), star(X, XX)
        for n in range(5):
            assert left.basis_size(n) == right.basis_size(n)

    @pytest.mark.parametrize("p,q", [(X, X), (Ep, X), (elem, Ep)])
    def test_star_components_by_meet(self, p, q):
        # count star basis components indexed by H = meet(F, G), against a sum over pairs
        sp = star(p, q)
        fp, fq = free_species(p), free_species(q)
        for n in range(1, 5):
            I = canonical(n)
            comps = enumerate_set_compositions(I)
            by_meet = {H: 0 for H in comps}
            for F, G in itertools.product(comps, repeat=2):
                by_meet[meet_set(F, G)] += (math.prod(p.dim(len(b)) for b in F.blocks)
                                            * math.prod(q.dim(len(b)) for b in G.blocks))
            for H in comps:
                # dim (p*q)(H) is the product of star dims over the blocks of H
                assert by_meet[H] == math.prod(sp.dim(len(b)) for b in H.blocks)
            total = sum(math.prod(sp.dim(len(b)) for b in H.blocks) for H in comps)
            assert total == fp.dim(n) * fq.dim(n)

    def test_parse_errors(self):
        for bad in ("star(X)", "cauchy(X,Y)", "free(X", "X,X", ""):
            with pytest.raises(SpeciesError):
                parse_species(bad)

    def test_pair_label(self):
        b = hadamard_species(L, L).basis_n(1)[0]
        assert b == Pair(Order((1,)), Order((1,)))


class TestGeneratingFunctions:
    def test_ordinary(self):
        assert ordinary_gf(L, 4).coeffs == (1, 1, 2, 6, 24)
        assert ordinary_gf(Pi, 4).coeffs == (1, 1, 2, 5, 15)
        assert ordinary_gf(one, 3).coeffs == (1, 0, 0, 0)

    def test_type_examples(self):
        assert type_gf(L, 5) == GFSeries.of([1, -1, 0, 0, 0, 0]).reciprocal()
        assert type_gf(E, 5).coeffs == (1,) * 6
        assert type_gf(Pi, 6).coeffs == tuple(integer_partition_count(n) for n in range(7))
        assert type_gf(elem, 4).coeffs == (0, 1, 1, 1, 1)

    def test_type_of_star(self):
        # types of X*X are indecomposable permutations: 1, 1, 3, 13
        assert type_gf(XX, 4).coeffs == (0, 1, 1, 3, 13)

    @pytest.mark.parametrize("q", [X, Ep, XX])
    def test_free_type_identity(self, q):
        N = 5
        lhs = type_gf(free_species(q), N)
        rhs = (GFSeries.one(N) - type_gf(q, N)).reciprocal()
        assert lhs == rhs

    @pytest.mark.parametrize("p", [L, Pi, E, elem, X, Ep])
    def test_hadamard_with_L(self, p):
        assert type_gf(hadamard_species(p, L), 5) == ordinary_gf(p, 5)

    @pytest.mark.parametrize("p", [L, Pi, E])
    def test_hadamard_with_free(self, p):
        T = free_species(X)
        rhs = ordinary_gf(p, 5).hadamard((GFSeries.one(5) - type_gf(X, 5)).reciprocal())
        assert type_gf(hadamard_species(p, T), 5) == rhs

    @pytest.mark.parametrize("expr", ["L", "Pi", "elem", "cauchy(X,L)", "hadamard(L,Pi)", "star(X,X)", "free(Eplus)"])
    def test_orbits_two_ways(self, expr):
        sp = parse_species(expr)
        for n in range(6 if expr not in ("hadamard(L,Pi)", "star(X,X)") else 5):
            assert orbit_count(sp, n) == orbit_count_burnside(sp, n)

    def test_method_validation(self):
        with pytest.raises(ValueError):
            type_gf(L, 3, method="characters")
