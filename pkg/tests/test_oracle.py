"""Cross-checks of the solvers against the brute-force oracles."""

from itertools import combinations

import numpy as np
import pytest

from config.settings import get_corpus_config
from src.models.classification import PolyCase
from src.oracle.brute import (
    SizeBound,
    bf_colouring,
    bf_ec_hom,
    bf_equivalent,
    bf_s_hom,
    check_bounds,
    within_bounds,
)
from src.oracle.corpus import exhaustive_graphs, random_graphs, random_pairs, resign
from src.oracle.cycles import bf_s_hom_via_cycles, enumerate_cycles
from src.sgraph.graph import SignedGraph, underlying
from src.solve.colouring import colour
from src.solve.homs import ec_hom, ec_isomorphism, s_hom, s_hom_paired
from src.solve.poly import decide_poly, poly_target
from src.solve.verify import check_colouring
from src.switching.equivalence import equivalent, switch, verify_certificate
from tests.conftest import NEG, POS, cycle, path

SMALL = list(exhaustive_graphs(2))


def complete(n: int) -> SignedGraph:
    names = tuple(f"k{i}" for i in range(n))
    return SignedGraph(names, tuple((u, v, POS) for u, v in combinations(names, 2)))


class TestCycles:
    """Tests for cycle enumeration."""

    def test_k4(self):
        """K4 has four triangles and three 4-cycles."""
        assert len(enumerate_cycles(complete(4))) == 7

    def test_triangle(self):
        """A triangle has one cycle."""
        cycles = enumerate_cycles(cycle(3, negative=1))
        assert len(cycles) == 1
        assert cycles[0].sign is NEG
        assert len(cycles[0]) == 3

    def test_digon(self, negative_digon):
        """A digon is one negative 2-cycle."""
        cycles = enumerate_cycles(negative_digon)
        assert len(cycles) == 1
        assert cycles[0].sign is NEG

    def test_loops(self, both_loops):
        """Each loop is a cycle of length one."""
        assert sorted(c.sign.value for c in enumerate_cycles(both_loops)) == ["+", "-"]

    def test_digon_on_triangle(self, digon_triangle):
        """A triangle through a digon counts once per parallel edge."""
        cycles = enumerate_cycles(digon_triangle)
        assert len(cycles) == 3
        assert sum(len(c) == 3 for c in cycles) == 2

    def test_trees_have_none(self):
        """Paths are acyclic."""
        assert enumerate_cycles(path(4)) == []


class TestBounds:
    """Tests for oracle size limits."""

    def test_source_too_large(self):
        """Sources above the limit are refused."""
        with pytest.raises(SizeBound):
            check_bounds(path(9))

    def test_target_too_large(self):
        """Targets above the limit are refused."""
        with pytest.raises(SizeBound):
            bf_s_hom(path(1), path(7))

    def test_within_bounds(self):
        """within_bounds reports instead of raising."""
        assert within_bounds(path(3), path(2))
        assert not within_bounds(path(9))


class TestCorpus:
    """Tests for the generated corpora."""

    def test_exhaustive_counts(self):
        """Four one-vertex classes and thirty connected two-vertex classes."""
        assert len([g for g in SMALL if g.order == 1]) == 4
        assert len(SMALL) == 34

    def test_exhaustive_connected(self):
        """Only connected graphs are listed by default."""
        assert all(g.is_connected for g in exhaustive_graphs(3))

    def test_exhaustive_one_per_class(self):
        """No two listed graphs are isomorphic."""
        for first, second in combinations(SMALL, 2):
            assert ec_isomorphism(first, second) is None

    def test_disconnected_included_on_request(self):
        """Two vertices without an edge give ten classes, one per unordered pair of loop states."""
        extra = [g for g in exhaustive_graphs(2, connected=False) if not g.is_connected]
        assert len(extra) == 10

    def test_atlas_limit(self):
        """The atlas only reaches seven vertices."""
        with pytest.raises(ValueError):
            next(exhaustive_graphs(8))

    @pytest.mark.slow
    def test_default_reaches_four_vertices(self):
        """The configured corpus covers every connected graph up to four vertices."""
        orders = {g.order for g in exhaustive_graphs()}
        assert orders == set(range(1, get_corpus_config().exhaustive_max_vertices + 1))
        assert max(orders) == 4

    def test_random_reproducible(self):
        """The same seed gives the same graphs."""
        assert random_graphs(count=5, seed=7) == random_graphs(count=5, seed=7)

    def test_random_connected(self):
        """Random graphs are connected and within the vertex range."""
        for g in random_graphs(count=20, min_vertices=3, max_vertices=5):
            assert g.is_connected
            assert 3 <= g.order <= 5

    def test_resign_keeps_underlying_graph(self):
        """Re-signing never changes the underlying graph."""
        rng = np.random.default_rng(3)
        for g in random_graphs(count=20):
            assert underlying(resign(g, rng)) == underlying(g)


class TestAgreement:
    """Solvers agree with the oracles."""

    def test_exhaustive_pairs(self):
        """s_hom and ec_hom agree with brute force on all pairs up to two vertices."""
        for g in SMALL:
            for h in SMALL:
                assert (s_hom(g, h) is not None) == bf_s_hom(g, h)
                assert (ec_hom(g, h) is not None) == (bf_ec_hom(g, h) is not None)

    def test_cycle_form_small(self):
        """The cycle-sign oracle agrees with the switching oracle."""
        for g, h in random_pairs(count=40, source_max=4, target_max=3):
            assert bf_s_hom_via_cycles(g, h) == bf_s_hom(g, h)

    def test_equivalence(self):
        """The certifying algorithm agrees with trying every switch set."""
        rng = np.random.default_rng(11)
        for g in random_graphs(count=40, min_vertices=3, max_vertices=7):
            other = resign(g, rng)
            assert equivalent(g, other).is_cut == bf_equivalent(g, other)

    def test_colouring_small(self):
        """Colourings exist exactly when direct enumeration finds one."""
        for g in SMALL:
            for k in (1, 2):
                for zero_free in (False, True):
                    found = colour(g, k, zero_free)
                    assert (found is not None) == (bf_colouring(g, k, zero_free) is not None)

    @pytest.mark.slow
    def test_equivalence_corpus(self):
        """Exhaustive and random graphs: the certifier agrees with brute force and re-checks."""
        rng = np.random.default_rng(get_corpus_config().seed)
        for g in [*exhaustive_graphs(), *random_graphs()]:
            xs = [v for v in g.vertices if rng.random() < 0.5]
            for other in (resign(g, rng), switch(g, xs)):
                cert = equivalent(g, other)
                assert cert.is_cut == bf_equivalent(g, other)
                assert verify_certificate(g, other, cert)

    @pytest.mark.slow
    def test_random_pairs(self):
        """Full pair corpus: the three forms of s_hom agree with both oracles."""
        for g, h in random_pairs():
            expected = bf_s_hom(g, h)
            assert (s_hom(g, h) is not None) == expected
            assert (s_hom_paired(g, h) is not None) == expected
            assert bf_s_hom_via_cycles(g, h) == expected

    @pytest.mark.slow
    @pytest.mark.parametrize("case", list(PolyCase))
    def test_poly_deciders(self, case):
        """Each polynomial decider agrees with brute force on random graphs up to seven vertices."""
        config = get_corpus_config()
        target = poly_target(case)
        instances = random_graphs(
            count=config.poly_instance_count, min_vertices=1, max_vertices=config.poly_instance_max
        )
        for g in [*exhaustive_graphs(3), *instances]:
            assert bool(decide_poly(case, g)) == bf_s_hom(g, target)

    @pytest.mark.slow
    @pytest.mark.parametrize("zero_free", [False, True])
    def test_colouring_sweep(self, zero_free):
        """Colourings agree with direct enumeration on every small graph and at the size limit."""
        config = get_corpus_config()
        top = config.colour_max_vertices
        graphs = [
            *exhaustive_graphs(),
            *random_graphs(count=60, min_vertices=top, max_vertices=top),
        ]
        for g in graphs:
            for k in (1, 2):
                found = colour(g, k, zero_free)
                assert (found is not None) == (bf_colouring(g, k, zero_free) is not None)
                if found is not None:
                    assert check_colouring(g, found)
