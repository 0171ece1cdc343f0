"""Tests for switching, walk signs, balance and the equivalence certifier."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.models.witnesses import CertificateKind
from src.oracle.corpus import resign
from src.sgraph.graph import SignedGraph, UnknownVertex
from src.switching.equivalence import (
    GraphMismatch,
    NotAWalk,
    NotClosed,
    closed_walk_sign,
    equivalent,
    fundamental_cycles,
    is_balanced,
    same_cycle_signs,
    same_signature,
    switch,
    verify_certificate,
)
from tests.conftest import NEG, POS, cycle, signed_graphs


class TestSwitch:
    """Tests for switching at a vertex set."""

    def test_one_endpoint_flips(self, edge_positive, edge_negative):
        """Switching one endpoint of a positive edge makes it negative."""
        assert switch(edge_positive, ["u"]) == edge_negative

    def test_both_endpoints_keep(self, edge_positive):
        """Switching both endpoints changes nothing."""
        assert switch(edge_positive, ["u", "v"]) == edge_positive

    def test_loop_invariant(self):
        """Loops never change sign."""
        g = SignedGraph(("u",), (("u", "u", NEG),))
        assert switch(g, ["u"]) == g

    def test_digon_invariant(self, negative_digon):
        """A digon stays a digon."""
        assert switch(negative_digon, ["u"]) == negative_digon

    def test_unknown_vertex(self, edge_positive):
        """Switch sets must be vertex subsets."""
        with pytest.raises(UnknownVertex):
            switch(edge_positive, ["w"])

    @given(signed_graphs(), st.data())
    def test_involution(self, g, data):
        """Switching twice at the same set is the identity."""
        xs = data.draw(st.sets(st.sampled_from(g.vertices)))
        assert switch(switch(g, xs), xs) == g


class TestClosedWalkSign:
    """Tests for closed-walk signs."""

    def test_positive_triangle(self):
        """An all-positive triangle is positive."""
        assert closed_walk_sign(cycle(3), ["c0", "c1", "c2", "c0"]) is POS

    def test_five_cycle(self, five_cycle):
        """The five-cycle has one negative edge."""
        assert closed_walk_sign(five_cycle, ["u", "v", "y", "z", "x", "u"]) is NEG

    def test_back_and_forth(self, edge_negative):
        """A negative edge traversed twice contributes a positive sign."""
        assert closed_walk_sign(edge_negative, ["u", "v", "u"]) is POS

    def test_not_closed(self, five_cycle):
        """Open walks are rejected."""
        with pytest.raises(NotClosed):
            closed_walk_sign(five_cycle, ["u", "v", "y"])

    def test_not_a_walk(self, five_cycle):
        """Steps must follow edges."""
        with pytest.raises(NotAWalk):
            closed_walk_sign(five_cycle, ["u", "y", "u"])

    def test_digon_needs_signs(self, negative_digon):
        """Walks through a digon must name the edge used."""
        with pytest.raises(NotAWalk):
            closed_walk_sign(negative_digon, ["u", "v", "u"])
        assert closed_walk_sign(negative_digon, ["u", "v", "u"], [POS, NEG]) is NEG

    @settings(max_examples=60)
    @given(signed_graphs(min_vertices=3), st.data())
    def test_invariant_under_switching(self, g, data):
        """Every fundamental cycle keeps its sign after any switching."""
        xs = data.draw(st.sets(st.sampled_from(g.vertices)))
        switched = switch(g, xs)
        for c in fundamental_cycles(g):
            walk = [*c, c[0]]
            assert closed_walk_sign(g, walk) is closed_walk_sign(switched, walk)


class TestBalance:
    """Tests for is_balanced."""

    def test_all_positive(self, five_cycle):
        """(G, empty) is balanced with the empty switch set."""
        balanced, cert = is_balanced(five_cycle.all_positive())
        assert balanced
        assert cert.is_cut and cert.switch_set == ()

    def test_unbalanced_c4(self, unbalanced_c4):
        """A 4-cycle with one negative edge is unbalanced; the witness is the 4-cycle."""
        balanced, cert = is_balanced(unbalanced_c4)
        assert not balanced
        assert sorted(cert.cycle) == ["c0", "c1", "c2", "c3"]
        assert closed_walk_sign(unbalanced_c4, cert.walk()) is NEG

    def test_five_cycle_unbalanced(self, five_cycle):
        """The five-cycle with one negative edge is unbalanced."""
        balanced, cert = is_balanced(five_cycle)
        assert not balanced
        assert len(cert.cycle) == 5

    def test_negative_loop(self):
        """A negative loop is a negative cycle of length 1."""
        balanced, cert = is_balanced(SignedGraph(("u",), (("u", "u", NEG),)))
        assert not balanced and cert.cycle == ("u",)

    def test_digon(self, negative_digon):
        """A digon is a negative 2-cycle."""
        balanced, cert = is_balanced(negative_digon)
        assert not balanced
        assert cert.cycle_signs == (POS, NEG)

    def test_switch_set_makes_positive(self):
        """The accepting cut switches every edge to positive."""
        g = cycle(6, negative=2)
        balanced, cert = is_balanced(g)
        assert balanced
        assert not switch(g, cert.switch_set).negative_edges


class TestEquivalent:
    """Tests for the certifying equivalence algorithm."""

    def test_identical(self, five_cycle):
        """Equal signatures give the empty cut."""
        cert = equivalent(five_cycle, five_cycle)
        assert cert.kind is CertificateKind.CUT
        assert cert.switch_set == ()

    def test_single_edge(self, edge_positive, edge_negative):
        """A negative edge switches to a positive one at the endpoint away from the root."""
        cert = equivalent(edge_negative, edge_positive)
        assert cert.is_cut
        assert cert.switch_set == ("v",)
        assert verify_certificate(edge_negative, edge_positive, cert)

    def test_c4_cycle_certificate(self, unbalanced_c4, balanced_c4):
        """One negative edge on a 4-cycle cannot be switched away."""
        cert = equivalent(unbalanced_c4, balanced_c4)
        assert cert.kind is CertificateKind.CYCLE
        assert len(cert.cycle) == 4
        assert verify_certificate(unbalanced_c4, balanced_c4, cert)

    def test_loop_sign_change(self):
        """A loop of a different sign is its own certificate."""
        g = SignedGraph(("u",), (("u", "u", NEG),))
        other = SignedGraph(("u",), (("u", "u", POS),))
        assert equivalent(g, other).cycle == ("u",)

    def test_mismatch(self, five_cycle, digon_triangle):
        """Different underlying graphs are rejected."""
        with pytest.raises(GraphMismatch):
            equivalent(five_cycle, digon_triangle)

    def test_text(self, unbalanced_c4, balanced_c4):
        """Certificates print as 'cut ...' or 'cycle ...'."""
        assert equivalent(balanced_c4, balanced_c4).to_text() == "cut"
        assert equivalent(unbalanced_c4, balanced_c4).to_text().startswith("cycle ")

    @settings(max_examples=80)
    @given(signed_graphs(), st.data())
    def test_switched_copy_is_cut(self, g, data):
        """Any switching of g is recognised with a verifying cut."""
        xs = data.draw(st.sets(st.sampled_from(g.vertices)))
        other = switch(g, xs)
        cert = equivalent(g, other)
        assert cert.is_cut
        assert verify_certificate(g, other, cert)

    @settings(max_examples=80)
    @given(signed_graphs(), st.integers(min_value=0, max_value=2**32 - 1))
    def test_certificate_soundness(self, g, seed):
        """Every certificate verifies and agrees with the cycle-basis test."""
        other = resign(g, np.random.default_rng(seed))
        cert = equivalent(g, other)
        assert verify_certificate(g, other, cert)
        assert cert.is_cut == same_cycle_signs(g, other)

    @given(signed_graphs())
    def test_balance_matches_equivalence(self, g):
        """Balanced iff equivalent to the all-positive signature (no digon, no negative loop)."""
        balanced, _ = is_balanced(g)
        if not g.has_digon and not g.has_loop(NEG):
            assert balanced == equivalent(g, g.all_positive()).is_cut
        else:
            assert not balanced


class TestSameSignature:
    """Tests for signature comparison."""

    def test_vertex_order_ignored(self, edge_positive):
        """Vertex order does not matter."""
        flipped = SignedGraph(("v", "u"), (("u", "v", POS),))
        assert same_signature(edge_positive, flipped)

    def test_sign_matters(self, edge_positive, edge_negative):
        """Signs do."""
        assert not same_signature(edge_positive, edge_negative)
