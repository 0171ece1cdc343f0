"""Tests for gadget paths and the retraction reduction."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.construct.errors import (
    DisconnectedInput,
    EmbeddingMismatch,
    IndexOutOfRange,
    InvalidRunWord,
    NotBipartite,
    ParityError,
)
from src.construct.gadgets import (
    GadgetFamily,
    RunWord,
    alternating_path,
    build_retraction_instance,
    build_retraction_target,
    gadget_path,
    gadget_word,
    smallest_even_at_least,
    smallest_odd_at_least,
    unanchored_images,
)
from src.oracle.brute import bf_plain_hom
from src.sgraph.graph import SignedGraph
from src.solve.homs import ec_hom, ec_retract
from src.solve.verify import check_ec_witness
from tests.conftest import NEG, POS, cycle, path

GADGET_SIZES = [(3, 2), (5, 2), (3, 4), (5, 4)]


def plain(text: str) -> SignedGraph:
    """'a b, b c' -> all-positive graph with vertices in order of appearance."""
    pairs = [tuple(p.split()) for p in text.split(",")]
    vertices = tuple(dict.fromkeys(v for p in pairs for v in p))
    return SignedGraph(vertices, tuple((u, v, POS) for u, v in pairs))


def onto_alternating(gadget, length: int) -> bool:
    """The gadget maps end to end onto the alternating path of the given length."""
    ap = alternating_path(length)
    first, last = gadget.graph.vertices[0], gadget.graph.vertices[-1]
    witness = ec_hom(gadget.graph, ap, pins={first: ap.vertices[0], last: ap.vertices[-1]})
    return witness is not None and witness.image_set == set(ap.vertices)


def pinned_hom(source: SignedGraph, x: str, gadget) -> bool:
    return ec_hom(source, gadget.graph, pins={x: gadget.endpoint}) is not None


class TestRunWords:
    """Tests for the run-word encoding of gadget paths."""

    def test_p_length_3(self):
        """P with l = 3 is R B3 R, five edges."""
        word = gadget_word(GadgetFamily.P, 3)
        assert str(word) == "R B3 R"
        assert len(word.signs()) == 5

    def test_p1_length_3(self):
        """P_1 shortens its only interior run."""
        assert str(gadget_word(GadgetFamily.P_I, 3, 1)) == "R B R"

    def test_q_length_2(self):
        """Q with k = 2 has no interior runs."""
        assert str(gadget_word(GadgetFamily.Q, 2)) == "R B"

    def test_q_j_length_4(self):
        """Q_1 with k = 4 shortens the first interior run."""
        assert str(gadget_word(GadgetFamily.Q_J, 4, 1)) == "R B R3 B"
        assert str(gadget_word(GadgetFamily.Q_J, 4, 2)) == "R B3 R B"

    def test_p_length_5(self):
        """Interior runs alternate B3 R3 B3."""
        assert str(gadget_word(GadgetFamily.P, 5)) == "R B3 R3 B3 R"
        assert len(gadget_word(GadgetFamily.P, 5)) == 5

    @pytest.mark.parametrize("length", [1, 2, 4])
    def test_p_parity(self, length):
        """P lengths are odd and at least 3."""
        with pytest.raises(ParityError):
            gadget_word(GadgetFamily.P, length)

    @pytest.mark.parametrize("length", [0, 3, 5])
    def test_q_parity(self, length):
        """Q lengths are even and at least 2."""
        with pytest.raises(ParityError):
            gadget_word(GadgetFamily.Q, length)

    @pytest.mark.parametrize("index", [0, 4, None])
    def test_index_range(self, index):
        """P_i for l = 5 needs 1 <= i <= 3."""
        with pytest.raises(IndexOutOfRange):
            gadget_word(GadgetFamily.P_I, 5, index)

    def test_unindexed_family_rejects_index(self):
        """P takes no index."""
        with pytest.raises(IndexOutOfRange):
            gadget_word(GadgetFamily.P, 5, 1)

    def test_runs_alternate(self):
        """Adjacent runs of the same sign are rejected."""
        with pytest.raises(InvalidRunWord):
            RunWord(((NEG, 1), (NEG, 2)))
        with pytest.raises(InvalidRunWord):
            RunWord(((NEG, 0),))


class TestGadgetPaths:
    """Tests for gadget path graphs."""

    def test_p_endpoint(self):
        """P's distinguished vertex is its rightmost, labelled 0."""
        p = gadget_path(GadgetFamily.P, 3)
        assert p.graph.vertices[0] == "P.v0"
        assert p.endpoint == "P.v5"
        assert p.label == "0"

    def test_q_endpoint(self):
        """Q_j's distinguished vertex is its leftmost, labelled j."""
        q = gadget_path(GadgetFamily.Q_J, 4, 2)
        assert q.endpoint == "Q2.v0"
        assert q.label == "2"

    def test_signs_follow_word(self):
        """Edge signs read left to right match the run word."""
        p = gadget_path(GadgetFamily.P_I, 5, 2)
        assert [e.sign for e in p.graph.edges] == p.word.signs()

    def test_alternating_path(self):
        """The alternating path starts with a negative edge."""
        ap = alternating_path(3)
        assert [e.sign for e in ap.edges] == [NEG, POS, NEG]

    def test_parity_helpers(self):
        """Smallest odd and even integers at least n."""
        assert smallest_odd_at_least(4) == 5
        assert smallest_odd_at_least(3) == 3
        assert smallest_even_at_least(3) == 4
        assert smallest_even_at_least(2) == 2


class TestGadgetProperties:
    """The path properties the reduction relies on."""

    @pytest.mark.parametrize(("ell", "k"), GADGET_SIZES)
    def test_p_onto_alternating(self, ell, k):
        """P and every P_i map onto the alternating path of length l."""
        assert onto_alternating(gadget_path(GadgetFamily.P, ell), ell)
        for i in range(1, ell - 1):
            assert onto_alternating(gadget_path(GadgetFamily.P_I, ell, i), ell)

    @pytest.mark.parametrize(("ell", "k"), GADGET_SIZES)
    def test_q_onto_alternating(self, ell, k):
        """Q and every Q_j map onto the alternating path of length k."""
        assert onto_alternating(gadget_path(GadgetFamily.Q, k), k)
        for j in range(1, k - 1):
            assert onto_alternating(gadget_path(GadgetFamily.Q_J, k, j), k)

    @pytest.mark.parametrize(("ell", "k"), GADGET_SIZES)
    def test_p_i_rigid(self, ell, k):
        """With endpoints pinned together, P_i maps to P_i' only when i = i'."""
        for i in range(1, ell - 1):
            for other in range(1, ell - 1):
                found = pinned_hom(
                    gadget_path(GadgetFamily.P_I, ell, i).graph,
                    gadget_path(GadgetFamily.P_I, ell, i).endpoint,
                    gadget_path(GadgetFamily.P_I, ell, other),
                )
                assert found == (i == other)

    @pytest.mark.parametrize(("ell", "k"), GADGET_SIZES)
    def test_q_j_rigid(self, ell, k):
        """With endpoints pinned together, Q_j maps to Q_j' only when j = j'."""
        for j in range(1, k - 1):
            for other in range(1, k - 1):
                found = pinned_hom(
                    gadget_path(GadgetFamily.Q_J, k, j).graph,
                    gadget_path(GadgetFamily.Q_J, k, j).endpoint,
                    gadget_path(GadgetFamily.Q_J, k, other),
                )
                assert found == (j == other)

    @pytest.mark.parametrize("ell", [5, 7])
    def test_reversed_p_i_unpinned(self, ell):
        """Unpinned, P_i folds onto its reversal P_{l-1-i}; pinning rules that out."""
        first = gadget_path(GadgetFamily.P_I, ell, 1)
        last = gadget_path(GadgetFamily.P_I, ell, ell - 2)
        assert ec_hom(first.graph, last.graph) is not None
        assert not pinned_hom(first.graph, first.endpoint, last)

    @pytest.mark.parametrize(("ell", "k"), GADGET_SIZES)
    def test_p_maps_to_every_p_i(self, ell, k):
        """P maps to every P_i, distinguished vertex to distinguished vertex."""
        p = gadget_path(GadgetFamily.P, ell)
        for i in range(1, ell - 1):
            assert pinned_hom(p.graph, p.endpoint, gadget_path(GadgetFamily.P_I, ell, i))

    @pytest.mark.parametrize(("ell", "k"), GADGET_SIZES)
    def test_q_maps_to_every_q_j(self, ell, k):
        """Q maps to every Q_j, distinguished vertex to distinguished vertex."""
        q = gadget_path(GadgetFamily.Q, k)
        for j in range(1, k - 1):
            assert pinned_hom(q.graph, q.endpoint, gadget_path(GadgetFamily.Q_J, k, j))

    @pytest.mark.slow
    @settings(max_examples=60, deadline=None)
    @given(st.text(alphabet="+-", min_size=1, max_size=8))
    def test_two_p_i_images_give_p(self, signs):
        """A pointed path reaching two different P_i endpoints also reaches P's endpoint."""
        x_graph = path(len(signs), signs)
        x = x_graph.vertices[0]
        ell = 5
        reached = [
            i
            for i in range(1, ell - 1)
            if pinned_hom(x_graph, x, gadget_path(GadgetFamily.P_I, ell, i))
        ]
        if len(reached) >= 2:
            assert pinned_hom(x_graph, x, gadget_path(GadgetFamily.P, ell))

    @pytest.mark.slow
    @settings(max_examples=60, deadline=None)
    @given(st.text(alphabet="+-", min_size=1, max_size=8))
    def test_two_q_j_images_give_q(self, signs):
        """A pointed path reaching two different Q_j endpoints also reaches Q's endpoint."""
        y_graph = path(len(signs), signs)
        y = y_graph.vertices[0]
        k = 4
        reached = [
            j
            for j in range(1, k - 1)
            if pinned_hom(y_graph, y, gadget_path(GadgetFamily.Q_J, k, j))
        ]
        if len(reached) >= 2:
            assert pinned_hom(y_graph, y, gadget_path(GadgetFamily.Q, k))


class TestRetractionTarget:
    """Tests for the signed retraction target."""

    def test_single_edge(self):
        """One edge ab: P_1 of length 3 at a, Q_1 of length 4 at b."""
        target = build_retraction_target(plain("a b"))
        assert (target.ell, target.k) == (3, 4)
        assert target.side_a == ("a",) and target.side_b == ("b",)
        assert target.graph.order == 2 + 3 + 6
        assert target.graph.size == 1 + 3 + 6
        assert target.graph.has_edge("a", "b", POS)
        assert target.graph.has_edge("P1.v2", "a", NEG)
        assert target.graph.has_edge("b", "Q1.v1", NEG)

    def test_k_two_leaves_no_q_1(self):
        """Rounding |B| = 1 up to k = 2 would leave side B without a Q_1."""
        with pytest.raises(IndexOutOfRange):
            gadget_path(GadgetFamily.Q_J, 2, 1)
        assert build_retraction_target(plain("a b")).k == smallest_even_at_least(1 + 2)

    def test_gadget_lengths(self):
        """l and k grow with the sides of h."""
        target = build_retraction_target(path(5))
        assert (target.ell, target.k) == (5, 6)

    def test_side_choice(self):
        """Side A may be given explicitly but must be a colour class."""
        target = build_retraction_target(plain("a b"), side_a=["b"])
        assert target.side_a == ("b",)
        with pytest.raises(EmbeddingMismatch):
            build_retraction_target(path(2), side_a=["p0"])

    def test_odd_cycle(self):
        """h must be bipartite."""
        with pytest.raises(NotBipartite):
            build_retraction_target(cycle(3))

    def test_loop(self):
        """Loops make h non-bipartite."""
        with pytest.raises(NotBipartite):
            build_retraction_target(SignedGraph(("a",), (("a", "a", POS),)))

    def test_disconnected(self):
        """h must be connected."""
        with pytest.raises(DisconnectedInput):
            build_retraction_target(plain("a b, c d"))


# (h, g, g retracts to h)
RETRACTION_PAIRS = [
    ("a b", "a b", True),
    ("a b", "a b, b c, c d", True),
    ("a b, b c", "a b, b c, c d, d a", True),
    ("a b", "a b, b c, c d, d a", True),
    ("a b, b c", "a b, b c, c d, d e, e f, f a", True),
    ("a b, b c, c d", "a b, b c, c d, d q, q r, r a", True),
    ("a b", "a b, b x, b y", True),
    ("a b, b c, c d, d a", "a b, b c, c d, d a, a w, c w", True),
    ("a b, b c, c d", "a b, b c, c d, d a", False),
    ("a b, b c, c d, d e, e f", "a b, b c, c d, d e, e f, f q, q r, r a", False),
    ("a b, b c, c d", "a b, b c, c d, d a, b w", False),
    ("a b, b c, c d, d e", "a b, b c, c d, d e, a x, e x", False),
]


class TestRetractionInstance:
    """Tests for the signed retraction instance."""

    def test_identity_instance(self):
        """g = h gives the target itself."""
        h = plain("a b, b c")
        instance = build_retraction_instance(h, h)
        assert instance.graph == instance.target.graph
        assert instance.free_a == () and instance.free_b == ()

    def test_free_vertices(self):
        """A' \\ A gets a copy of P; B' \\ B gets nothing."""
        h = plain("a b, b c, c d, d e, e f")
        g = plain("a b, b c, c d, d e, e f, f q, q r, r a")
        instance = build_retraction_instance(g, h)
        assert instance.free_a == ("q",)
        assert instance.free_b == ("r",)
        assert "P@q.v0" in instance.graph
        assert not any(v.startswith("P@r") for v in instance.graph.vertices)

    def test_missing_edge(self):
        """Every edge of h must be an edge of g."""
        with pytest.raises(EmbeddingMismatch):
            build_retraction_instance(plain("a c, c b"), plain("a b"))

    def test_missing_vertex(self):
        """Every vertex of h must be a vertex of g."""
        with pytest.raises(EmbeddingMismatch):
            build_retraction_instance(plain("a c"), plain("a b"))

    def test_g_not_bipartite(self):
        """g must be bipartite."""
        with pytest.raises(NotBipartite):
            build_retraction_instance(plain("a b, b c, c a"), plain("a b"))

    @pytest.mark.slow
    @pytest.mark.parametrize(("h_edges", "g_edges", "expected"), RETRACTION_PAIRS)
    def test_reduction(self, h_edges, g_edges, expected):
        """g retracts to h exactly when the instance ec-retracts to the target."""
        h, g = plain(h_edges), plain(g_edges)
        assert (bf_plain_hom(g, h, fixed={v: v for v in h.vertices}) is not None) is expected

        instance = build_retraction_instance(g, h)
        witness = ec_retract(instance.graph, instance.target.graph)
        assert (witness is not None) is expected
        if witness is not None:
            assert check_ec_witness(instance.graph, instance.target.graph, witness)
            assert unanchored_images(instance, witness) == []
