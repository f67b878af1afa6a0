import random

import pytest

from restchroma import (
    CapError,
    Graph,
    ParseError,
    Restraint,
    alternating_restraint,
    canonicalize,
    complete_graph,
    constant_restraint,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_k_restraints,
    equivalent,
    is_proper,
    parse_restraint,
    path_graph,
    render_restraint,
    restraint_to_json,
    transport,
)

R = parse_restraint


class TestRestraintValue:
    def test_m_value(self):
        assert R("[{1},{2},{3}]").m_value() == 3
        assert R("[{},{},{}]").m_value() == 0
        assert R("[{1,7},{2}]").m_value() == 7

    def test_rejects_nonpositive_colours(self):
        with pytest.raises(ValueError):
            Restraint([[0]])

    def test_k_restraint_validity(self):
        assert R("[{1},{2},{1}]").is_k_restraint(1)
        assert not R("[{1},{1,2}]").is_k_restraint(1)
        # colour above k*n disqualifies
        assert not Restraint([[9], [1]]).is_k_restraint(1)


class TestLiteralSyntax:
    def test_round_trip(self):
        text = "[{1},{2},{1,3}]"
        assert render_restraint(R(text)) == text

    def test_json_form(self):
        r = R("[[1],[2],[1,3]]")
        assert r == R("[{1},{2},{1,3}]")
        assert restraint_to_json(r) == "[[1], [2], [1, 3]]"

    def test_empty_sets(self):
        assert R("[{},{}]").sizes() == (0, 0)

    def test_rejects_garbage(self):
        for bad in ["", "nope", "[{1}", "[{a}]", "[1,2]"]:
            with pytest.raises(ParseError):
                R(bad)


class TestConstructions:
    def test_constant(self, c3):
        assert constant_restraint(c3, 1) == R("[{1},{1},{1}]")
        assert constant_restraint(Graph(2, [(0, 1)]), 2) == R("[{1,2},{1,2}]")

    def test_constant_requires_positive_k(self, c3):
        with pytest.raises(ValueError):
            constant_restraint(c3, 0)

    def test_alternating_four_cycle(self, c4):
        assert alternating_restraint(c4, 1) == R("[{1},{2},{1},{2}]")

    def test_alternating_k2_two_colours_each(self):
        assert alternating_restraint(Graph(2, [(0, 1)]), 2) == R("[{1,2},{3,4}]")

    def test_alternating_rejects_odd_cycle(self, c7):
        with pytest.raises(ValueError, match="not bipartite"):
            alternating_restraint(c7, 1)

    def test_alternating_rejects_disconnected(self):
        with pytest.raises(ValueError, match="disconnected"):
            alternating_restraint(empty_graph(2), 1)

    def test_alternating_is_proper_valid_k_restraint(self):
        for g, k in [(cycle_graph(6), 1), (path_graph(5), 2), (cycle_graph(4), 3)]:
            r = alternating_restraint(g, k)
            assert is_proper(g, r)
            assert r.is_k_restraint(k)


class TestProperness:
    def test_examples(self, c4):
        assert is_proper(c4, R("[{1},{2},{1},{2}]"))
        assert not is_proper(c4, R("[{1},{1},{1},{1}]"))

    def test_no_edges_always_proper(self):
        assert is_proper(empty_graph(3), R("[{1},{1},{1}]"))


class TestTransport:
    def test_path_contraction(self, p3):
        _, merged, relabel = p3.contract_edge((0, 1))
        moved = transport(R("[{1},{2},{3}]"), relabel, merged, 0, 1)
        assert moved == R("[{1,2},{3}]")

    def test_union_idempotent(self):
        g = Graph(2, [(0, 1)])
        _, merged, relabel = g.contract_edge((0, 1))
        moved = transport(R("[{1},{1}]"), relabel, merged, 0, 1)
        assert moved == R("[{1}]")

    def test_disjoint_sets_double_size(self):
        g = Graph(2, [(0, 1)])
        _, merged, relabel = g.contract_edge((0, 1))
        moved = transport(R("[{1,2},{3,4}]"), relabel, merged, 0, 1)
        assert moved == R("[{1,2,3,4}]")

    def test_inconsistent_relabeling_rejected(self):
        with pytest.raises(ValueError, match="inconsistent"):
            transport(R("[{1},{2},{3}]"), (0, 0, 0), 0, 0, 1)
        with pytest.raises(ValueError, match="inconsistent"):
            transport(R("[{1},{2},{3}]"), (0, 1, 1), 0, 0, 1)


class TestEquivalence:
    def test_path_pairs(self, p3):
        assert equivalent(p3, R("[{1},{2},{3}]"), R("[{2},{1},{4}]"))
        assert equivalent(p3, R("[{1},{1},{2}]"), R("[{3},{2},{2}]"))
        assert not equivalent(p3, R("[{1},{2},{3}]"), R("[{1},{1},{2}]"))

    def test_canonicalize_idempotent(self):
        rng = random.Random(21)
        from conftest import random_graph, random_restraint

        for _ in range(40):
            g = random_graph(rng, max_n=5)
            r = random_restraint(rng, g.n)
            cls = canonicalize(g, r)
            again = canonicalize(g, cls.representative)
            assert again.canon == cls.canon
            assert again.representative == cls.representative

    def test_colour_bijection_with_shared_colours(self, p3):
        # swapping colour names must not split a class even when one set
        # contains several colours
        g = empty_graph(2)
        assert equivalent(g, Restraint([[1, 2], [2]]), Restraint([[1, 2], [1]]))

    def test_automorphism_needed(self, p3):
        assert equivalent(p3, R("[{1},{2},{2}]"), R("[{1},{2},{1}]")) is False
        # reversal of the path maps end to end
        assert equivalent(p3, R("[{1},{2},{3}]"), R("[{3},{2},{1}]"))


class TestEnumeration:
    def test_triangle_three_classes(self, c3):
        assert len(enumerate_k_restraints(c3, 1)) == 3

    def test_four_cycle_seven_classes(self, c4):
        classes = enumerate_k_restraints(c4, 1)
        assert len(classes) == 7
        # the seven reference representatives fall into seven distinct classes
        reference = [
            "[{1},{1},{1},{1}]",
            "[{1},{1},{1},{2}]",
            "[{1},{1},{2},{2}]",
            "[{1},{2},{1},{2}]",
            "[{1},{1},{2},{3}]",
            "[{1},{2},{1},{3}]",
            "[{1},{2},{3},{4}]",
        ]
        canons = {canonicalize(c4, R(lit)).canon for lit in reference}
        assert len(canons) == 7
        assert canons == {cls.canon for cls in classes}

    def test_single_vertex(self):
        assert len(enumerate_k_restraints(Graph(1), 1)) == 1

    def test_classes_are_valid_k_restraints(self, c4):
        for k in (1, 2):
            for cls in enumerate_k_restraints(c4, k):
                assert cls.representative.is_k_restraint(k)
                assert cls.k == k

    def test_classes_pairwise_nonequivalent(self, c4):
        classes = enumerate_k_restraints(c4, 1)
        canons = [cls.canon for cls in classes]
        assert len(set(canons)) == len(canons)

    def test_completeness_spot_check(self, c4):
        # any random simple restraint lands in an enumerated class
        rng = random.Random(13)
        canons = {cls.canon for cls in enumerate_k_restraints(c4, 1)}
        for _ in range(100):
            r = Restraint([[rng.randint(1, 4)] for _ in range(4)])
            assert canonicalize(c4, r).canon in canons

    def test_completeness_spot_check_k2(self):
        g = path_graph(4)
        rng = random.Random(14)
        canons = {cls.canon for cls in enumerate_k_restraints(g, 2)}
        for _ in range(60):
            r = Restraint([rng.sample(range(1, 9), 2) for _ in range(4)])
            assert canonicalize(g, r).canon in canons

    def test_shuffle_does_not_change_result(self, c4):
        base = [cls.canon for cls in enumerate_k_restraints(c4, 1)]
        for seed in range(5):
            shuffled = [cls.canon for cls in enumerate_k_restraints(c4, 1, shuffle_seed=seed)]
            assert shuffled == base

    def test_caps(self):
        with pytest.raises(CapError):
            enumerate_k_restraints(path_graph(9), 1)
        with pytest.raises(CapError):
            enumerate_k_restraints(path_graph(6), 2)
        # explicit override lifts the default
        assert enumerate_k_restraints(path_graph(6), 2, n_cap=6)

    def test_disconnected_supported(self):
        g = disjoint_union(complete_graph(2), Graph(1))
        classes = enumerate_k_restraints(g, 1)
        # constant everywhere and isolated-vertex-different are distinct
        assert len(classes) >= 2
