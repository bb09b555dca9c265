"""NBB bases for the top element, the noncrossing-tree model, and the
discard classification."""

import pytest

from ncpe.builders import BuildError, build_nc, build_pe_dref, catalan
from ncpe.nbb import (Atom, atom_rank, atoms_by_rank, atoms_cross,
                      base_to_tree, classification_census, classify_base,
                      enumerate_nbb_bases_top, is_bb, moebius_via_nbb,
                      nc_atoms, nc_nbb_bases_for, pe_atoms)
from ncpe.partitions import SetPartition


class TestAtomOrder:
    def test_rank(self):
        assert atom_rank(Atom(2, 4), 5) == 4
        assert atom_rank(Atom(2, 5), 5) == 2
        assert atom_rank(Atom(1, 5), 5) == 1
        with pytest.raises(BuildError):
            atom_rank(Atom(4, 2), 5)

    def test_atom_pools(self):
        assert len(nc_atoms(5)) == 10
        assert set(nc_atoms(5)) - set(pe_atoms(5)) == {Atom(1, 4), Atom(4, 5)}

    def test_groups_partition_ranks(self):
        groups = atoms_by_rank(5, "nc")
        assert [len(g) for g in groups] == [1, 2, 3, 4]
        assert groups[0] == [Atom(1, 5)]
        assert Atom(2, 5) in groups[1]

    def test_crossing(self):
        assert atoms_cross(Atom(1, 3), Atom(2, 4))
        assert not atoms_cross(Atom(1, 4), Atom(2, 3))
        assert not atoms_cross(Atom(1, 2), Atom(2, 3))


class TestBB:
    def test_same_rank_pair_is_bb(self):
        assert is_bb({Atom(2, 4), Atom(3, 4)}, 5, "nc")

    def test_crossing_pair_is_bb(self):
        assert is_bb({Atom(2, 4), Atom(3, 5)}, 5, "nc")

    def test_singleton_never_bb(self):
        for a in nc_atoms(4):
            assert not is_bb({a}, 4, "nc")

    def test_empty_rejected(self):
        with pytest.raises(BuildError):
            is_bb(set(), 4, "nc")


class TestBases:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_nc_count_is_catalan(self, n):
        bases = enumerate_nbb_bases_top(n, "nc")
        assert len(bases) == catalan(n - 1)
        if n >= 2:
            assert all(len(b) == n - 1 for b in bases)
            assert all(Atom(1, n) in b for b in bases)

    @pytest.mark.parametrize("n", range(3, 8))
    def test_pe_count(self, n):
        bases = enumerate_nbb_bases_top(n, "pe")
        assert len(bases) == catalan(n - 1) - 2 * catalan(n - 2)

    def test_one_atom_per_rank(self):
        for base in enumerate_nbb_bases_top(5, "nc"):
            assert sorted(atom_rank(a, 5) for a in base) == [1, 2, 3, 4]

    def test_caps(self):
        with pytest.raises(BuildError):
            enumerate_nbb_bases_top(10, "nc")
        with pytest.raises(BuildError):
            enumerate_nbb_bases_top(2, "pe")


class TestMoebius:
    @pytest.mark.parametrize("n", range(2, 7))
    def test_nc_matches_recursion(self, n):
        assert moebius_via_nbb(n, "nc") == build_nc(n).moebius_bottom_top()

    @pytest.mark.parametrize("n", range(3, 7))
    def test_pe_matches_recursion(self, n):
        assert moebius_via_nbb(n, "pe") == build_pe_dref(n).moebius_bottom_top()

    def test_degenerate(self):
        assert moebius_via_nbb(1, "nc") == 1
        assert moebius_via_nbb(3, "pe") == 0


class TestTrees:
    def test_all_bases_are_trees(self):
        for base in enumerate_nbb_bases_top(6, "nc"):
            tree = base_to_tree(base, 6)
            assert tree.is_tree()
            one, rest = tree.split_at_root_edge()
            # the split is always an initial segment against its complement
            assert one == set(range(1, max(one) + 1))
            assert rest == set(range(max(one) + 1, 7))

    def test_fourteen_trees_at_5(self):
        bases = enumerate_nbb_bases_top(5, "nc")
        assert len(bases) == 14
        assert len({base_to_tree(b, 5).edges for b in bases}) == 14

    def test_non_tree_rejected(self):
        with pytest.raises(BuildError):
            base_to_tree((Atom(1, 2), Atom(1, 2)), 3)

    def test_dot_output(self):
        dot = base_to_tree((Atom(1, 2), Atom(1, 3)), 3).to_dot()
        assert "1 -- 2" in dot and "1 -- 3" in dot


class TestClassification:
    @pytest.mark.parametrize("n", range(3, 8))
    def test_census(self, n):
        census = classification_census(n)
        assert census["S2"] == census["R"] == catalan(n - 2)
        assert census["kept"] == catalan(n - 1) - 2 * catalan(n - 2)
        total = catalan(n - 1)
        # S1 is contained in R and S2 is disjoint from R
        assert census["kept"] == total - census["S2"] - census["R"]

    def test_four_kept_at_5(self):
        census = classification_census(5)
        assert census == {"S1": 2, "S2": 5, "R": 5, "kept": 4}

    @pytest.mark.parametrize("n", (4, 5, 6))
    def test_kept_equals_pe_bases(self, n):
        kept = {frozenset(b) for b in enumerate_nbb_bases_top(n, "nc")
                if classify_base(b, n) == "kept"}
        pe = {frozenset(b) for b in enumerate_nbb_bases_top(n, "pe")}
        assert kept == pe

    def test_rejects_non_base(self):
        with pytest.raises(BuildError):
            classify_base((Atom(2, 3),), 4)


class TestArbitraryElement:
    @pytest.mark.parametrize("n", (3, 4, 5))
    def test_signed_counts_match_recursion(self, n):
        p = build_nc(n)
        table = p.moebius()
        bottom = p.bottom
        for k, x in enumerate(p.keys):
            bases = nc_nbb_bases_for(n, x)
            assert sum((-1) ** len(b) for b in bases) == table.values[(bottom, k)]

    def test_bottom_has_empty_base(self):
        assert nc_nbb_bases_for(4, SetPartition.bottom(4)) == [()]
