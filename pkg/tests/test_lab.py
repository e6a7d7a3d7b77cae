from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from twobridge.conway import ConwayWord, Verdict, equivalent
from twobridge.family import FamilyParams, family_word, match_family
from twobridge.lab import (
    TABLE2, FamilyBounds, FamilyMember, Truncated, convention_check, enumerate_family,
    express_in_family, family_params, verify_table1, verify_table2,
)

params = st.builds(FamilyParams, st.integers(-6, 6), st.lists(st.integers(-6, 6), max_size=3))


class TestFamilyWord:
    @pytest.mark.parametrize("p, w", [
        (FamilyParams(-2, [0]), "C(-2,0,1,1,1,1,1,1)"),
        (FamilyParams(3, [-1]), "C(3,-1,1,1,1,1,1,2)"),
        (FamilyParams(1, [3]), "C(1,3,1,1,1,1,1,-2)"),
        (FamilyParams(-2), "C(-2,1,1,1,1,1)"),
        (FamilyParams(0, [1, 2]), "C(0,2,1,1,1,1,1,1,0,-2)"),
    ])
    def test_examples(self, p, w):
        assert str(family_word(p)) == w

    @given(params)
    def test_match_inverts_family_word(self, p):
        assert match_family(family_word(p)) == p

    def test_match_rejects_other_words(self):
        assert match_family("C(2,2)") is None
        assert match_family("C(1,3,1,1,2,1,1,-2)") is None

    def test_str(self):
        assert str(FamilyParams(-2, [0])) == "(beta=-2, [0])"


class TestTables:
    def test_table1(self):
        report = verify_table1()
        assert report.ok and len(report.knots()) == 14 and len(report.rows) == 28

    @pytest.mark.parametrize("name, example", [("4_1", "C(-1,0,1,1,1,1,1,1)"),
                                               ("6_3", "C(0,0,1,1,1,1,1,1)"),
                                               ("10_32", "C(-2,3,1,1,1,1,1,-2)")])
    def test_table1_rows(self, name, example):
        row = next(r for r in verify_table1().rows if r.name == name and str(r.example) == example)
        assert row.ok

    def test_table2(self):
        report = verify_table2()
        assert report.ok
        assert report.cell("4_1", "10_3").computed == (5,)
        assert report.cell("10_1", "6_1").computed == (2,)
        assert report.cell("8_3", "10_1").computed == (2, 4)

    def test_table2_has_every_cell(self):
        assert len(TABLE2) == 15

    def test_verifiers_deterministic(self):
        assert verify_table1().as_dict() == verify_table1().as_dict()
        assert verify_table2().as_dict() == verify_table2().as_dict()


class TestEnumeration:
    def test_order(self):
        got = list(family_params(FamilyBounds(n_max=1, beta_min=-1, beta_max=1)))
        assert got[:3] == [FamilyParams(-1), FamilyParams(0), FamilyParams(1)]
        assert got[3:6] == [FamilyParams(-1, [-1]), FamilyParams(-1, [0]), FamilyParams(-1, [1])]
        assert len(got) == 3 + 9

    def test_degenerate_members_optional(self):
        got = list(family_params(FamilyBounds(n_max=1, beta_min=0, beta_max=1,
                                              include_degenerate=False)))
        assert all(p.n == 1 for p in got)

    def test_members(self):
        members = list(enumerate_family(FamilyBounds(n_max=2, beta_min=-3, beta_max=3)))
        assert len(members) == 7 + 49 + 343
        for m in members:
            assert isinstance(m, FamilyMember)
            assert m.trivial or abs(m.a2) == 1

    def test_n0_member(self):
        m = next(iter(enumerate_family(FamilyBounds(n_max=0, beta_min=-2, beta_max=-2))))
        assert str(m.word) == "C(-2,1,1,1,1,1)" and abs(m.a2) == 1

    def test_trefoil_identified(self):
        ms = enumerate_family(FamilyBounds(n_max=1, beta_min=-2, beta_max=0))
        m = next(x for x in ms if x.params == FamilyParams(-2, [0]))
        assert m.name.rstrip("*") == "3_1"

    def test_truncation(self):
        out = list(enumerate_family(FamilyBounds(n_max=2, limit=5)))
        assert len(out) == 6 and isinstance(out[-1], Truncated) and out[-1].emitted == 5

    def test_member_record(self):
        m = next(iter(enumerate_family(FamilyBounds(n_max=0, beta_min=1, beta_max=1))))
        assert list(m.as_dict()) == ["params", "word", "p", "q", "name", "a2", "chirality"]

    def test_empty_bounds_rejected(self):
        with pytest.raises(ValueError):
            FamilyBounds(beta_min=2, beta_max=1)


class TestExpress:
    def test_trefoil(self):
        assert express_in_family("C(3)") == FamilyParams(-2, [0])

    def test_10_19(self):
        witness = express_in_family("C(4,1,1,1,3)")
        assert witness is not None
        assert equivalent(family_word(witness), "C(4,1,1,1,3)") is not Verdict.DISTINCT
        # other parameters can spell the same knot
        assert equivalent(family_word(FamilyParams(1, [3])), "C(4,1,1,1,3)") is not Verdict.DISTINCT

    def test_no_witness_when_lower_bound_exceeds_one(self):
        assert express_in_family("C(4,2)") is None
        assert express_in_family("C(4,2)", FamilyBounds(n_max=3, beta_min=-2, beta_max=2)) is None

    def test_unknot(self):
        assert express_in_family("C(1)") is None

    @settings(max_examples=30, deadline=None)
    @given(st.builds(FamilyParams, st.integers(-4, 4), st.lists(st.integers(-4, 4), min_size=1,
                                                                 max_size=1)))
    def test_round_trip_up_to_class(self, p):
        w = family_word(p)
        if equivalent(w, ConwayWord()) is Verdict.SAME:
            return
        witness = express_in_family(w, FamilyBounds(n_max=1, beta_min=-4, beta_max=4,
                                                    include_degenerate=False))
        assert witness is not None and witness <= p
        assert equivalent(family_word(witness), w) is not Verdict.DISTINCT


def test_convention_check():
    checks = convention_check()
    assert checks and all(ok for _, ok in checks), [label for label, ok in checks if not ok]
