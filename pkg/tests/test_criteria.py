import pytest

from espider.criteria import (CriterionReport, CriterionSoundnessError,
                              Witness, degree_bound, four_leg_q, mod_test,
                              mod_test_scan, qm_test, run_battery, six_leg,
                              sqrt_bound, tree_battery,
                              tree_battery_triggered, two_odd_legs,
                              variety_conditions)
from espider.csf import CsfCache, spider_csf, tree_csf
from espider.graphs import (Spider, enumerate_spiders, enumerate_trees,
                            mn_tree, spider_to_tree)
from espider.partitions import Partition


def triggered_names(reports):
    return [r.name for r in reports if r.triggered]


def test_mod_test_examples():
    rep = mod_test(Spider([1, 1, 1]), 2)
    assert rep.triggered and rep.params["sigma"] == 4
    assert rep.witness.partition == Partition([2, 2])
    assert not mod_test(Spider([2, 2, 2]), 2).triggered
    assert mod_test(Spider([5, 3, 1]), 2).triggered


def test_mod_scan_reports_first_m():
    rep = mod_test_scan(Spider([1, 1, 1]))
    assert rep.triggered and rep.params["m"] == 2


def test_variety_examples():
    reps = variety_conditions(Spider([2, 2, 2]))
    assert reps[0].name == "variety_1" and reps[0].triggered
    assert reps[0].params["i"] == 1
    reps = variety_conditions(Spider([1, 1, 1]))
    assert reps[1].triggered and reps[1].params["m"] == 2
    for n in (5, 7, 9):
        reps = variety_conditions(Spider([n, n - 1, 1]))
        assert triggered_names(reps) == []


def test_variety_weak_form_is_opt_in():
    # S(2,2,1): leg 2 equals the tail 2+... wait, legs (2,2,1): leg2=2, tail=1.
    # Use S(3,3,1): inner leg 3 equals tail 3+1? no. Construct equality:
    # legs (4,2,2): i=2 has leg 2, tail 2 -> weak equality with leg > 1.
    s = Spider([4, 2, 2])
    strict = variety_conditions(s)[0]
    weak = variety_conditions(s, include_weak=True)[0]
    assert not strict.triggered
    assert weak.triggered and weak.params["weak"]


def test_qm_worked_example():
    s = Spider([448, 276, 90, 1, 1])
    rep = qm_test(s, i=2, m=3)
    assert rep.triggered
    assert rep.witness.partition == Partition((103,) + (102,) * 7)
    assert rep.params["a"] == 93 and rep.params["q"] == 8
    assert not qm_test(s, i=2, m=1).triggered
    assert qm_test(s).triggered  # the full scan finds its own instantiation


def test_qm_gate_cases():
    assert not qm_test(Spider([2, 1, 1])).triggered  # t = 1 kills every m
    with pytest.raises(ValueError):
        qm_test(Spider([3, 2, 1]), i=3)  # i out of range (d = 3)


def test_qm_m1_slice_subsumed_by_scan():
    # whenever the m = 1 instantiation fires, the full scan fires too
    for n in range(4, 15):
        for s in enumerate_spiders(n):
            if s.d < 3:
                continue
            m1 = qm_test(s, m=1)
            if m1.triggered:
                assert qm_test(s).triggered, s


def test_sqrt_bound_examples():
    assert sqrt_bound(Spider([3, 3, 3, 3, 3])).triggered
    rep = sqrt_bound(Spider([100, 30, 9, 1, 1]))
    # clause 1 at i=2: 2*31^2 = 1922 > 142*10; clause 2 at i=3:
    # 2*81 = 162 > 142*1 -- both hold, so no trigger
    assert not rep.triggered
    rep = sqrt_bound(Spider([100, 30, 3, 1, 1]))
    # now clause 2 at i=3 fails: 2*9 = 18 <= 136*1
    assert rep.triggered and rep.params == {"i": 3, "clause": 2}
    assert not sqrt_bound(Spider([3, 2, 1])).triggered
    assert not sqrt_bound(Spider([4, 3, 2, 1])).triggered  # empty ranges


def test_degree_bound_examples():
    assert not degree_bound(Spider([5, 4, 3, 2, 1])).triggered   # n = 16
    assert degree_bound(Spider([5, 1, 1, 1, 1])).triggered       # n = 10
    assert not degree_bound(Spider([3, 2, 1])).triggered         # d < 5


def test_degree_bound_threshold():
    # with five legs the cutoff sits between n = 13 and n = 14
    assert degree_bound(Spider([8, 1, 1, 1, 1])).triggered       # n = 13
    assert not degree_bound(Spider([9, 1, 1, 1, 1])).triggered   # n = 14


def test_six_leg_examples():
    rep = six_leg(Spider([1, 1, 1, 1, 1, 1]))
    assert rep.triggered and rep.witness.kind == "missing_type"
    assert not six_leg(Spider([5, 4, 3, 2, 1])).triggered
    s = Spider([30, 20, 10, 5, 2, 1])
    rep = six_leg(s)
    assert rep.triggered
    assert not s.has_connected_partition(rep.witness.partition)


def test_four_leg_q_examples():
    rep = four_leg_q(Spider([15, 12, 2, 1]))
    assert rep.triggered and rep.params["m"] == 3 and rep.params["q"] == 9
    rep = four_leg_q(Spider([6, 4, 1, 1]))
    assert rep.triggered and rep.params["q"] == 5
    assert rep.witness.kind == "negative_coefficient"
    assert rep.witness.value == -13
    assert not four_leg_q(Spider([3, 3, 2, 1])).triggered
    assert not four_leg_q(Spider([3, 2, 1])).triggered  # d != 4 gate


def test_four_leg_q_r_zero_gives_missing_type():
    rep = four_leg_q(Spider([4, 4, 2, 1]))  # m=3, n=12, q=3, r=0
    assert rep.triggered and rep.witness.kind == "missing_type"
    assert rep.witness.partition == Partition([3, 3, 3, 3])


def test_two_odd_legs_examples():
    rep = two_odd_legs(Spider([6, 3, 3, 2]))
    assert rep.triggered and rep.witness.value == -1
    assert not two_odd_legs(Spider([7, 3, 3, 2])).triggered  # odd longest leg
    assert not two_odd_legs(Spider([4, 3, 1, 1])).triggered  # three odd legs
    rep = two_odd_legs(Spider([6, 5, 5, 2]))
    assert not rep.triggered and rep.params["value"] == 7


def test_report_requires_witness_when_triggered():
    with pytest.raises(CriterionSoundnessError):
        CriterionReport("x", True)


def test_battery_on_known_spiders():
    res = run_battery(Spider([6, 4, 1, 1]), mode="criteria_only")
    assert triggered_names(res.reports) == ["four_leg_q", "two_odd_legs"]
    assert res.e_positive is False
    res = run_battery(Spider([6, 4, 1, 1]), mode="with_expansion")
    assert res.e_positive is False
    res = run_battery(Spider([5, 4, 1]), mode="with_expansion")
    assert res.e_positive is True and not res.any_triggered
    res = run_battery(Spider([5, 4, 1]), mode="criteria_only")
    assert res.e_positive is None


def test_battery_mode_gating():
    with pytest.raises(ValueError):
        run_battery(Spider([2, 1]), mode="bogus")
    from espider.csf import OracleBoundError
    with pytest.raises(OracleBoundError):
        run_battery(Spider([30, 2, 1]), mode="with_expansion")
    # criteria_then_expansion skips the expansion when criteria fired
    res = run_battery(Spider([30, 29, 28, 1, 1, 1]),
                      mode="criteria_then_expansion")
    assert res.e_positive is False and res.expansion is None


def test_battery_soundness_small():
    cache = CsfCache()
    for n in range(2, 14):
        for s in enumerate_spiders(n):
            res = run_battery(s, mode="with_expansion", cache=cache, max_n=13)
            if res.any_triggered:
                assert res.e_positive is False, s


def test_witness_validity_small():
    # missing-type witnesses re-checked structurally, negative-coefficient
    # witnesses against the exact expansion (run_battery raises on mismatch)
    cache = CsfCache()
    for n in range(2, 13):
        for s in enumerate_spiders(n):
            res = run_battery(s, mode="with_expansion", cache=cache, max_n=12)
            for rep in res.reports:
                if rep.triggered and rep.witness.kind == "missing_type":
                    assert not s.has_connected_partition(rep.witness.partition)


def test_tree_battery_mn_trees():
    # M_2 is e-positive even though it reduces to the non-e-positive
    # S(4,1,1); no missing-partition criterion may fire
    assert not tree_battery_triggered(mn_tree(2))
    assert tree_csf(mn_tree(2)).is_e_positive()
    assert not spider_csf(Spider([4, 1, 1])).is_e_positive()


def test_tree_battery_degree_six():
    star6 = spider_to_tree(Spider([1, 1, 1, 1, 1, 1]))
    reps = tree_battery(star6)
    assert any(r.triggered for r in reps)
    assert all("vertex" in r.params for r in reps)


def test_tree_battery_soundness():
    cache = CsfCache()
    for n in range(4, 13):
        for t in enumerate_trees(n):
            if tree_battery_triggered(t):
                assert not tree_csf(t, cache).is_e_positive(), t


def test_witness_json_shape():
    w = Witness("negative_coefficient", partition=Partition([3, 2]),
                value=-13, text="t")
    obj = w.to_json_obj()
    assert obj["partition"] == [3, 2] and obj["value"] == "-13"
