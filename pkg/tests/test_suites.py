from __future__ import annotations

import pytest

from rcwb.finpar import FinParModel
from rcwb.laws import Budget
from rcwb.suites import GROUPS, SUITES, Workbench, resolve, run_suites


def test_groups_cover_every_suite():
    assert set(resolve("all")) == set(SUITES)
    for name, members in GROUPS.items():
        assert set(members) <= set(SUITES), name


def test_single_suite_resolves_to_itself():
    assert resolve("monad") == ("monad",)


def test_unknown_selection():
    with pytest.raises(KeyError):
        resolve("everything-else")


def test_run_suites_tags_reports(demo2):
    reports = run_suites(demo2, "splitting", Budget(max_size=1))
    assert {r.suite for r in reports} == {"splitting", "universal-product"}
    assert all(r.status in ("pass", "skipped") for r in reports)


def test_workbench_lifts_the_hom_cap(demo2):
    wb = Workbench(demo2, Budget(max_hom=10**5))
    assert wb.finpar.max_hom == 10**5
    assert demo2.max_hom == 4096  # the caller's model is left alone


def test_empty_universe_is_vacuous():
    reports = run_suites(FinParModel.from_atoms([], 1), "thm2", Budget(max_size=1))
    assert not any(r.status == "fail" for r in reports)
