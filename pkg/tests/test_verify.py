"""The self-check has to pass on the real engine and, just as
importantly, fail loudly on a broken one."""

import dataclasses

from latfox import engine, verify
from latfox.context import AttributeColumn

from fixtures import k2


def test_clean_engine_passes():
    report = verify.run_trials(80, seed=7)
    assert report.ok
    assert report.trials == 80
    assert report.as_dict()["failures"] == []


def test_zero_trials():
    report = verify.run_trials(0, seed=7)
    assert report.ok and report.trials == 0


def test_fixed_table_mode():
    report = verify.run_trials(25, seed=7, table=k2())
    assert report.ok and report.trials == 25


def test_determinism():
    a = verify.run_trials(40, seed=123).as_dict()
    b = verify.run_trials(40, seed=123).as_dict()
    assert a == b


def test_catches_corrupted_insert(monkeypatch):
    real = engine.insert_column

    def corrupted(state, column):
        new, change = real(state, column)
        if new.up_arrows:
            new = dataclasses.replace(
                new, up_arrows=frozenset(sorted(new.up_arrows)[1:]))
        return new, change

    monkeypatch.setattr(engine, "insert_column", corrupted)
    report = verify.run_trials(80, seed=7, log=lambda line: None)
    assert not report.ok
    failure = report.failures[0]
    assert failure.operation == "insert"
    assert failure.mismatches
    # the recorded counterexample must reproduce as-is
    ctx = type(k2()).from_strings(failure.objects, failure.attributes,
                                  failure.rows)
    column = AttributeColumn(failure.column_name,
                             ctx.object_set(failure.column_extent))
    assert verify._insert_mismatches(ctx, column)
    # and shrinking earned its keep: a couple of rows at most for this bug
    assert len(failure.objects) <= 3 and len(failure.attributes) <= 3


def test_catches_corrupted_remove(monkeypatch):
    real = engine.remove_column

    def corrupted(state, name):
        new, change = real(state, name)
        broken_gamma = dict(new.gamma)
        if broken_gamma:
            g = sorted(broken_gamma)[0]
            top = max(new.concepts,
                      key=lambda cid: len(new.concepts[cid].extent))
            broken_gamma[g] = top
        return dataclasses.replace(new, gamma=broken_gamma), change

    monkeypatch.setattr(engine, "remove_column", corrupted)
    report = verify.run_trials(120, seed=7, log=lambda line: None)
    assert not report.ok
    failure = report.failures[0]
    assert failure.operation == "remove"
    assert failure.column_extent is None
    ctx = type(k2()).from_strings(failure.objects, failure.attributes,
                                  failure.rows)
    assert verify._remove_mismatches(ctx, failure.column_name)


def test_stops_after_first_failure(monkeypatch):
    def always_broken(ctx, column):
        return ["synthetic mismatch"]

    monkeypatch.setattr(verify, "_insert_mismatches", always_broken)
    report = verify.run_trials(50, seed=7)
    assert not report.ok
    assert report.trials == 1  # early exit, no point burning the budget
