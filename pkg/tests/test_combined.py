import pytest
from hypothesis import given
from hypothesis import strategies as st

from tra.combined import (
    NonRailwaySLWarning,
    ThreatScenario,
    Verdict,
    classify,
    load_scenarios,
    scenarios_from_dict,
    scenarios_to_dict,
    tra_run,
    verdict_for,
)
from tra.errors import MissingSLError, ModelError, ScaleMismatchError, UnknownLabelError
from tra.ordinal import Band, sample_matrix
from tra.slvector import SLVector, railway_class

SL3 = railway_class(3)


def scenario(matrix, sid, l, i, safety=True, target="z"):
    return ThreatScenario(
        sid, "", safety, matrix.likelihood_scale.from_order(l), matrix.impact_scale.from_order(i), target
    )


def test_xyz(sample):
    x = scenario(sample, "X", 1, 3)  # 3, green
    y = scenario(sample, "Y", 2, 3)  # 6, yellow
    z = scenario(sample, "Z", 4, 4)  # 16, red
    assert classify(x, sample, SL3).verdict is Verdict.TOLERABLE
    assert classify(y, sample, SL3).band is Band.YELLOW
    assert classify(z, sample, SL3).verdict is Verdict.SL_MISJUDGED
    run = tra_run([x, y, z], sample, {"z": SL3})
    assert [f.verdict for f in run.findings] == [Verdict.TOLERABLE, Verdict.TOLERABLE, Verdict.SL_MISJUDGED]
    assert run.revision_required and run.status == "SL revision required"


def test_red_non_safety_scenario(sample):
    breach = scenario(sample, "breach", 5, 5, safety=False)
    assert classify(breach, sample, SL3).verdict is Verdict.ADDITIONAL_NON_SAFETY_REQUIREMENT
    assert not tra_run([breach], sample, {"z": SL3}).revision_required


def test_empty_and_all_green(sample):
    empty = tra_run([], sample, {})
    assert empty.findings == () and not empty.revision_required
    greens = [scenario(sample, f"s{k}", 1, k) for k in range(1, 5)]
    run = tra_run(greens, sample, {"z": SL3})
    assert run.summary[Verdict.TOLERABLE] == 4
    assert run.summary[Verdict.SL_MISJUDGED] == run.summary[Verdict.ADDITIONAL_NON_SAFETY_REQUIREMENT] == 0


def test_missing_sl(sample):
    with pytest.raises(MissingSLError, match="nowhere"):
        tra_run([scenario(sample, "a", 1, 1, target="nowhere")], sample, {"z": SL3})


def test_scale_mismatch(sample, iso):
    with pytest.raises(ScaleMismatchError):
        classify(scenario(iso, "a", 1, 1), sample, SL3)


def test_non_railway_sl_warns(sample):
    with pytest.warns(NonRailwaySLWarning):
        classify(scenario(sample, "a", 1, 1), sample, SLVector.uniform(3))


def test_configurable_tolerable_bands(sample):
    y = scenario(sample, "Y", 2, 3)
    assert classify(y, sample, SL3, tolerable=frozenset({Band.GREEN})).verdict is Verdict.SL_MISJUDGED


def test_scenario_file(scenarios_path, sample):
    items = load_scenarios(scenarios_path, sample)
    assert [s.id for s in items] == ["X", "Y", "Z"]
    again = scenarios_from_dict(scenarios_to_dict(items), sample)
    assert again == items


def test_scenario_file_errors(sample):
    base = {"id": "a", "safety_related": True, "likelihood": 1, "impact": 1, "target": "z"}
    with pytest.raises(UnknownLabelError):
        scenarios_from_dict({"scenarios": [{**base, "impact": "Huge"}]}, sample)
    with pytest.raises(ModelError):
        scenarios_from_dict({"scenarios": [{k: v for k, v in base.items() if k != "target"}]}, sample)
    with pytest.raises(ModelError):
        scenarios_from_dict({"scenarios": [base, base]}, sample)


@given(st.sampled_from(list(Band)), st.booleans())
def test_verdict_depends_only_on_band_and_flag(band, safety):
    m = sample_matrix()
    cells = [
        (i, l) for i in range(5) for l in range(5) if m.bands[m.cells[i][l]] is band
    ]
    verdicts = {
        classify(scenario(m, "s", l + 1, i + 1, safety), m, SL3).verdict for i, l in cells
    }
    assert len(verdicts) <= 1
    if verdicts:
        assert verdicts == {verdict_for(band, safety)}


@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 4), st.integers(0, 4), st.booleans())
def test_worsening_never_becomes_tolerable(l, i, dl, di, safety):
    m = sample_matrix()
    before = classify(scenario(m, "s", l, i, safety), m, SL3).verdict
    after = classify(scenario(m, "s", min(5, l + dl), min(5, i + di), safety), m, SL3).verdict
    if before is not Verdict.TOLERABLE:
        assert after is not Verdict.TOLERABLE


@given(st.lists(st.tuples(st.integers(1, 5), st.integers(1, 5), st.booleans()), max_size=12))
def test_run_preserves_count_and_revision_rule(specs):
    m = sample_matrix()
    scen = [scenario(m, f"s{k}", l, i, s) for k, (l, i, s) in enumerate(specs)]
    run = tra_run(scen, m, {"z": SL3})
    assert len(run.findings) == len(scen)
    assert [f.scenario_id for f in run.findings] == [s.id for s in scen]
    bad_safety = any(f.band in (Band.ORANGE, Band.RED) and f.safety_related for f in run.findings)
    assert run.revision_required == bad_safety
