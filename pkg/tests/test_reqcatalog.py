import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tra.errors import ModelError, OutOfRangeError
from tra.reqcatalog import (
    Catalog,
    Coverage,
    RequirementEntry,
    coverage_summary,
    export_document,
    load_catalog,
    safety_spec_export,
    sample_catalog,
    tailor,
)
from tra.slvector import FR, SLVector, dominates, railway_class

ONES = SLVector.uniform(1)


def entry(i, fr="DC", min_sl=2, cov=Coverage.COVERED_BY_SAFETY_STANDARD):
    return RequirementEntry(f"R{i}", FR(fr), min_sl, f"title {i}", cov)


def test_dc_pinned_excludes_entry():
    cat = Catalog("one", (entry(1),))
    assert tailor(cat, railway_class(2)) == []
    assert tailor(cat, SLVector.uniform(2)) == [cat.entries[0]]


def test_sample_catalog_sl1():
    cat = sample_catalog()
    sl1 = tailor(cat, ONES)
    assert len(sl1) == 41
    assert all(e.min_sl == 1 for e in sl1)
    counts = coverage_summary(sl1)
    assert counts[Coverage.COVERED_BY_SAFETY_STANDARD] > 20
    assert 8 <= counts[Coverage.GOOD_PRACTICE_IN_RAILWAY] <= 13
    assert 8 <= counts[Coverage.NOT_ADDRESSED_BY_SAFETY] <= 13
    assert sum(counts.values()) == 41


def test_tailor_order_by_fr_then_id():
    cat = Catalog("c", (entry("b", "UC", 1), entry("a", "UC", 1), entry("z", "IAC", 1)))
    assert [e.id for e in tailor(cat, ONES)] == ["Rz", "Ra", "Rb"]


def test_coverage_summary_trivial():
    assert set(coverage_summary([]).values()) == {0}
    single = coverage_summary([entry(1, cov=Coverage.NOT_ADDRESSED_BY_SAFETY)])
    assert single == {
        Coverage.COVERED_BY_SAFETY_STANDARD: 0,
        Coverage.GOOD_PRACTICE_IN_RAILWAY: 0,
        Coverage.NOT_ADDRESSED_BY_SAFETY: 1,
    }


def test_safety_spec_export():
    cat = sample_catalog()
    exported = safety_spec_export(cat)
    assert len(exported) == 41
    assert set(exported) == set(tailor(cat, ONES))
    covs = [e.coverage for e in exported]
    assert covs == sorted(covs, key=list(Coverage).index)
    assert safety_spec_export(Catalog("none", (entry(1, min_sl=2),))) == []


def test_export_document():
    doc = export_document(sample_catalog())
    assert doc["schema_version"] == 1 and doc["count"] == 41
    assert sum(len(v) for v in doc["groups"].values()) == 41
    assert list(doc["groups"]) == [c.value for c in Coverage]


def test_extremes():
    cat = sample_catalog()
    assert tailor(cat, SLVector.uniform(0)) == []
    assert len(tailor(cat, SLVector.uniform(4))) == len(cat)


def test_catalog_invariants(tmp_path):
    with pytest.raises(ModelError):
        Catalog("dup", (entry(1), entry(1)))
    with pytest.raises(OutOfRangeError):
        entry(1, min_sl=0)
    with pytest.raises(ValueError):
        RequirementEntry("x", "XX", 1, "t", "CoveredBySafetyStandard")
    path = tmp_path / "c.json"
    path.write_text(json.dumps(sample_catalog().to_dict()))
    assert load_catalog(path) == sample_catalog()


def random_catalog(rng, n):
    return Catalog(
        "rand",
        tuple(
            entry(k, rng.choice(list(FR)).value, rng.randint(1, 4), rng.choice(list(Coverage)))
            for k in range(n)
        ),
    )


vectors = st.tuples(*[st.integers(0, 4)] * 7).map(SLVector)


@settings(max_examples=200)
@given(st.integers(0, 10_000), st.integers(0, 30), vectors, vectors)
def test_tailor_monotone(seed, n, a, b):
    cat = random_catalog(random.Random(seed), n)
    if dominates(a, b):
        assert set(tailor(cat, a)) >= set(tailor(cat, b))
    assert sum(coverage_summary(tailor(cat, a)).values()) == len(tailor(cat, a))
