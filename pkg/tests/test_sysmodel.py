import json
import random

import pytest

from modelgen import duplicate_membership, orphan_object, random_valid_model, remove_environment_conduits
from tra.errors import ModelError, UnknownObjectError
from tra.slvector import SLKind
from tra.sysmodel import (
    ENVIRONMENT,
    Conduit,
    Rule,
    SystemModel,
    SystemObject,
    Zone,
    load_model,
    validate,
    zone_of,
)


@pytest.fixture
def minimal():
    return SystemModel(
        objects=(SystemObject("obj1", "hardware"), SystemObject("obj2", "software")),
        zones=(Zone("zoneA", {"obj1"}),),
        conduits=(Conduit("conduitC", {"obj2"}, ("zoneA", ENVIRONMENT)),),
    )


def test_minimal_model_is_valid(minimal):
    assert validate(minimal) == []


def test_object_in_two_zones(minimal):
    model = SystemModel(
        minimal.objects,
        (Zone("zoneA", {"obj1"}), Zone("zoneB", {"obj1"})),
        minimal.conduits,
    )
    violations = validate(model)
    assert [(v.rule, v.id) for v in violations] == [(Rule.R1, "obj1")]


def test_no_environment_conduit():
    model = SystemModel(
        (SystemObject("a", "hardware"), SystemObject("b", "hardware")),
        (Zone("z1", {"a"}), Zone("z2", {"b"})),
    )
    assert [v.rule for v in validate(model)] == [Rule.R3]


def test_undeclared_member_and_bad_endpoint(minimal):
    model = SystemModel(
        minimal.objects,
        (Zone("zoneA", {"obj1", "ghost"}),),
        (Conduit("conduitC", {"obj2"}, ("zoneA", ENVIRONMENT)), Conduit("c2", {"obj2x"}, ("zoneA", "zoneQ"))),
    )
    rules = [(v.rule, v.id) for v in validate(model)]
    assert (Rule.R2, "ghost") in rules
    assert (Rule.R2, "obj2x") in rules
    assert (Rule.R4, "c2") in rules
    assert [r for r, _ in rules] == sorted(r for r, _ in rules)


def test_violation_text_format(minimal):
    model = SystemModel(minimal.objects + (SystemObject("obj3", "hardware"),), minimal.zones, minimal.conduits)
    (v,) = validate(model)
    assert str(v) == "R1 obj3: object is not allocated to any zone or conduit"


def test_structural_invariants():
    with pytest.raises(ModelError):
        Zone("z", set())
    with pytest.raises(ModelError):
        Conduit("c", {"a"}, ("z", "z"))
    with pytest.raises(ModelError):
        Conduit("c", {"a"}, ("z", "y", ENVIRONMENT))
    with pytest.raises(ModelError):
        SystemModel((SystemObject("a", "hardware"), SystemObject("a", "software")), (Zone("z", {"a"}),))
    with pytest.raises(ModelError):
        SystemModel((SystemObject("a", "hardware"),), (Zone(ENVIRONMENT, {"a"}),))


def test_zone_of(minimal):
    assert zone_of(minimal, "obj1") == "zoneA"
    assert zone_of(minimal, "obj2") == "conduitC"
    with pytest.raises(UnknownObjectError):
        zone_of(minimal, "nope")


def test_load_bundled_model(model_path):
    model = load_model(model_path)
    assert validate(model) == []
    assert len(model.zones) == 2
    assert sum(c.reaches_environment() for c in model.conduits) == 1


def test_model_dict_round_trip(model_path):
    model = load_model(model_path)
    again = SystemModel.from_dict(json.loads(json.dumps(model.to_dict())))
    assert again == model
    assert [c.assessment for c in again.containers] == [c.assessment for c in model.containers]


def test_model_file_missing_field():
    with pytest.raises(ModelError):
        SystemModel.from_dict({"objects": []})


def test_assigned_sl_parsed():
    model = SystemModel.from_dict(
        {
            "objects": [{"id": "a", "kind": "hardware"}],
            "zones": [{"id": "z", "members": ["a"], "assigned_sl": {"target": "(2,2,2,1,2,2,1)"}}],
        }
    )
    assert str(model.zones[0].assigned_sl[SLKind.TARGET]) == "(2,2,2,1,2,2,1)"


def _is_partition(model):
    sets = [c.members for c in model.containers]
    union = set().union(*sets)
    disjoint = sum(len(s) for s in sets) == len(union)
    return disjoint and union == model.object_ids


@pytest.mark.parametrize("seed", range(40))
def test_random_models_partition_and_mutations(seed):
    rng = random.Random(seed)
    model = random_valid_model(rng)
    assert validate(model) == []
    assert validate(model) == validate(model)
    assert _is_partition(model)
    for o in model.objects:
        assert o.id in model.container(zone_of(model, o.id)).members

    dup, oid = duplicate_membership(model, rng)
    assert [(v.rule, v.id) for v in validate(dup)] == [(Rule.R1, oid)]

    orphaned, oid = orphan_object(model, rng)
    assert [(v.rule, v.id) for v in validate(orphaned)] == [(Rule.R1, oid)]

    assert [v.rule for v in validate(remove_environment_conduits(model))] == [Rule.R3]
