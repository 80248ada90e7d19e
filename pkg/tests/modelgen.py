"""Random valid system models and single-fault mutations."""

import random

from tra.sysmodel import ENVIRONMENT, Conduit, SystemModel, SystemObject, Zone


def random_valid_model(rng: random.Random) -> SystemModel:
    n_zones = rng.randint(2, 5)
    zone_ids = [f"z{i}" for i in range(n_zones)]
    n_conduits = rng.randint(1, 4)
    conduit_ids = [f"c{i}" for i in range(n_conduits)]
    containers = zone_ids + conduit_ids
    n_objects = rng.randint(len(containers), len(containers) + 12)
    objects = [SystemObject(f"o{i}", rng.choice(["hardware", "software"])) for i in range(n_objects)]

    # every container gets one object, the rest are spread at random
    ids = [o.id for o in objects]
    rng.shuffle(ids)
    members = {c: {ids[k]} for k, c in enumerate(containers)}
    for oid in ids[len(containers):]:
        members[rng.choice(containers)].add(oid)

    conduits = []
    for k, cid in enumerate(conduit_ids):
        if k == 0:
            a, b = rng.choice(zone_ids), ENVIRONMENT
        else:
            a, b = rng.sample(zone_ids + [ENVIRONMENT], 2)
        conduits.append(Conduit(cid, members[cid], (a, b)))
    zones = [Zone(z, members[z]) for z in zone_ids]
    return SystemModel(tuple(objects), tuple(zones), tuple(conduits), name="random")


def duplicate_membership(model: SystemModel, rng: random.Random) -> tuple[SystemModel, str]:
    """Add an already-allocated object to a second zone."""
    src = rng.choice(model.containers)
    oid = rng.choice(sorted(src.members))
    dst = rng.choice([z for z in model.zones if z.id != src.id])
    zones = tuple(Zone(z.id, z.members | {oid}) if z.id == dst.id else z for z in model.zones)
    return SystemModel(model.objects, zones, model.conduits, model.name), oid


def orphan_object(model: SystemModel, rng: random.Random) -> tuple[SystemModel, str]:
    """Declare a new object without allocating it."""
    oid = f"orphan{rng.randint(0, 999)}"
    objects = model.objects + (SystemObject(oid, "software"),)
    return SystemModel(objects, model.zones, model.conduits, model.name), oid


def remove_environment_conduits(model: SystemModel) -> SystemModel:
    """Drop every conduit that reaches the environment, together with its objects."""
    gone = [c for c in model.conduits if c.reaches_environment()]
    dropped = set().union(*(c.members for c in gone))
    objects = tuple(o for o in model.objects if o.id not in dropped)
    conduits = tuple(c for c in model.conduits if not c.reaches_environment())
    return SystemModel(objects, model.zones, conduits, model.name)
