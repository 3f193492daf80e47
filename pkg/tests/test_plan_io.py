import json
import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tricover import methods
from tricover.geometry import CoveringPlan, Method, Placement
from tricover.plan_io import (
    PlanFormatError,
    dumps,
    load,
    loads,
    parse_rational,
    plan_to_dict,
    save,
)


def test_document_shape():
    doc = plan_to_dict(methods.odd_cover(3, F(2, 3), 3))
    assert doc["version"] == 1 and doc["d"] == "2/3" and doc["method"] == "odd_basic"
    assert doc["j"] == 3 and doc["count"] == 14 == len(doc["placements"])
    assert doc["placements"][-4] == {"o": "D", "x": "1/3", "y": "2/3"}
    assert all(isinstance(v, str) for p in doc["placements"] for k, v in p.items())


def test_round_trip_many_random_placements(tmp_path):
    rng = random.Random(0)

    def r():
        return F(rng.randint(-10**12, 10**12), rng.randint(1, 10**9))

    placements = [Placement.up(r(), r()) if rng.random() < 0.5 else Placement.down(r(), r()) for _ in range(100_000)]
    plan = CoveringPlan(placements, 7, F(3, 11), Method.CONSOLIDATED)
    path = tmp_path / "big.json"
    save(plan, path)
    assert load(path) == plan


@given(st.lists(st.tuples(st.booleans(), st.fractions(), st.fractions()), max_size=30), st.fractions(0, 1).filter(lambda d: d < 1))
def test_round_trip_is_identity_on_canonical_form(items, d):
    plan = CoveringPlan([(Placement.up if u else Placement.down)(x, y) for u, x, y in items], 3, d, Method.GRID)
    text = dumps(plan)
    assert loads(text) == plan
    assert dumps(loads(text)) == text


@pytest.mark.parametrize("text,value", [("2/3", F(2, 3)), ("0.3", F(3, 10)), ("4", F(4)), ("6/4", F(3, 2)), ("-.25", F(-1, 4))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1e-3", "inf", "0x1", "1/0", "", "3/-4", 0.5])
def test_parse_rational_rejects(text):
    with pytest.raises(PlanFormatError):
        parse_rational(text)


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.update(version=2),
        lambda d: d.update(count=3),
        lambda d: d.pop("placements"),
        lambda d: d["placements"][0].update(o="X"),
        lambda d: d["placements"][0].update(x=0.5),
        lambda d: d.update(method="best"),
        lambda d: d.update(n="3"),
        lambda d: d.update(d="5/4"),
    ],
)
def test_malformed_documents(mutate):
    doc = plan_to_dict(methods.grid_cover(2))
    mutate(doc)
    with pytest.raises(PlanFormatError):
        loads(json.dumps(doc))


def test_not_json():
    with pytest.raises(PlanFormatError):
        loads("{nope")
