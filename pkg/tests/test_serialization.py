"""Round-trip and determinism checks for the JSON formats."""

import json

import pytest

from groupoid_lab.base import (
    FINAB,
    FINSET,
    DiagramError,
    finptdset_object,
    finset_object,
    identity,
    morphism_from_function,
    zmod,
)
from groupoid_lab.groupoid import (
    cyclic_delooping,
    discrete_groupoid,
    groupoid_from_arrow,
    identity_cell,
    identity_functor,
    indiscrete_groupoid,
)
from groupoid_lab.holim import arrow_groupoid
from groupoid_lab.arrow import ArrowMorphism, Diagonal, arrow_object
from groupoid_lab.serialize import (
    from_json,
    groupoid_from_data,
    groupoid_to_data,
    object_from_data,
    object_to_data,
    to_json,
    value_from_data,
    value_to_data,
)


def doubling_arrow():
    return morphism_from_function(zmod(2), zmod(4), lambda n: 2 * n)


class TestBaseRoundTrips:
    def test_object_formats(self):
        for obj in (finset_object(["p", "q"]),
                    finptdset_object(["*", "x", "y"]), zmod(6)):
            data = object_to_data(obj)
            assert set(data) == {"instance", "carrier", "structure"}
            assert object_from_data(data) == obj

    def test_structure_fields(self):
        data = object_to_data(zmod(3))
        assert data["structure"]["zero"] == 0
        assert data["structure"]["add"][1][2] == 0
        pointed = object_to_data(finptdset_object(["*", "x"]))
        assert pointed["structure"] == {"basepoint": 0}
        assert object_to_data(finset_object([0]))["structure"] == {}

    def test_morphism_map_is_index_level(self):
        data = value_to_data(doubling_arrow())
        assert data["map"] == [0, 2]
        assert value_from_data(data) == doubling_arrow()

    def test_nested_carriers_restore_tuples(self):
        ag = arrow_groupoid(cyclic_delooping(FINSET, 3))
        assert from_json(to_json(ag.groupoid)) == ag.groupoid


class TestStructureRoundTrips:
    def test_groupoid(self):
        g = groupoid_from_arrow(doubling_arrow())
        data = groupoid_to_data(g)
        assert set(data) == {"B0", "B1", "d", "c", "e", "m", "i"}
        assert groupoid_from_data(data) == g

    def test_groupoid_families(self):
        for g in (cyclic_delooping(FINAB, 4),
                  discrete_groupoid(finset_object(["p", "q"])),
                  indiscrete_groupoid(finptdset_object(["*", "u"]))):
            assert from_json(to_json(g)) == g

    def test_functor_and_cell(self):
        fun = identity_functor(groupoid_from_arrow(doubling_arrow()))
        assert from_json(to_json(fun)) == fun
        cell = identity_cell(fun)
        assert from_json(to_json(cell)) == cell

    def test_arrow_values(self):
        delta = doubling_arrow()
        obj = arrow_object(delta)
        sq = ArrowMorphism(obj, arrow_object(identity(zmod(4))), delta,
                           identity(zmod(4)))
        diag = Diagonal(sq, identity(zmod(4)))
        for value in (obj, sq, diag):
            assert from_json(to_json(value)) == value


class TestDeterminismAndErrors:
    def test_equal_values_equal_bytes(self):
        one = to_json(groupoid_from_arrow(doubling_arrow()))
        two = to_json(from_json(one))
        assert one == two

    def test_keys_are_sorted(self):
        data = json.loads(to_json(zmod(2)))
        assert list(data) == sorted(data)

    def test_malformed_json_is_a_diagram_error(self):
        with pytest.raises(DiagramError):
            from_json("{not json")

    def test_unrecognized_shape_is_rejected(self):
        with pytest.raises(DiagramError):
            value_from_data({"mystery": 1})
        with pytest.raises(DiagramError):
            value_from_data([1, 2])

    def test_structural_validation_still_runs_on_load(self):
        data = value_to_data(doubling_arrow())
        data["map"] = [0, 9]
        with pytest.raises(DiagramError):
            value_from_data(data)
