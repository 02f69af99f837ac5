"""A first walk through the package.

Builds one groupoid per base instance, validates it, computes components
and loops, and round-trips a value through the JSON format.
"""

from groupoid_lab.base import (
    finptdset_object,
    finset_object,
    morphism_from_function,
    zmod,
)
from groupoid_lab.classify import classification_report
from groupoid_lab.groupoid import (
    action_groupoid,
    delooping,
    identity_functor,
    indiscrete_groupoid,
    pi0,
    pi1,
    validate_groupoid,
)
from groupoid_lab.serialize import from_json, to_json, value_to_data


def main():
    # FinSet: the action groupoid of a 3-cycle on four points; a3 is fixed,
    # so the groupoid has two connected components
    points = finset_object(["a0", "a1", "a2", "a3"])
    cycle = morphism_from_function(
        points, points,
        lambda v: {"a0": "a1", "a1": "a2", "a2": "a0", "a3": "a3"}[v])
    orbit = action_groupoid(cycle)
    components, _ = pi0(orbit)
    print(f"action groupoid: {orbit.B0.size} objects, "
          f"{orbit.B1.size} arrows, axioms {validate_groupoid(orbit)!r}, "
          f"{components.size} components")

    # FinAb: a delooping has one object and its loops are the whole group
    loop_space = delooping(zmod(6))
    loops, _ = pi1(loop_space)
    print(f"delooping of Z6: {loop_space.B1.size} arrows, "
          f"pi1 carrier size {loops.size}")

    # FinPtdSet: the indiscrete groupoid on a pointed set is contractible
    blob = indiscrete_groupoid(finptdset_object(["*", "x1", "x2"]))
    blob_components, _ = pi0(blob)
    print(f"indiscrete pointed groupoid: {blob.B1.size} arrows, "
          f"{blob_components.size} component(s)")

    # every value serializes to deterministic JSON and back
    text = to_json(loop_space)
    again = from_json(text)
    print(f"JSON round trip: {len(text)} bytes, "
          f"equal={value_to_data(again) == value_to_data(loop_space)}")

    # the identity functor carries every strong property
    report = classification_report(identity_functor(loop_space))
    true_flags = sorted(name for name, flag in report.flags.items() if flag)
    print("identity functor flags:", ", ".join(true_flags))


if __name__ == "__main__":
    main()
