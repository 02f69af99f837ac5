"""The fold square separates the two pointed instances.

Folding a two-point pointed set onto the point is a fibration square in
the arrow category, but its kernel comparison is not a weak equivalence:
the kernel and the section do not jointly cover the codomain.  In FinAb
no such square exists at all; the sweep below walks every small
fibration square and finds nothing.
"""

from groupoid_lab.arrow import (
    ArrowMorphism,
    ArrowObject,
    classify_arrow_morphism,
    comparison_J_arr,
)
from groupoid_lab.base import (
    FINAB,
    finptdset_object,
    identity,
    jointly_strongly_epi,
    morphism_from_function,
)
from groupoid_lab.harness import run_suite


def main():
    x2 = finptdset_object(["*", "x1"])
    pt = finptdset_object(["*"])
    fold = morphism_from_function(x2, pt, lambda v: "*")
    square = ArrowMorphism(ArrowObject(identity(x2)), ArrowObject(fold),
                           identity(x2), fold)
    flags = classify_arrow_morphism(square)
    print("fold square in FinPtdSet")
    for name in ("fibration", "fully_faithful", "essentially_surjective",
                 "weak_equivalence", "star_fibration"):
        print(f"  {name:<24} {flags[name]}")

    j = comparison_J_arr(square)
    print(f"  joint-epi oracle on J    "
          f"{jointly_strongly_epi([j.f0, j.cod.a])}")

    report = run_suite("protomodularity-char", FINAB, 500, 0)
    print(f"FinAb sweep: {report.cases} fibration squares, "
          f"{len(report.failures)} kernel comparison failures")


if __name__ == "__main__":
    main()
