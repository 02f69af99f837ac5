"""A star fibration that is not a fibration.

The zero functor from the trivial FinAb groupoid into the indiscrete
groupoid on Z2 cannot lift arrows (its tau map misses half the target),
yet its kernel-restricted comparison is an equivalence.  The registered
search suite rediscovers this example from nothing but the groupoid
catalog.
"""

from groupoid_lab.base import FINAB, zmod
from groupoid_lab.classify import (
    classify_fibration,
    classify_star_fibration,
    is_weak_equivalence,
)
from groupoid_lab.groupoid import (
    indiscrete_groupoid,
    zero_functor,
    zero_groupoid,
)
from groupoid_lab.holim import comparison_J_data, comparison_T
from groupoid_lab.harness import run_suite


def main():
    fun = zero_functor(zero_groupoid(FINAB),
                       indiscrete_groupoid(zmod(2)))
    print("hand-built witness: trivial groupoid -> indiscrete on Z2")
    print(f"  fibration label   {classify_fibration(fun)}")
    print(f"  star label        {classify_star_fibration(fun)}")
    print(f"  T weak equiv      {is_weak_equivalence(comparison_T(fun))}")
    print(f"  J weak equiv      "
          f"{is_weak_equivalence(comparison_J_data(fun).functor)}")

    report = run_suite("star-not-fibration-search", FINAB, 200, 0)
    print(f"search suite: {len(report.failures)} witnesses in "
          f"{report.cases} examined functors")
    first = report.failures[0]["witness"]["functor"]
    print(f"  first witness: {len(first['dom']['B1']['carrier'])} arrows -> "
          f"{len(first['cod']['B1']['carrier'])} arrows")


if __name__ == "__main__":
    main()
