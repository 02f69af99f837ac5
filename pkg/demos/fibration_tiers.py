"""Fibration tiers and the strict comparison functor.

Two collapse functors between deloopings separate the tiers: Z6 -> Z2
splits (a section exists because 2 and 3 are coprime), Z4 -> Z2 is a
fibration with no additive section.  The strict comparison functor T
detects exactly this difference: it is a weak equivalence for any
fibration and an honest equivalence only for the split ones.
"""

from groupoid_lab.base import classify_morphism, zmod
from groupoid_lab.classify import (
    classify_fibration,
    is_equivalence,
    is_weak_equivalence,
    tau_factorization,
)
from groupoid_lab.groupoid import delooping, functor
from groupoid_lab.holim import comparison_T


def collapse(k, l):
    dom, cod = delooping(zmod(k)), delooping(zmod(l))
    return functor(dom, cod, lambda x: 0, lambda x: x % l)


def main():
    for k, l in ((6, 2), (4, 2)):
        fun = collapse(k, l)
        tau = tau_factorization(fun, "d")
        flags = classify_morphism(tau)
        t = comparison_T(fun)
        print(f"Z{k} -> Z{l}")
        print(f"  label            {classify_fibration(fun)}")
        print(f"  tau split epi    {flags.split_epi}")
        print(f"  T weak equiv     {is_weak_equivalence(t)}")
        print(f"  T equivalence    {is_equivalence(t)}")


if __name__ == "__main__":
    main()
