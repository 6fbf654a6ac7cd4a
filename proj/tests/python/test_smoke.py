#!/usr/bin/env python3
"""Smoke tests for the openbook_rho Python module."""

import math
import sys

import openbook_rho as ob

FAILURES = []


def check(name, condition, detail=""):
    if condition:
        print(f"ok: {name}")
    else:
        FAILURES.append(name)
        print(f"FAIL: {name} {detail}")


def check_eq(name, actual, expected):
    check(name, actual == expected, f"(got {actual!r}, expected {expected!r})")


def witt(m, k):
    """Independent necklace count for the cross-checks below."""

    def mu(n):
        result, p = 1, 2
        while p * p <= n:
            if n % p == 0:
                n //= p
                if n % p == 0:
                    return 0
                result = -result
            p += 1
        if n > 1:
            result = -result
        return result

    total = sum(mu(d) * m ** (k // d) for d in range(1, k + 1) if k % d == 0)
    assert total % k == 0
    return total // k


def main():
    check_eq("witt_number(2, 5)", ob.witt_number(2, 5), 6)
    check_eq("moebius(30)", ob.moebius(30), -1)
    check_eq("default truncation", ob.DEFAULT_TRUNCATION, 40)

    lie = ob.free_lie_ranks({2: 2}, truncation=12)
    check_eq("free_lie_ranks on two even generators", lie,
             {2: 2, 4: 1, 6: 2, 8: 3, 10: 6, 12: 9})

    check_eq("sphere ranks", ob.space_ranks(ob.sphere(4), truncation=10), {4: 1, 7: 1})
    check_eq("loop ranks", ob.loop_ranks(ob.sphere(3), truncation=10), {2: 1})
    check_eq("suspension", ob.suspend(ob.sphere(3), k=2), {"kind": "sphere", "dim": 5})
    check("wedge is hyperbolic", not ob.is_rationally_elliptic(ob.wedge(3, 3)))
    check("sphere is elliptic", ob.is_rationally_elliptic(ob.sphere(6)))

    # Exactness past 64 bits: the degree-80 component on a 16-letter alphabet.
    big = ob.free_lie_ranks({2: 16}, truncation=80)
    check_eq("big lie rank", big[80], witt(16, 40))
    check("big lie rank exceeds 64 bits", big[80] > 2**64)

    spec = ob.openbook_spec(
        ambient_dim=5,
        page=ob.contractible(),
        fibre=ob.sphere(3),
        monodromy=ob.identity_monodromy(),
    )
    check_eq("valid spec has no violations", ob.validate(spec), [])
    check_eq("trivial open book ranks", ob.homotopy_ranks(spec), {5: 1})
    verdict = ob.classify(spec)
    check("trivial open book is elliptic", "elliptic" in verdict, str(verdict))
    check_eq("fibre sphere dimension", verdict["elliptic"]["l"], 3)

    unverified = ob.openbook_spec(ambient_dim=5, page=ob.contractible(), fibre=ob.sphere(3))
    check_eq("unverified monodromy violation",
             [v["code"] for v in ob.validate(unverified)], ["monodromy_unverified"])
    try:
        ob.homotopy_ranks(unverified)
        check("unverified spec raises", False)
    except ValueError:
        check("unverified spec raises", True)

    stuck = ob.classify(unverified)
    check("unverified verdict withheld", "not_classifiable" in stuck, str(stuck))

    hyperbolic = ob.classify(
        ob.openbook_spec(
            ambient_dim=7,
            page=ob.wedge(3, 3),
            fibre=ob.sphere(3),
            monodromy=ob.finite_order_monodromy(2, True),
        )
    )
    check_eq("hyperbolic reason", hyperbolic["hyperbolic"]["reason"], "page_hyperbolic")

    check_eq("brieskorn multiplicity", ob.brieskorn_multiplicity([3, 3, 3, 3]), 16)
    report = ob.monodromy_report([3, 2, 2, 2])
    check_eq("obstruction applies", report["obstruction"], True)
    check_eq("obstruction conclusions", len(report["conclusions"]), 3)

    milnor = ob.milnor_openbook_spec([3, 3, 3, 3])
    check_eq("milnor ambient dim", milnor["ambient_dim"], 7)
    check("milnor fibre unset", milnor.get("fibre") is None)
    check_eq("milnor page", ob.milnor_page(2, 3), {"kind": "wedge", "dims": [3, 3]})

    growth = ob.growth_estimate(ob.wedge(2, 3), truncation=40)
    golden = (1 + math.sqrt(5)) / 2
    check("golden growth base", abs(growth["growth_base"] - golden) < 1e-9,
          str(growth.get("growth_base")))

    check_eq("variation determinant", ob.variation_determinant([[2, 1], [1, 1]]), 1)
    check("variation iso", ob.variation_is_iso([[2, 1], [1, 1]]))
    check("zero variation not iso", not ob.variation_is_iso([[0]]))
    doubled = ob.boundary_connected_sum_variation([[2, 1], [1, 1]])
    check_eq("doubled variation",
             doubled, [[2, 1, 0, 0], [1, 1, 0, 0], [0, 0, 2, 1], [0, 0, 1, 1]])

    huge = 10**30
    check_eq("big determinant", ob.variation_determinant([[huge, 0], [0, huge]]), huge * huge)

    try:
        ob.space_ranks({"kind": "dodecahedron"})
        check("malformed document raises ValueError", False)
    except ValueError:
        check("malformed document raises ValueError", True)

    try:
        ob.free_lie_ranks({0: 1})
        check("bad generator degree raises", False)
    except ValueError:
        check("bad generator degree raises", True)

    check("grove-halperin agreement", ob.grove_halperin_test(True, True))

    if FAILURES:
        print(f"\n{len(FAILURES)} check(s) failed")
        return 1
    print("\nall python smoke checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
