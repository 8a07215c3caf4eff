"""Acceptance criteria 1-10, at exact equality.

Run directly (``python3 tests/test_acceptance.py``) or under pytest; either
way one PASS/FAIL line is printed per criterion.
"""

import contextlib
import io
import json
from functools import lru_cache

import pytest

from hilbmot import cli, grassmann, hilb, macmahon, reference as R
from hilbmot.grassmann import binom, proj
from hilbmot.hilb import MAX_D, hilb_punctual, p_poly, relation_d2_terms
from hilbmot.lpoly import LPoly, specialize_euler
from hilbmot.macmahon import partition_counts, pi_product, r_poly_check
from hilbmot.plethystic import hilb_variety, omega, omega_recursion_check, q_poly
from hilbmot.quot import (
    chi_rational_expansion,
    quot_omega,
    quot_series,
    quot_series_strata,
    quot_variety,
    u4_from_strata,
)
from hilbmot.series import BiSeries
from hilbmot.strata import y_class

D8 = range(1, MAX_D + 1)


def _cli_json(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        assert cli.main([*argv, "--format", "json"]) == 0
    return json.loads(buf.getvalue())["result"]["value"]


def _pd_from_cli(d):
    coeffs = _cli_json("pd", "--d", str(d))["coeffs"]
    return tuple(LPoly.from_json(c) for c in coeffs)


def c1():
    return {f"P_{d}": _pd_from_cli(d) == R.p_ref(d) for d in D8}


def c2():
    return {f"Hilb^{d}(A^{n})_0": hilb_punctual(d, n) == R.hilb_ref(d, n) for d, n in R.HILB_PUNCTUAL}


def c3():
    return {
        "omega-3": all(omega(d, 3) == R.lp(R.OMEGA_3[d]) for d in D8),
        "q-poly": all(q_poly(d).coeffs == R.q_ref(d) for d in D8),
        "omega-recursion": all(omega_recursion_check(d, m) for d in range(3, 9) for m in range(d, 11)),
    }


def c4():
    p3 = hilb_variety(proj(3), 3, 8)
    return {f"Hilb^{d}(P^3)": p3[d] == R.lp(R.HILB_P3[d]) for d in range(5, 9)}


def c5():
    out = {
        "closed-forms": all(quot_series(d, 6, 6) == quot_series_strata(d, 6, 6) for d in range(1, 5)),
        "u4": u4_from_strata(6, 6) == BiSeries(dict(R.U4_TERMS), 6, 6),
        "chi-rational": all(quot_series(d, 6, 6).euler() == chi_rational_expansion(d, 6, 6) for d in range(1, 5)),
    }
    for d in range(1, 5):
        out[f"omega-33-d{d}"] = quot_omega(d, 3, 3) == R.OMEGA_33[d]
    qp3 = quot_variety(proj(3), 3, 3, 4)
    for d in (2, 3, 4):
        out[f"Quot-P3-d{d}"] = qp3[d] == R.lp(R.QUOT_P3[d])
    return out


def c6():
    return dict(grassmann.invariants(12))


def c7():
    checks = dict(hilb.invariants())
    return {k: checks[k] for k in (
        "inversion-round-trip", "recursion-cross-path", "p-at-one", "p-degree",
        "d-2-relation", "stabilisation", "weight-congruence", "infinite",
    )}


def c8():
    counts = {n: partition_counts(n, 8) for n in range(1, 7)}
    return {
        "euler-vs-oracle": all(
            counts[n][d] == specialize_euler(hilb_punctual(d, n)) for n in counts for d in range(9)
        ),
        "pi-products": all(partition_counts(n, 9) == pi_product(n, 9) for n in (1, 2, 3)),
    }


def c9():
    checks = dict(macmahon.invariants())
    return {k: checks[k] for k in (
        "epsilon-small-d", "r-poly", "table-eps-mot", "table-e-mot",
        "bar-hilb-recursion", "bar-omega-recursion", "andrews",
    )}


def c10():
    # declared out of reach: only the embedded data and its d <= 8 overlap are checked
    return {
        "r-table-shape": sorted(R.R_POLYS) == list(range(6, 27))
        and all(len(R.R_POLYS[d][1]) == d - 5 and R.R_POLYS[d][0] > 0 for d in R.R_POLYS),
        "r-table-overlap": all(r_poly_check(d, 12) for d in (6, 7, 8)),
        "m-table-shape": sorted(R.M_POLYS) == [0, 1, 2],
    }


CRITERIA = {1: c1, 2: c2, 3: c3, 4: c4, 5: c5, 6: c6, 7: c7, 8: c8, 9: c9, 10: c10}


@lru_cache(maxsize=None)
def results(i):
    return CRITERIA[i]()


def report():
    lines = []
    for i in CRITERIA:
        bad = [k for k, ok in results(i).items() if not ok]
        lines.append(f"{'PASS' if not bad else 'FAIL'} criterion {i}" + (f" ({', '.join(bad)})" if bad else ""))
    return lines


MISPRINT = "printed Omega^{3,3}_4 is missing a factor [P^2]"


@pytest.mark.parametrize(
    "i", [pytest.param(i, marks=pytest.mark.xfail(strict=True, reason=MISPRINT)) if i == 5 else i for i in CRITERIA]
)
def test_criterion(i):
    bad = [k for k, ok in results(i).items() if not ok]
    assert not bad, bad


def test_criterion_5_fails_only_on_the_misprint():
    assert [k for k, ok in results(5).items() if not ok] == ["omega-33-d4"]


def test_quot_omega_33_d4_up_to_p2():
    assert quot_omega(4, 3, 3) == proj(2) * R.OMEGA_33[4]
    # and the computed value is the one consistent with the printed Quot_{P^3} classes
    assert results(5)["Quot-P3-d4"]


def test_d2_relation_uses_printed_class():
    # the leading term is [P^{C(d-2,2)-1}], not the Y-class of the same name
    for d in range(5, 9):
        assert relation_d2_terms(d) + y_class(d - 2, d).shift(d - 2) != 0
        assert (relation_d2_terms(d) + proj(binom(d - 2, 2) - 1).shift(d - 2)).is_zero()


def test_print_report(capsys):
    lines = report()
    with capsys.disabled():
        print()
        for line in lines:
            print(line)
    assert len(lines) == 10


if __name__ == "__main__":
    print("\n".join(report()))
