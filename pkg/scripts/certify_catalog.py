#!/usr/bin/env python3
"""Run every axiom checker over the whole catalog and print one line per
fixture; optionally re-run everything at a numeric parameter point."""

import argparse
import sys
import time
from fractions import Fraction

from oqa.catalog import catalog_get
from oqa.hopf import check_hopf, check_quasitriangular, check_weak_rmatrix
from oqa.nonuple import check_nonuple, derived_identities
from oqa.oriented import check_oqa, check_ybe_alt

OQA_FIXTURES = [
    "mn_oqa(2)", "mn_oqa(3)", "ex45_H_oqa", "ex45_Hprime_oqa",
    "trivial_oqa(K)", "trivial_oqa(M2)", "trivial_oqa(KZ2)",
]
NONUPLE_FIXTURES = ["ex34_nonuple_case1", "ex34_nonuple_case2", "ex45_nonuple"]
HOPF_FIXTURES = ["sweedler4_hopf", "kz2_hopf"]


def show(name, passed, elapsed):
    status = "pass" if passed else "FAIL"
    print(f"{status}  {name:28s} ({elapsed:6.2f}s)")
    return passed


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--set", action="append", metavar="NAME=RATIONAL", default=[])
    args = parser.parse_args()
    assignment = {}
    for pair in args.set:
        name, _, value = pair.partition("=")
        assignment[name.strip()] = Fraction(value.strip())

    ok = True
    for name in OQA_FIXTURES:
        candidate = catalog_get(name).object
        if assignment:
            candidate = candidate.substitute(assignment)
        started = time.perf_counter()
        report = check_oqa(candidate)
        agree = check_ybe_alt(candidate) == {
            v.axiom: v.passed for v in report.verdicts
        }["yang-baxter"]
        ok &= show(name, report.passed and agree, time.perf_counter() - started)

    for name in NONUPLE_FIXTURES:
        bundle = catalog_get(name).object
        if assignment:
            bundle = bundle.substitute(assignment)
        started = time.perf_counter()
        report = check_nonuple(bundle)
        passed = report.passed and derived_identities(bundle).passed
        ok &= show(name, passed, time.perf_counter() - started)

    for name in HOPF_FIXTURES:
        fixture = catalog_get(name)
        hopf = fixture.object
        coupling = fixture.aux["coupling"]
        if assignment:
            hopf = hopf.substitute(assignment)
            coupling = coupling.substitute(assignment)
        started = time.perf_counter()
        passed = check_hopf(hopf).passed
        passed = passed and check_quasitriangular(hopf, coupling).passed
        ok &= show(name, passed, time.perf_counter() - started)

    weak = catalog_get("ex45_weak_r")
    left, right, element = weak.aux["left"], weak.aux["right"], weak.object
    if assignment:
        left = left.substitute(assignment)
        right = right.substitute(assignment)
        element = element.substitute(assignment)
        check_hopf(left)
        check_hopf(right)
    started = time.perf_counter()
    report = check_weak_rmatrix(left, right, element)
    ok &= show("ex45_weak_r", report.passed, time.perf_counter() - started)

    print("all fixtures pass" if ok else "SOME FIXTURES FAILED")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
