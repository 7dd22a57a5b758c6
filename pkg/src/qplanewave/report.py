"""Structured results of identity suites, serialisable as JSON or CSV."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

import mpmath as mp

DIGITS = 25


def fmt(x, digits: int = DIGITS) -> str:
    return mp.nstr(mp.mpf(x), digits, min_fixed=1, max_fixed=0) if x != 0 else "0.0"


def _num_out(x):
    x = mp.mpmathify(x)
    if isinstance(x, mp.mpc):
        if x.imag == 0:
            return fmt(x.real)
        return {"re": fmt(x.real), "im": fmt(x.imag)}
    return fmt(x)


def _num_in(v):
    with mp.workdps(max(mp.mp.dps, DIGITS + 10)):
        if isinstance(v, dict):
            return mp.mpc(mp.mpf(v["re"]), mp.mpf(v["im"]))
        return mp.mpf(v)


@dataclass
class Case:
    case_id: str
    computed: object
    reference: object
    abs_err: object
    rel_err: object
    tol: float
    passed: bool
    expect_match: bool = True
    note: str = ""

    @classmethod
    def make(cls, case_id: str, computed, reference, tol, *, scale=None,
             expect_match: bool = True, note: str = "") -> "Case":
        """Compare ``computed`` with ``reference``.

        The error is taken relative to |reference|, or to ``scale`` when one is
        given (used for entries whose reference is zero).  With
        ``expect_match=False`` the case passes only if the values disagree.
        """
        computed, reference = mp.mpmathify(computed), mp.mpmathify(reference)
        abs_err = abs(computed - reference)
        if scale is not None:
            denom = abs(mp.mpmathify(scale))
        else:
            denom = abs(reference)
        rel_err = abs_err / denom if denom != 0 else abs_err
        ok = rel_err <= tol
        return cls(case_id, computed, reference, abs_err, rel_err, float(tol),
                   bool(ok if expect_match else not ok), expect_match, note)

    def as_dict(self) -> dict:
        return {
            "case_id": self.case_id,
            "computed": _num_out(self.computed),
            "reference": _num_out(self.reference),
            "abs_err": fmt(self.abs_err),
            "rel_err": fmt(self.rel_err),
            "tol": repr(self.tol),
            "pass": self.passed,
            "expect_match": self.expect_match,
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Case":
        return cls(d["case_id"], _num_in(d["computed"]), _num_in(d["reference"]),
                   _num_in(d["abs_err"]), _num_in(d["rel_err"]), float(d["tol"]),
                   bool(d["pass"]), bool(d.get("expect_match", True)), d.get("note", ""))


@dataclass
class Report:
    suite_name: str
    parameters: dict = field(default_factory=dict)
    cases: list = field(default_factory=list)
    provenance: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def add(self, case: Case) -> Case:
        self.cases.append(case)
        return case

    def sorted_cases(self) -> list:
        return sorted(self.cases, key=lambda c: c.case_id)

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def max_rel_err(self):
        errs = [c.rel_err for c in self.cases if c.expect_match]
        return max(errs) if errs else mp.mpf(0)

    def failures(self) -> list:
        return [c for c in self.sorted_cases() if not c.passed]

    def as_dict(self) -> dict:
        return {
            "suite_name": self.suite_name,
            "parameters": {k: str(v) for k, v in self.parameters.items()},
            "cases": [c.as_dict() for c in self.sorted_cases()],
            "summary": {"max_rel_err": fmt(self.max_rel_err), "all_pass": self.all_pass},
            "provenance": {k: str(v) for k, v in self.provenance.items()},
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        d = json.loads(text)
        return cls(d["suite_name"], dict(d.get("parameters", {})),
                   [Case.from_dict(c) for c in d.get("cases", [])],
                   dict(d.get("provenance", {})), list(d.get("notes", [])))

    _CSV_COLUMNS = ["case_id", "computed_re", "computed_im", "reference_re", "reference_im",
                    "abs_err", "rel_err", "tol", "pass", "expect_match", "note"]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self._CSV_COLUMNS)
        for c in self.sorted_cases():
            comp, ref = mp.mpc(c.computed), mp.mpc(c.reference)
            w.writerow([c.case_id, fmt(comp.real), fmt(comp.imag), fmt(ref.real), fmt(ref.imag),
                        fmt(c.abs_err), fmt(c.rel_err), repr(c.tol), int(c.passed),
                        int(c.expect_match), c.note])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, suite_name: str = "") -> "Report":
        rep = cls(suite_name)
        for r in csv.DictReader(io.StringIO(text)):
            def cplx(prefix):
                re_, im_ = _num_in(r[prefix + "_re"]), _num_in(r[prefix + "_im"])
                return re_ if im_ == 0 else mp.mpc(re_, im_)
            rep.cases.append(Case(r["case_id"], cplx("computed"), cplx("reference"),
                                  _num_in(r["abs_err"]), _num_in(r["rel_err"]), float(r["tol"]),
                                  r["pass"] == "1", r["expect_match"] == "1", r["note"]))
        return rep

    def summary_line(self) -> str:
        status = "PASS" if self.all_pass else "FAIL"
        return (f"{status} {self.suite_name}: {len(self.cases)} cases, "
                f"max_rel_err={mp.nstr(self.max_rel_err, 3)}")
