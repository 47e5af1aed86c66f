"""Command-line front end.

Algebras travel as JSON documents with rationals written as "p/q"
strings.  Verdict reports embed the algebra and every certificate, so
``verify-report`` can re-check them with exact arithmetic and no search.

Exit codes: 0 Exists, 1 NotExists, 2 Unknown, 3 parse error,
4 invalid input (Jacobi, missing J, bad parameters).
"""
from __future__ import annotations

import argparse
import hashlib
import json
import re
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import catalog as cat
from . import cxstruct as cx
from . import decide as dc
from . import linalg as la
from . import weights as wt
from .exterior import Form, evaluate, mask_of, monomials
from .liecore import LieAlgebra, LieError, Subspace, is_unimodular

SCHEMA = "tamesolv.algebra/1"
REPORT_SCHEMA = "tamesolv.report/1"
DEFAULT_TOL = 1e-9

EXIT_EXISTS = 0
EXIT_NOT_EXISTS = 1
EXIT_UNKNOWN = 2
EXIT_PARSE = 3
EXIT_INPUT = 4

VERDICT_EXIT = {"Exists": EXIT_EXISTS, "NotExists": EXIT_NOT_EXISTS, "Unknown": EXIT_UNKNOWN}


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None,
                 path: str | None = None):
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.column = column
        self.path = path


class MissingJ(LieError):
    pass


# -- rationals ------------------------------------------------------------------------

_RATIONAL = re.compile(r"-?\d+(/\d+)?\Z")


def fmt(x) -> str:
    return str(Fraction(x))


def _locate(text: str | None, token) -> tuple[int | None, int | None]:
    """Best-effort line/column of the first occurrence of a JSON token."""
    if text is None:
        return None, None
    pos = text.find(json.dumps(token))
    if pos < 0:
        return None, None
    line = text.count("\n", 0, pos) + 1
    return line, pos - (text.rfind("\n", 0, pos) + 1) + 1


def _fail(message: str, path: str, text: str | None, token=None):
    line, col = _locate(text, token) if token is not None else (None, None)
    raise ParseError(f"{path}: {message}", line, col, path)


def parse_rational(s, path: str = "", text: str | None = None) -> Fraction:
    if not isinstance(s, str) or not _RATIONAL.match(s):
        _fail(f"expected an exact rational string like \"-3/4\", got {s!r}", path, text, s)
    try:
        return Fraction(s)
    except ZeroDivisionError:
        _fail("zero denominator", path, text, s)


def _int(x, path, text, lo=0, hi=None) -> int:
    if not isinstance(x, int) or isinstance(x, bool) or x < lo or (hi is not None and x >= hi):
        _fail(f"expected an integer in [{lo}, {hi})", path, text, x)
    return x


# -- algebra documents ----------------------------------------------------------------

@dataclass
class AlgebraDocument:
    g: LieAlgebra
    J: list | None = None
    subspaces: dict = field(default_factory=dict)  # name -> list of coefficient tuples
    name: str | None = None

    @classmethod
    def from_entry(cls, entry: cat.CatalogEntry) -> "AlgebraDocument":
        subs = {k: [tuple(v) for v in s.basis] for k, s in entry.subspaces.items()}
        return cls(entry.g, entry.J, subs, entry.id)

    def subspace(self, name: str) -> Subspace | None:
        if name not in self.subspaces:
            return None
        return self.g.span(self.subspaces[name])

    def to_json(self) -> dict:
        g = self.g
        brackets = []
        for (i, j), terms in sorted(g.structure_constants().items()):
            brackets.append({"i": i, "j": j,
                             "terms": [{"k": k, "coeff": fmt(c)} for k, c in sorted(terms.items())]})
        out = {"schema": SCHEMA}
        if self.name is not None:
            out["name"] = self.name
        out["dimension"] = g.dim
        out["basis"] = list(g.names)
        out["brackets"] = brackets
        if self.J is not None:
            out["J"] = [[fmt(x) for x in row] for row in self.J]
        if self.subspaces:
            out["subspaces"] = {k: [[fmt(x) for x in v] for v in vs]
                                for k, vs in sorted(self.subspaces.items())}
        return out

    @classmethod
    def from_json(cls, data, text: str | None = None) -> "AlgebraDocument":
        if not isinstance(data, dict):
            _fail("top level must be an object", "$", text)
        if data.get("schema") != SCHEMA:
            _fail(f"schema must be {SCHEMA!r}", "$.schema", text, data.get("schema"))
        n = _int(data.get("dimension"), "$.dimension", text)
        names = data.get("basis", [f"e{i + 1}" for i in range(n)])
        if not isinstance(names, list) or len(names) != n or not all(isinstance(x, str) for x in names):
            _fail(f"basis must list {n} names", "$.basis", text)
        raw = data.get("brackets", [])
        if not isinstance(raw, list):
            _fail("brackets must be a list", "$.brackets", text)
        br: dict = {}
        for t, b in enumerate(raw):
            p = f"$.brackets[{t}]"
            if not isinstance(b, dict):
                _fail("bracket must be an object", p, text)
            i = _int(b.get("i"), p + ".i", text, 0, n)
            j = _int(b.get("j"), p + ".j", text, 0, n)
            if i == j:
                _fail("i and j must differ", p, text)
            terms = b.get("terms", [])
            if not isinstance(terms, list):
                _fail("terms must be a list", p + ".terms", text)
            row = br.setdefault((i, j), {})
            for u, term in enumerate(terms):
                q = f"{p}.terms[{u}]"
                if not isinstance(term, dict):
                    _fail("term must be an object", q, text)
                k = _int(term.get("k"), q + ".k", text, 0, n)
                row[k] = row.get(k, 0) + parse_rational(term.get("coeff"), q + ".coeff", text)
        g = LieAlgebra(n, br, names)
        J = None
        if data.get("J") is not None:
            rows = data["J"]
            if not isinstance(rows, list) or len(rows) != n or any(
                    not isinstance(r, list) or len(r) != n for r in rows):
                _fail(f"J must be a {n}x{n} row-major matrix", "$.J", text)
            J = [[parse_rational(x, f"$.J[{r}][{c}]", text) for c, x in enumerate(row)]
                 for r, row in enumerate(rows)]
        subs = {}
        for key, vs in (data.get("subspaces") or {}).items():
            p = f"$.subspaces.{key}"
            if not isinstance(vs, list) or any(not isinstance(v, list) or len(v) != n for v in vs):
                _fail(f"subspace must be a list of length-{n} vectors", p, text)
            subs[key] = [tuple(parse_rational(x, f"{p}[{a}][{b}]", text) for b, x in enumerate(v))
                         for a, v in enumerate(vs)]
        return cls(g, J, subs, data.get("name"))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def emit_document(doc: AlgebraDocument) -> str:
    return dumps(doc.to_json())


def parse_document(text: str) -> AlgebraDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    return AlgebraDocument.from_json(data, text)


def digest(doc_json: dict) -> str:
    canon = json.dumps(doc_json, sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(canon.encode()).hexdigest()


# -- forms and verdicts as JSON -----------------------------------------------------------

def form_to_json(f: Form) -> dict:
    return {"degree": f.degree,
            "terms": [{"indices": list(idx), "coeff": fmt(c)} for idx, c in sorted(f.terms())]}


def form_from_json(d: dict, n: int) -> Form:
    return Form(n, d["degree"], {mask_of(t["indices"]): parse_rational(t["coeff"]) for t in d["terms"]})


def _matrix_json(m) -> list:
    return [[fmt(x) for x in row] for row in m]


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, Fraction):
        return fmt(obj)
    return obj


def verdict_to_json(v, space: dc.FormSpace | None = None) -> dict:
    out = {"kind": v.kind, "problem": v.problem, "notes": _plain(v.notes)}
    if isinstance(v, dc.Exists):
        out["certificate"] = {"witness": form_to_json(v.witness), "gram": _matrix_json(v.gram),
                              "minors": [fmt(x) for x in v.minors]}
    elif isinstance(v, dc.NotExists):
        if v.direction is None:
            cert = {"dual_witness": _matrix_json(v.dual_witness), "reason": v.reason}
        else:
            cert = {"direction": [fmt(x) for x in v.direction],
                    "evaluations": [fmt(x) for x in v.evaluations], "reason": v.reason}
        if space is not None:
            cert["space_basis"] = [form_to_json(f) for f in space.basis]
        out["certificate"] = cert
    else:
        out["diagnostics"] = _plain(v.diagnostics)
    return out


# -- independent certificate checks ---------------------------------------------------------

CONDITION = {"taming": "closed", "skt": "ddc_closed_11"}


def _condition_image(g: LieAlgebra, J, problem: str, f: Form) -> Form:
    if problem == "taming":
        return g.d(f)
    return cx.ddc(g, J, f, warn=False)


def _space_dimension(g: LieAlgebra, J, problem: str) -> int:
    """dim of the form space, recomputed as (#sources - rank of the images)."""
    n = g.dim
    if problem == "taming":
        sources = [Form(n, 2, {m: 1}) for m in monomials(n, 2)] if n >= 2 else []
    else:
        sources = cx.real_11_basis(J)
    images = [dict(_condition_image(g, J, problem, f).items()) for f in sources]
    degree = 3 if problem == "taming" else 4
    return len(sources) - len(la.sparse_rref(images, monomials(n, degree) if n >= degree else []))


def _gram(J, f: Form) -> list[list]:
    n = len(J)
    cols = [tuple(J[r][c] for r in range(n)) for c in range(n)]
    e = [tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n)]
    return [[(evaluate(f, e[i], cols[j]) + evaluate(f, e[j], cols[i])) / 2 for j in range(n)]
            for i in range(n)]


def verify_verdict(g: LieAlgebra, J, v: dict) -> tuple[bool, str]:
    """Re-check one serialized verdict; returns (ok, message)."""
    problem = v["problem"]
    kind = v["kind"]
    n = g.dim
    if kind == "Unknown":
        return True, "no certificate to check"
    cert = v["certificate"]
    if kind == "Exists":
        w = form_from_json(cert["witness"], n)
        if _condition_image(g, J, problem, w):
            return False, "witness fails the defining condition"
        if problem == "skt" and cx.J_star(J, w) != w:
            return False, "witness is not of type (1,1)"
        s = _gram(J, w)
        if _matrix_json(s) != cert["gram"]:
            return False, "embedded Gram matrix does not match the witness"
        minors = la.leading_minors(s)
        if not all(m > 0 for m in minors):
            return False, "Gram matrix is not positive definite"
        return True, "witness verified: leading minors positive"
    if kind == "NotExists":
        if "direction" in cert:
            x = tuple(parse_rational(t) for t in cert["direction"])
            if len(x) != n or not any(x):
                return False, "direction must be a nonzero vector"
        else:
            y = [[parse_rational(t) for t in row] for row in cert["dual_witness"]]
            if len(y) != n or any(len(r) != n for r in y):
                return False, "dual witness must be n x n"
        basis = [form_from_json(f, n) for f in cert.get("space_basis", [])]
        for f in basis:
            if _condition_image(g, J, problem, f):
                return False, "space basis element fails the defining condition"
            if problem == "skt" and cx.J_star(J, f) != f:
                return False, "space basis element is not of type (1,1)"
        if len(la.sparse_rref([dict(f.items()) for f in basis], monomials(n, 2))) != len(basis):
            return False, "space basis is dependent"
        if len(basis) != _space_dimension(g, J, problem):
            return False, "space basis does not span the whole form space"
        if "direction" not in cert:
            if not any(any(r) for r in y) or any(y[i][j] != y[j][i] for i in range(n) for j in range(i)):
                return False, "dual witness must be a nonzero symmetric matrix"
            if not la.is_positive_semidefinite(y):
                return False, "dual witness is not positive semidefinite"
            for f in basis:
                s = _gram(J, f)
                if sum(s[i][j] * y[i][j] for i in range(n) for j in range(n)):
                    return False, "dual witness is not orthogonal to some Gram matrix"
            return True, f"dual witness verified against {len(basis)} basis forms"
        jx = la.matvec(J, x)
        if any(evaluate(f, x, jx) for f in basis):
            return False, "some basis form is nonzero on (X, JX)"
        return True, f"direction verified against {len(basis)} basis forms"
    return False, f"unknown verdict kind {kind!r}"


def verify_report(report: dict) -> list[tuple[str, bool, str]]:
    if report.get("schema") != REPORT_SCHEMA:
        raise ParseError(f"report schema must be {REPORT_SCHEMA!r}")
    out = []
    if digest(report["algebra"]) != report.get("input_digest"):
        out.append(("digest", False, "input digest does not match the embedded algebra"))
    try:
        doc = AlgebraDocument.from_json(report["algebra"])
    except LieError as e:
        return out + [("algebra", False, f"embedded algebra is invalid: {e}")]
    for problem, v in sorted(report.get("verdicts", {}).items()):
        if doc.J is None:
            out.append((problem, False, "report has a verdict but no J"))
            continue
        out.append((problem, *verify_verdict(doc.g, doc.J, v)))
    return out


# -- facts and reports ----------------------------------------------------------------------

def structure_facts(g: LieAlgebra, J=None) -> dict:
    n = g.dim
    facts = {
        "dimension": n,
        "jacobi": True,
        "solvable": g.is_solvable(),
        "nilpotent": g.is_nilpotent(),
        "unimodular": is_unimodular(g),
        "derived_series": [s.dim for s in g.derived_series],
        "lower_central_series": [s.dim for s in g.lower_central_series],
    }
    if facts["solvable"]:
        nil = g.nilradical
        facts["nilradical"] = [[fmt(x) for x in v] for v in nil.basis]
        facts["almost_abelian"] = nil.dim == n - 1 and nil.is_abelian()
        facts["type_I"] = wt.is_type_I(g)
    else:
        facts["nilradical"] = None
        facts["almost_abelian"] = False
        facts["type_I"] = None
    if J is not None:
        facts["integrable"] = cx.is_integrable(g, J)
        facts["abelian_J"] = cx.is_abelian_J(g, J)
    return facts


def _decide(doc: AlgebraDocument, problem: str, seed: int, tol: float):
    if doc.J is None:
        raise MissingJ("the document has no complex structure J")
    f = dc.decide_taming if problem == "taming" else dc.decide_skt
    v = f(doc.g, doc.J, seed=seed, complement=doc.subspace("complement"), tol=tol)
    space = None
    if isinstance(v, dc.NotExists):
        space = dc.closed_two_forms(doc.g) if problem == "taming" else dc.ddc_closed_11_forms(doc.g, doc.J)
    return v, space


def make_report(doc: AlgebraDocument, problems: Sequence[str] = (), seed: int = 0,
                tol: float = DEFAULT_TOL) -> dict:
    t0 = time.perf_counter()
    alg = doc.to_json()
    facts = structure_facts(doc.g, doc.J)
    verdicts = {}
    for p in problems:
        v, space = _decide(doc, p, seed, tol)
        verdicts[p] = verdict_to_json(v, space)
    return {
        "schema": REPORT_SCHEMA,
        "input_digest": digest(alg),
        "algebra": alg,
        "facts": facts,
        "verdicts": verdicts,
        "seed": seed,
        "tol": tol,
        "timing": {"seconds": round(time.perf_counter() - t0, 3)},
    }


def render_text(report: dict) -> str:
    alg = report["algebra"]
    lines = [f"algebra: {alg.get('name') or '(unnamed)'}  dim {alg['dimension']}  {report['input_digest']}"]
    for k, v in report["facts"].items():
        if k == "nilradical":
            v = "none" if v is None else f"dim {len(v)}"
        lines.append(f"  {k}: {v}")
    for p, v in report["verdicts"].items():
        lines.append(f"{p}: {v['kind']}")
        cert = v.get("certificate", {})
        if v["kind"] == "Exists":
            terms = " + ".join(f"({t['coeff']}) e^{''.join(str(i + 1) for i in t['indices'])}"
                               for t in cert["witness"]["terms"])
            lines.append(f"  witness: {terms}")
        elif v["kind"] == "NotExists" and "direction" not in cert:
            lines.append(f"  PSD Y = {cert['dual_witness']} with <S, Y> = 0 "
                         f"for all {len(cert.get('space_basis', []))} basis forms")
        elif v["kind"] == "NotExists":
            lines.append(f"  direction X = ({', '.join(cert['direction'])}), Omega(X, JX) = 0 "
                         f"on all {len(cert.get('space_basis', []))} basis forms")
        else:
            lines.append(f"  diagnostics: {v['diagnostics']}")
    lines.append(f"seed {report['seed']}  tol {report['tol']}  {report['timing']['seconds']}s")
    return "\n".join(lines) + "\n"


# -- regression table -------------------------------------------------------------------------

@dataclass
class Row:
    id: str
    cells: list  # (key, expected, computed)
    certificates: list  # (problem, ok, message)
    seconds: float

    @property
    def match(self) -> bool:
        return all(e == c for _, e, c in self.cells) and all(ok for _, ok, _ in self.certificates)


def compute_expectation(entry: cat.CatalogEntry, key: str, verdicts: dict):
    g, J = entry.g, entry.J
    if key in ("taming", "skt"):
        return verdicts[key]["kind"]
    if key == "unimodular":
        return is_unimodular(g)
    if key == "type_I":
        return wt.is_type_I(g)
    if key == "abelian_J":
        return cx.is_abelian_J(g, J)
    if key == "thm11":
        s, h = entry.subspaces["s"], entry.subspaces["h"]
        return dc.check_thm11_hypotheses(g, s, h, J)["taming_obstructed"]
    if key == "prop51":
        return dc.check_prop51_hypothesis(g, entry.complement, J)
    raise KeyError(f"no rule to compute {key!r}")


def run_entry(entry: cat.CatalogEntry, seed: int = 0, tol: float = DEFAULT_TOL) -> Row:
    t0 = time.perf_counter()
    doc = AlgebraDocument.from_entry(entry)
    problems = [p for p in ("taming", "skt") if p in entry.expected]
    report = make_report(doc, problems, seed, tol)
    # round-trip through text so the checks see exactly what a file would hold
    certs = verify_report(json.loads(dumps(report)))
    cells = [(k, e.value, compute_expectation(entry, k, report["verdicts"]))
             for k, e in entry.expected.items()]
    return Row(entry.id, cells, certs, time.perf_counter() - t0)


def run_table(entries: Sequence[cat.CatalogEntry], seed: int = 0, tol: float = DEFAULT_TOL,
              only: str | None = None) -> list[Row]:
    return [run_entry(e, seed, tol) for e in entries if only is None or only in e.id]


def render_table(rows: Sequence[Row]) -> str:
    width = max((len(r.id) for r in rows), default=4)
    lines = []
    for r in rows:
        cells = []
        for k, e, c in r.cells:
            cells.append(f"{k}={c}" if e == c else f"{k}={c} (expected {e})")
        bad = [f"{p}: {msg}" for p, ok, msg in r.certificates if not ok]
        certs = "certificates ok" if not bad else "; ".join(bad)
        lines.append(f"{'MATCH' if r.match else 'MISMATCH':8} {r.id:{width}}  {'  '.join(cells)}  [{certs}]")
    n_bad = sum(not r.match for r in rows)
    lines.append(f"{len(rows) - n_bad}/{len(rows)} rows match")
    return "\n".join(lines) + "\n"


def table_json(rows: Sequence[Row]) -> dict:
    return {"rows": [{"id": r.id, "match": r.match,
                      "cells": [{"key": k, "expected": _plain(e), "computed": _plain(c)}
                                for k, e, c in r.cells],
                      "certificates": [{"problem": p, "ok": ok, "message": m}
                                       for p, ok, m in r.certificates]} for r in rows]}


# -- command line -------------------------------------------------------------------------------

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _param(text: str) -> tuple[str, object]:
    if "=" not in text:
        raise argparse.ArgumentTypeError(f"expected k=v, got {text!r}")
    k, v = text.split("=", 1)
    try:
        val = json.loads(v)
    except json.JSONDecodeError:
        try:
            val = Fraction(v)
        except (ValueError, ZeroDivisionError):
            val = v
    return k, val


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tamesolv",
                                 description="Taming symplectic forms and SKT metrics on Lie algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt_flags(p):
        grp = p.add_mutually_exclusive_group()
        grp.add_argument("--json", dest="format", action="store_const", const="json")
        grp.add_argument("--text", dest="format", action="store_const", const="text")

    p = sub.add_parser("check", help="structure facts of an algebra document")
    p.add_argument("file")
    fmt_flags(p)

    p = sub.add_parser("decide", help="decide taming or SKT existence")
    p.add_argument("file")
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--taming", dest="problem", action="store_const", const="taming")
    grp.add_argument("--skt", dest="problem", action="store_const", const="skt")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("-o", "--output", help="also write the JSON report here")
    fmt_flags(p)

    p = sub.add_parser("catalog", help="list or emit catalog algebras")
    csub = p.add_subparsers(dest="action", required=True)
    csub.add_parser("list")
    e = csub.add_parser("emit")
    e.add_argument("id")
    e.add_argument("--param", action="append", type=_param, default=[], metavar="K=V")

    p = sub.add_parser("paper-table", help="expected vs computed verdicts over the catalog")
    p.add_argument("--only", help="keep entries whose id contains this string")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    fmt_flags(p)

    p = sub.add_parser("verify-report", help="re-check every certificate in a report")
    p.add_argument("file")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "check":
            doc = parse_document(_read(args.file))
            report = make_report(doc)
            out.write(render_text(report) if args.format == "text" else dumps(report))
            return 0
        if args.command == "decide":
            doc = parse_document(_read(args.file))
            problem = args.problem or "taming"
            report = make_report(doc, [problem], args.seed, args.tol)
            if args.output:
                with open(args.output, "w", encoding="utf-8") as fh:
                    fh.write(dumps(report))
            out.write(render_text(report) if args.format == "text" else dumps(report))
            return VERDICT_EXIT[report["verdicts"][problem]["kind"]]
        if args.command == "catalog":
            if args.action == "list":
                for name, spec in cat.REGISTRY.items():
                    params = " ".join(f"{k}={v}" for k, v in spec.params.items())
                    out.write(f"{name:18} {params:12} {spec.description}\n")
                return 0
            entry = cat.build(args.id, **dict(args.param))
            out.write(emit_document(AlgebraDocument.from_entry(entry)))
            return 0
        if args.command == "paper-table":
            rows = run_table(cat.table_entries(), args.seed, args.tol, args.only)
            out.write(dumps(table_json(rows)) if args.format == "json" else render_table(rows))
            return 0 if all(r.match for r in rows) else 1
        if args.command == "verify-report":
            text = _read(args.file)
            try:
                report = json.loads(text)
            except json.JSONDecodeError as e:
                raise ParseError(e.msg, e.lineno, e.colno) from None
            results = verify_report(report)
            for name, ok, msg in results:
                out.write(f"{'OK' if ok else 'FAIL':4} {name}: {msg}\n")
            return 0 if all(ok for _, ok, _ in results) else 1
    except ParseError as e:
        sys.stderr.write(f"parse error: {e}\n")
        return EXIT_PARSE
    except (LieError, KeyError, TypeError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
