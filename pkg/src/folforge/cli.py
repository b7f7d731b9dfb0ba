"""Command-line front end: ``folforge <subcommand> ...`` printing JSON.

Exit codes: 0 success, 2 failed verification or scenario mismatch, 3 bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    AssertionFailure,
    ExpressionSyntaxError,
    FolforgeError,
    GradingError,
    InputError,
    UnknownIdentifier,
)
from .exactcore.poly import MultiPoly
from .exactcore.scalars import GaussianRational, I, scalar_str
from .extalg import PolyField, PolyForm, check_euler, check_integrable, contract, wedge

# expressions

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))?")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[Token]:
    out = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        ws = m.group(0)[: len(m.group(0)) - len((m.group(1) or m.group(2) or m.group(3) or ""))]
        for k, ch in enumerate(ws):
            if ch == "\n":
                line, line_start = line + 1, pos + k + 1
        start = pos + len(ws)
        col = start - line_start + 1
        if m.group(1):
            out.append(Token("int", m.group(1), line, col))
        elif m.group(2):
            out.append(Token("name", m.group(2), line, col))
        elif m.group(3):
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ExpressionSyntaxError(f"unexpected character {ch!r}", line, col)
            out.append(Token("op", ch, line, col))
        elif not ws:
            break
        pos = m.end()
    end_col = len(text) - line_start + 1
    out.append(Token("end", "", line, end_col))
    return out


@dataclass(frozen=True)
class Expr:
    """Parsed expression tree: (op, children...) tuples with leaves
    ("num", Fraction), ("i",), ("var", index), ("dvar", index)."""

    tree: tuple
    names: tuple
    ncoords: int


class _Parser:
    def __init__(self, text: str, names: Sequence[str], ncoords: int):
        self.toks = _tokenize(text)
        self.k = 0
        self.names = list(names)
        self.ncoords = ncoords

    def peek(self) -> Token:
        return self.toks[self.k]

    def take(self) -> Token:
        t = self.toks[self.k]
        self.k += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.take()
        if t.text != text:
            raise ExpressionSyntaxError(f"expected {text!r}, found {t.text or 'end of input'!r}", t.line, t.col)
        return t

    def parse(self) -> tuple:
        tree = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ExpressionSyntaxError(f"unexpected {t.text!r}", t.line, t.col)
        return tree

    def expr(self) -> tuple:
        t = self.peek()
        if t.text in "+-" and t.kind == "op":
            self.take()
            node = self.term()
            if t.text == "-":
                node = ("neg", node, (t.line, t.col))
        else:
            node = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.take()
            rhs = self.term()
            node = ("add" if op.text == "+" else "sub", node, rhs, (op.line, op.col))
        return node

    def term(self) -> tuple:
        node = self.power()
        while self.peek().kind == "op" and self.peek().text == "*":
            op = self.take()
            # lenient unary minus after '*'
            if self.peek().kind == "op" and self.peek().text == "-":
                m = self.take()
                rhs = ("neg", self.power(), (m.line, m.col))
            else:
                rhs = self.power()
            node = ("mul", node, rhs, (op.line, op.col))
        return node

    def power(self) -> tuple:
        node = self.atom()
        while self.peek().kind == "op" and self.peek().text == "^":
            op = self.take()
            t = self.take()
            if t.kind != "int":
                raise ExpressionSyntaxError("exponent must be a natural number", t.line, t.col)
            node = ("pow", node, int(t.text), (op.line, op.col))
        return node

    def atom(self) -> tuple:
        t = self.take()
        if t.kind == "int":
            value = Fraction(int(t.text))
            if self.peek().kind == "op" and self.peek().text == "/":
                self.take()
                d = self.take()
                if d.kind != "int" or int(d.text) == 0:
                    raise ExpressionSyntaxError("denominator must be a positive integer", d.line, d.col)
                value = value / int(d.text)
            return ("num", value)
        if t.kind == "name":
            if t.text == "i":
                return ("i",)
            if t.text in self.names:
                return ("var", self.names.index(t.text))
            if t.text.startswith("d") and t.text[1:] in self.names:
                j = self.names.index(t.text[1:])
                if j >= self.ncoords:
                    raise GradingError(f"{t.text[1:]} is a parameter and has no differential", t.line, t.col)
                return ("dvar", j)
            raise UnknownIdentifier(f"unknown identifier {t.text!r}", t.line, t.col)
        if t.kind == "op" and t.text == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ExpressionSyntaxError(f"unexpected {t.text or 'end of input'!r}", t.line, t.col)


def declared_variables(amb: str) -> tuple[list[str], int]:
    """Variable names for an ambient flag and how many of them are coordinates."""
    if amb in ("Q3",):
        return [f"x{i}" for i in range(5)], 5
    if amb in ("st", "P1st"):
        return ["s", "t"], 2
    m = re.fullmatch(r"([PY])(\d)", amb)
    if m:
        n = int(m.group(2)) + 1
        prefix = "x" if m.group(1) == "P" else "y"
        return [f"{prefix}{k}" for k in range(n)], n
    raise InputError(f"unknown ambient {amb!r}")


def parse_expression(text: str, ambient: str = "P3") -> Expr:
    names, ncoords = declared_variables(ambient)
    if re.search(r"eps\b", text):
        names = names + ["eps"]
    return Expr(_Parser(text, names, ncoords).parse(), tuple(names), ncoords)


def evaluate(e: Expr) -> PolyForm:
    """Evaluate to a homogeneous-degree form (functions are 0-forms)."""
    nv, N = len(e.names), e.ncoords

    def fn(p: MultiPoly) -> PolyForm:
        return PolyForm.function(p, N)

    def ev(node) -> PolyForm:
        op = node[0]
        if op == "num":
            return fn(MultiPoly.const(node[1], nv))
        if op == "i":
            return fn(MultiPoly.const(I, nv))
        if op == "var":
            return fn(MultiPoly.var(node[1], nv))
        if op == "dvar":
            return PolyForm.dx(node[1], N, nv)
        if op == "neg":
            return ev(node[1]) * -1
        if op in ("add", "sub"):
            a, b = ev(node[1]), ev(node[2])
            if a.q != b.q:
                line, col = node[3]
                raise GradingError(f"cannot add a {a.q}-form and a {b.q}-form", line, col)
            return a + b if op == "add" else a - b
        if op == "mul":
            return wedge(ev(node[1]), ev(node[2]))
        if op == "pow":
            base = ev(node[1])
            if base.q > 0:
                line, col = node[3]
                raise GradingError("powers of forms of positive degree are not allowed", line, col)
            out = fn(MultiPoly.const(1, nv))
            for _ in range(node[2]):
                out = wedge(out, base)
            return out
        raise AssertionError(op)

    return ev(e.tree)


def parse_form(text: str, ambient: str = "P3") -> PolyForm:
    return evaluate(parse_expression(text, ambient))


def parse_poly(text: str, ambient: str = "P3") -> MultiPoly:
    w = parse_form(text, ambient)
    if w.q != 0:
        raise GradingError("expected a polynomial, found a form", 1, 1)
    return w.coefficient(())


def print_form(w: PolyForm, names: Sequence[str]) -> str:
    return w.to_str(list(names))


# JSON


def _jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, (Fraction, GaussianRational)):
        return scalar_str(x)
    if isinstance(x, MultiPoly):
        return x.to_str()
    if isinstance(x, PolyForm):
        return x.to_str()
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def dumps(obj) -> str:
    return json.dumps(_jsonable(obj), sort_keys=True, indent=2)


# commands


def cmd_check(a) -> dict:
    from .foliation import singular_divisorial_part

    names, N = declared_variables(a.ambient)
    w = parse_form(a.form, a.ambient)
    if w.is_zero() or w.q == 0:
        raise InputError("expected a nonzero form of positive degree")
    m = w.coefficient_degree()
    if m is None:
        raise InputError("coefficients are not homogeneous of one degree")
    radial = contract(PolyField.radial(w.ncoords, w.nvars), w).is_zero()
    verdict = check_integrable(w)
    sing = singular_divisorial_part(w)
    out = {
        "codim": w.q,
        "coefficient_degree": m,
        "degree": m - 1,
        "integrable": verdict.integrable,
        "radial_ok": radial,
        "euler_ok": check_euler(w, m) if radial else False,
        "singular_divisorial_part": sing.to_str(list(w_names(w, names))),
    }
    return out


def w_names(w: PolyForm, names: Sequence[str]) -> list[str]:
    return list(names) + ["eps"] * (w.nvars - len(names))


def cmd_dim(a) -> dict:
    from .moduli import ComponentFamily, ambient, certified_dimension

    degs = tuple(int(x) for x in a.degrees.split(","))
    fam = ComponentFamily(a.family, degs, ambient(a.ambient))
    return certified_dimension(fam, a.samples, a.seed).as_dict()


def cmd_orbit(a) -> dict:
    from .moduli import exc2_form, orbit_dimension

    if a.id == "P3/Aff":
        return {"id": a.id, "orbit_dimension": orbit_dimension(exc2_form(), "sl")}
    if a.id == "Q3/Aff":
        from .quadvariety import affQ_build

        b = affQ_build(seed=a.seed)
        return {"id": a.id, "orbit_dimension": b.orbit_dim}
    raise InputError(f"unknown orbit id {a.id!r}")


def _members(text: str | None) -> list[tuple]:
    if not text:
        return [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    out = []
    for part in text.split(","):
        try:
            al, be = part.split(":")
            out.append((Fraction(al), Fraction(be)))
        except ValueError as exc:
            raise InputError(f"bad member {part!r}; use alpha:beta") from exc
    return out


def cmd_pencil(a) -> dict:
    from .pencil import Pencil, multiple_fiber_bounds, r_partial

    P = Pencil(parse_poly(a.f, a.ambient), parse_poly(a.g, a.ambient), a.p, a.q)
    b = multiple_fiber_bounds(P, a.lines, a.seed)
    return {
        "multiple_lower": b.lower,
        "multiple_upper": b.upper,
        "witnesses": b.witnesses,
        "r_partial": r_partial(P, _members(a.members), a.seed),
    }


def cmd_classify(a) -> dict:
    from .foliation import FoliationSpec, classify_low_degree

    w = parse_form(a.form, a.ambient)
    if w.q != a.codim:
        raise InputError(f"form has degree {w.q}, not {a.codim}")
    spec = FoliationSpec(w.ncoords - 1, w.q, w)
    return classify_low_degree(spec).as_dict()


def cmd_example(a) -> dict:
    from .quadvariety import verify_named_example

    rep = verify_named_example(a.id)
    out = rep.as_dict()
    if not rep.passed:
        raise _Reported(out)
    return out


def _run_row(args: tuple) -> dict:
    from .moduli import catalog_entry

    cid, seed = args
    return catalog_entry(cid).run(seed)


def cmd_catalog(a) -> dict:
    from .moduli import table1_catalog

    ids = [e.id for e in table1_catalog() if a.id is None or e.id == a.id]
    if not ids:
        raise InputError(f"unknown catalog id {a.id!r}")
    threads = int(os.environ.get("FOLFORGE_THREADS", "1") or 1)
    jobs = [(cid, a.seed) for cid in ids]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            rows = list(ex.map(_run_row, jobs))
    else:
        rows = [_run_row(j) for j in jobs]
    return {"rows": rows}


class _Reported(Exception):
    """A failed verification whose report is still printed."""

    def __init__(self, payload):
        super().__init__("verification failed")
        self.payload = payload


COMMANDS = {
    "check": cmd_check,
    "dim": cmd_dim,
    "orbit": cmd_orbit,
    "pencil": cmd_pencil,
    "classify": cmd_classify,
    "example": cmd_example,
    "catalog": cmd_catalog,
}


class _Parser_(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser_(prog="folforge", description="Exact computations with foliations on Fano threefolds.")
    p.add_argument("--scenario", help="replay a JSON scenario file")
    common = _Parser_(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="command", parser_class=_Parser_)

    c = sub.add_parser("check", parents=[common])
    c.add_argument("--ambient", default="P3")
    c.add_argument("--form", required=True)

    d = sub.add_parser("dim", parents=[common])
    d.add_argument("--family", required=True, choices=["Rat", "Log", "PBL"])
    d.add_argument("--degrees", required=True)
    d.add_argument("--ambient", default="P3")
    d.add_argument("--samples", type=int, default=3)

    o = sub.add_parser("orbit", parents=[common])
    o.add_argument("--id", required=True)

    pe = sub.add_parser("pencil", parents=[common])
    pe.add_argument("--f", required=True)
    pe.add_argument("--g", required=True)
    pe.add_argument("--p", type=int, required=True)
    pe.add_argument("--q", type=int, required=True)
    pe.add_argument("--members")
    pe.add_argument("--lines", type=int, default=3)
    pe.add_argument("--ambient", default="P3")

    cl = sub.add_parser("classify", parents=[common])
    cl.add_argument("--form", required=True)
    cl.add_argument("--codim", type=int, default=1)
    cl.add_argument("--ambient", default="P3")

    e = sub.add_parser("example", parents=[common])
    e.add_argument("--id", required=True)

    ca = sub.add_parser("catalog", parents=[common])
    ca.add_argument("--id")
    return p


def scenario_argv(doc: dict) -> list[str]:
    """Scenario documents mirror argv: command, options, seed."""
    if "command" not in doc or doc["command"] not in COMMANDS:
        raise InputError("scenario needs a known 'command'")
    argv = [doc["command"]]
    for k, v in (doc.get("options") or {}).items():
        argv += [f"--{k}", str(v)]
    argv += ["--seed", str(doc.get("seed", 0))]
    return argv


def _compare(expected, actual) -> list[str]:
    """Paths where ``actual`` differs from ``expected`` (exact, subset semantics)."""
    bad = []

    def walk(e, a, path):
        if isinstance(e, dict):
            if not isinstance(a, dict):
                bad.append(path)
                return
            for k, v in e.items():
                walk(v, a.get(k), f"{path}.{k}" if path else k)
        elif e != a:
            bad.append(path)

    walk(expected, actual, "")
    return bad


def run(argv: Sequence[str]) -> tuple[int, dict]:
    parser = build_parser()
    args = parser.parse_args(list(argv))
    if args.scenario:
        with open(args.scenario, encoding="utf-8") as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as exc:
                raise InputError(f"scenario is not valid JSON: {exc}") from exc
        code, result = run(scenario_argv(doc))
        result = _jsonable(result)
        mismatches = _compare(_jsonable(doc.get("expected", {})), result)
        out = {"scenario": os.path.basename(args.scenario), "result": result, "mismatches": mismatches}
        return (2 if mismatches or code else 0), out
    if not args.command:
        raise InputError("missing subcommand")
    return 0, COMMANDS[args.command](args)


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        code, out = run(argv)
    except _Reported as rep:
        code, out = 2, rep.payload
    except AssertionFailure as exc:
        code, out = 2, {"error": type(exc).__name__, "message": str(exc)}
    except (FolforgeError, ValueError, OSError) as exc:
        code = getattr(exc, "exit_code", 3)
        out = {"error": type(exc).__name__, "message": str(exc)}
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    sys.stdout.write(dumps(out) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
