"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 invariant violation,
3 precondition failure.
"""

import argparse
import json
import sys

from .errors import GapvirError, InvariantViolation
from .scenario import VERDICTS, run


def _read_spec(path):
    if path is None:
        raise GapvirError("this command needs --spec FILE")
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as e:
        raise GapvirError(f"cannot read {path}: {e.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise GapvirError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from None


def _apply_overrides(spec, args):
    """--p / --m fill in missing fields and must agree with present ones."""
    if not isinstance(spec, dict):
        return spec
    for key in ("p", "m"):
        val = getattr(args, key, None)
        if val is None:
            continue
        if key in spec and spec[key] != val:
            raise GapvirError(f"--{key} {val} conflicts with {key}={spec[key]} in the input file")
        spec.setdefault(key, val)
    return spec


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the full JSON report")
    common.add_argument("--p", type=int, help="gap parameter p > 1")
    common.add_argument("--m", type=int, help="Whittaker depth m >= 1")
    common.add_argument("--spec", help="JSON input file ('-' for stdin)")

    ap = argparse.ArgumentParser(prog="gapvir", description="Exact computations for gap-p Virasoro algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bracket", parents=[common], help="bracket of two elements")
    b.add_argument("x")
    b.add_argument("y")

    a = sub.add_parser("act", parents=[common], help="act by an element on a module vector")
    a.add_argument("x", help="Lie element, e.g. 'L(1) + 2*I(1,0)'")
    a.add_argument("vector", help="vector in the module's text format")

    v = sub.add_parser("verdict", parents=[common], help="irreducibility verdict")
    v.add_argument("kind", choices=VERDICTS)

    sub.add_parser("decompose", parents=[common], help="split phi along J")

    e = sub.add_parser("eta-solve", parents=[common], help="solve for the normalizing exp(ad alpha)")
    e.add_argument("--window", help="comma-separated target indices inside [m, 2m-1]")
    e.add_argument("--convention", choices=("consequence", "printed"), default="consequence")

    sub.add_parser("extract-top", parents=[common], help="recover 1 (x) v_s from a tensor vector")
    sub.add_parser("fingerprint", parents=[common], help="read (lambda, alpha) off an Omega tensor module")

    t = sub.add_parser("theta", parents=[common], help="theta map (N(i,r), K(j)) or its inverse (L, I, C)")
    t.add_argument("symbol")

    s = sub.add_parser("suite", parents=[common], help="run the check suite")
    s.add_argument("--profile", choices=("quick", "full"), default="quick")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--only", help="comma-separated check ids")
    s.add_argument("--seed", type=int, help="overrides GAPVIR_SEED")
    s.add_argument("--timings", action="store_true", help="include wall-clock seconds in the JSON report")

    sub.add_parser("run", parents=[common], help="execute a scenario file given by --spec")
    return ap


def scenario_from_args(args):
    c = args.command
    if c == "run":
        return _read_spec(args.spec)
    if c == "bracket":
        if args.p is None:
            raise GapvirError("bracket needs --p")
        return {"task": "bracket", "p": args.p, "x": args.x, "y": args.y}
    if c == "theta":
        if args.p is None:
            raise GapvirError("theta needs --p")
        return {"task": "theta", "p": args.p, "symbol": args.symbol}
    if c == "suite":
        only = args.only.split(",") if args.only else None
        return {"task": "suite", "profile": args.profile, "jobs": args.jobs, "only": only, "seed": args.seed,
                "timings": args.timings}
    spec = _read_spec(args.spec)
    if c == "act":
        mod = _apply_overrides(spec.get("module", spec) if "module" in spec and isinstance(spec["module"], dict) else spec, args)
        return {"task": "act", "module": mod, "x": args.x, "vector": args.vector}
    if c == "verdict":
        return {"task": "verdict", "kind": args.kind, "spec": _apply_overrides(spec, args)}
    if c == "decompose":
        return {"task": "decompose", "spec": _apply_overrides(spec, args)}
    if c == "eta-solve":
        window = [int(x) for x in args.window.split(",")] if args.window else None
        return {"task": "eta-solve", "spec": _apply_overrides(spec, args), "window": window,
                "convention": args.convention}
    if c == "extract-top":
        return {"task": "extract-top", "spec": spec}
    if c == "fingerprint":
        return {"task": "fingerprint", "spec": spec}
    raise GapvirError(f"unknown command {c!r}")


def _summary(rep):
    task = rep.get("task")
    if task == "verdict":
        if rep["verdict"] == "irreducible":
            return "Irreducible"
        return f"Reducible{{{rep.get('witness')}}}"
    if task == "suite":
        lines = []
        for r in rep["results"]:
            mark = "PASS" if r["passed"] else "FAIL"
            tail = "" if r["passed"] else f" -- {r['counterexample']}"
            lines.append(f"[{mark}] {r['id']}: {r['title']} ({r['checked']} checks){tail}")
        lines.append("all passed" if rep["passed"] else "FAILURES")
        return "\n".join(lines)
    if task == "fingerprint":
        return f"lambda = {rep['lambda']}, alpha = ({', '.join(rep['alpha'])})"
    if task == "decompose":
        return json.dumps({"J": rep["J"], "phi_e": rep["phi_e"], "psi": rep["psi"]}, sort_keys=True)
    if task == "eta-solve":
        return f"alpha = {rep['alpha']}; phi'(L_n) = 0 for n in {rep['vanishing_L']}"
    return rep.get("result", json.dumps(rep, sort_keys=True))


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 1 if e.code not in (0, None) else 0
    try:
        rep = run(scenario_from_args(args))
    except GapvirError as e:
        print(json.dumps({"error": type(e).__name__, "message": str(e)}, sort_keys=True)
              if args.json else f"error: {e}", file=sys.stderr)
        return e.exit_code
    if args.json:
        print(json.dumps(rep, sort_keys=True, indent=2, ensure_ascii=False))
    else:
        print(_summary(rep))
    if rep.get("task") == "suite" and not rep["passed"]:
        return InvariantViolation.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
