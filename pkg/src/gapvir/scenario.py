"""Scenario payloads: load module descriptions from JSON and run one task.

Every task returns a JSON-ready dict whose scalars are exact strings.
"""

import json

from .algebra import LieElement, Sym, bracket, check_p, parse_element
from .errors import ParseError, ValidationError
from .fock import FockModule, FockPoly, heisenberg_verdict
from .parsing import parse_terms
from .pbw import PBWModule
from .polymod import OmegaModule, UniPoly, omega_verdict
from .scalar import Scalar
from .tensor import (FockTensorModule, OmegaTensorModule, TrivialModule, extract_top, fingerprint,
                     omega_tensor_whittaker_verdict)
from .twisted import TwistedSym, parse_twisted, theta, theta_inv
from .whitfun import HeisenbergWhittakerData, WhittakerFunction
from .whittaker import (decompose, eta_conjugate, eta_solver, main_verdict, virasoro_verdict,
                        zero_level_verdict)

TASKS = ("bracket", "act", "verdict", "decompose", "eta-solve", "extract-top", "fingerprint", "theta", "suite")
VERDICTS = ("virasoro", "heisenberg", "zero-level", "main", "omega", "omega-tensor")


def _need(d, key, what="payload"):
    if not isinstance(d, dict) or key not in d:
        raise ValidationError(f"{what} lacks {key!r}")
    return d[key]


def load_omega(d):
    alpha = _need(d, "alpha", "omega spec")
    if not isinstance(alpha, list):
        raise ValidationError("omega 'alpha' must be a list of exact scalars")
    return OmegaModule(_need(d, "p", "omega spec"), Scalar.parse(str(_need(d, "lambda", "omega spec"))),
                       [Scalar.parse(str(a)) for a in alpha])


def load_heisenberg(d):
    p = _need(d, "p", "heisenberg spec")
    level = {int(i): Scalar.parse(str(v)) for i, v in _need(d, "level", "heisenberg spec").items()}
    phi = {(int(i), int(n)): Scalar.parse(str(v)) for i, row in d.get("phi", {}).items() for n, v in row.items()}
    return HeisenbergWhittakerData(p, _need(d, "I", "heisenberg spec"), _need(d, "m", "heisenberg spec"), level, phi)


def load_whittaker(d):
    return WhittakerFunction.from_json(d)


def load_module(d):
    """(engine, vector parser) from a module description."""
    kind = _need(d, "module", "module spec")
    if kind == "omega":
        return load_omega(d), UniPoly.parse
    if kind == "fock":
        return FockModule(load_heisenberg(d)), FockPoly.parse
    if kind == "whittaker":
        M = PBWModule(load_whittaker(_need(d, "phi", "module spec")))
        return M, M.parse
    if kind == "heisenberg-pbw":
        M = PBWModule(load_heisenberg(d))
        return M, M.parse
    if kind in ("omega-tensor", "fock-tensor"):
        T = load_tensor(d)

        def parse(text):
            return parse_tensor_vector(T, json.loads(text) if isinstance(text, str) else text)

        return T, parse
    raise ValidationError(f"unknown module kind {kind!r}")


def load_tensor(d):
    kind = d.get("module", "omega-tensor")
    if kind == "omega-tensor":
        right = PBWModule(load_whittaker(_need(d, "phi", "tensor spec")))
        return OmegaTensorModule(load_omega(_need(d, "omega", "tensor spec")), right)
    if kind == "fock-tensor":
        left = FockModule(load_heisenberg(_need(d, "fock", "tensor spec")))
        r = _need(d, "right", "tensor spec")
        if "trivial" in r:
            right = TrivialModule(left.p, Scalar.parse(str(r["trivial"])))
        else:
            right = PBWModule(load_whittaker(_need(r, "phi", "right factor")))
        return FockTensorModule(left, right)
    raise ValidationError(f"unknown tensor kind {kind!r}")


def parse_tensor_vector(T, pairs):
    """JSON list of {"left": text, "right": text} pairs."""
    if not isinstance(pairs, list):
        raise ParseError("a tensor vector is a JSON list of {left, right} pairs")
    lparse = UniPoly.parse if isinstance(T.left, OmegaModule) else FockPoly.parse
    rparse = T.right.parse if isinstance(T.right, PBWModule) else _trivial_parse(T.right)
    out = T.vector_type.zero()
    for item in pairs:
        out = out + T.pure(lparse(_need(item, "left", "tensor term")), rparse(_need(item, "right", "tensor term")))
    return out


def _trivial_parse(R):
    def parse(text):
        def atom(name, args, bracket, pos):
            if name != "w" or args is not None:
                raise ParseError(f"unexpected symbol {name!r}", pos, "'w'")
            return "w"

        total = Scalar(0)
        for c, atoms in parse_terms(text, atom):
            if len(atoms) != 1:
                raise ParseError("each term must be a multiple of w")
            total = total + c
        return R.vacuum * total

    return parse


# -- tasks -------------------------------------------------------------------

def task_bracket(payload):
    p = check_p(_need(payload, "p"))
    x = parse_element(_need(payload, "x"), p)
    y = parse_element(_need(payload, "y"), p)
    z = bracket(x, y)
    return {"task": "bracket", "p": p, "x": str(x), "y": str(y), "result": str(z), "terms": z.to_json()["terms"]}


def task_act(payload):
    M, parse = load_module(_need(payload, "module"))
    x = parse_element(_need(payload, "x"), M.p)
    v = parse(_need(payload, "vector"))
    out = M.act(x, v)
    res = {"task": "act", "x": str(x), "vector": str(v), "result": str(out)}
    if hasattr(out, "to_json"):
        res["result_json"] = out.to_json()
    return res


def task_verdict(payload):
    kind = _need(payload, "kind")
    spec = _need(payload, "spec")
    if kind not in VERDICTS:
        raise ValidationError(f"unknown verdict kind {kind!r}; choose from {', '.join(VERDICTS)}")
    if kind == "virasoro":
        v = virasoro_verdict(load_whittaker(spec))
    elif kind == "heisenberg":
        v = heisenberg_verdict(load_heisenberg(spec))
    elif kind == "zero-level":
        v = zero_level_verdict(load_whittaker(spec))
    elif kind == "main":
        v = main_verdict(load_whittaker(spec))
    elif kind == "omega":
        v = omega_verdict(load_omega(spec))
    else:
        om = load_omega(_need(spec, "omega", "omega-tensor spec"))
        v = omega_tensor_whittaker_verdict(om.lam, om.alpha, load_whittaker(_need(spec, "phi", "omega-tensor spec")))
    return {"task": "verdict", "kind": kind, "input": spec, **v.to_json()}


def task_decompose(payload):
    W = load_whittaker(_need(payload, "spec"))
    D = decompose(W)
    return {"task": "decompose", "input": W.to_json(), "J": sorted(D.J), "phi_h": D.phi_h.to_json(),
            "phi_e": D.phi_e.to_json(), "psi": D.psi.to_json(), "consistency": D.checks}


def task_eta(payload):
    W = load_whittaker(_need(payload, "spec"))
    window = payload.get("window")
    convention = payload.get("convention", "consequence")
    alpha, coeffs = eta_solver(W, window, convention)
    Wp, vanishing = eta_conjugate(W, alpha)
    return {"task": "eta-solve", "input": W.to_json(), "convention": convention, "alpha": str(alpha),
            "a": {f"{i},{k}": str(c) for (i, k), c in sorted(coeffs.items())},
            "phi_prime": Wp.to_json(), "vanishing_L": vanishing}


def task_extract(payload):
    spec = _need(payload, "spec")
    T = load_tensor({"module": "omega-tensor", **spec})
    w = parse_tensor_vector(T, _need(spec, "vector", "extract-top spec"))
    out, combo = extract_top(T, w, certificate=True)
    return {"task": "extract-top", "vector": str(w), "result": str(out), "result_json": out.to_json(),
            "combination": [{"coeff": str(c), "sym": str(x)} for c, x in combo]}


def task_fingerprint(payload):
    spec = _need(payload, "spec")
    T = load_tensor({"module": "omega-tensor", **spec})
    lam, alpha = fingerprint(T)
    return {"task": "fingerprint", "lambda": str(lam), "alpha": [str(a) for a in alpha]}


def task_theta(payload):
    p = check_p(_need(payload, "p"))
    text = _need(payload, "symbol")
    stripped = text.strip()
    if stripped[:1] in ("N", "K"):
        t = parse_twisted(stripped, p)
        return {"task": "theta", "p": p, "input": str(t), "result": str(theta(t, p))}
    x = parse_element(stripped, p)
    if len(x.terms) != 1 or next(iter(x.terms.values())) != 1:
        raise ParseError(f"theta_inv expects a single basis symbol, got {text!r}")
    s = next(iter(x.terms))
    return {"task": "theta-inverse", "p": p, "input": str(s), "result": str(theta_inv(s, p))}


def task_suite(payload):
    from .suite import report_json, run_suite

    report = run_suite(payload.get("profile", "quick"), payload.get("seed"), payload.get("jobs", 1),
                       payload.get("only"))
    return {"task": "suite", **report_json(report, payload.get("timings", False))}


RUNNERS = {
    "bracket": task_bracket,
    "act": task_act,
    "verdict": task_verdict,
    "decompose": task_decompose,
    "eta-solve": task_eta,
    "extract-top": task_extract,
    "extract": task_extract,
    "fingerprint": task_fingerprint,
    "theta": task_theta,
    "suite": task_suite,
}


def run(scenario):
    """Execute a scenario dict ``{"task": ..., ...payload}``."""
    task = _need(scenario, "task", "scenario")
    if task not in RUNNERS:
        raise ValidationError(f"unknown task {task!r}; choose from {', '.join(TASKS)}")
    return RUNNERS[task](scenario)
