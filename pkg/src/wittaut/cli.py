"""Command-line interface: JSON in, canonical JSON out.

Every argument that takes JSON accepts either inline JSON or a path to a
file holding it ("-" reads standard input).  Errors are reported as
``{"error": {"code": ..., "message": ...}}`` with exit codes 0 (ok),
1 (property violated), 2 (parse error), 3 (precondition), 4 (search cap).
"""

import argparse
import json
import os
import random
import sys

from . import serialize as ser
from .autos import (apply_aut, build_distinguished, check_triple, compose, invert,
                    lemma23_bruteforce, lemma23_decide, stabilizer_of)
from .errors import ParseError, WittError
from .intlat import Sublattice
from .locality import (ProbeSet, recover_2local, recover_local, shift_demo, verify_2local,
                       verify_local)
from .oracles import ExecOracle, SearchOracle, ShiftOracle, TripleOracle
from .pairs import complete_pair, envelope, nondeg_defect
from .scalars import QQ, field_from_tag
from .shift import shift_map, shift_witness
from .witt import Algebra, WittElement, act, bracket, coerce_vector, is_simple


# ---------------------------------------------------------------------------
# input helpers

def load_json(text):
    if text == "-":
        text = sys.stdin.read()
    elif not text.lstrip().startswith(("{", "[", '"')) and os.path.isfile(text):
        with open(text) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg} at position {exc.pos}") from None


def parse_algebra(obj, default_field=QQ):
    """Descriptor object, an integer n (Kronecker W_n) or the string "inf"."""
    if isinstance(obj, bool):
        raise ParseError("algebra must be a descriptor")
    if isinstance(obj, int):
        return Algebra.witt(obj, default_field)
    if obj == "inf":
        return Algebra.infinite(default_field)
    if isinstance(obj, dict):
        obj = dict(obj)
        obj.setdefault("field", default_field.tag)
    return ser.descriptor_from_json(obj)


class Ctx:
    def __init__(self, args):
        self.args = args
        self.field = field_from_tag(args.field) if args.field else QQ
        self.alg = None
        if getattr(args, "algebra", None):
            self.alg = parse_algebra(load_json(args.algebra), self.field)

    def need_alg(self):
        if self.alg is None:
            raise ParseError("this command needs --algebra")
        return self.alg

    def element(self, text):
        return self.element_obj(load_json(text))

    def element_obj(self, obj):
        if isinstance(obj, dict) and "algebra" in obj:
            a = parse_algebra(obj["algebra"], self.field)
            if self.alg is not None and a != self.alg:
                raise ParseError("element algebra differs from the expected algebra")
            self.alg = a
            obj = {k: v for k, v in obj.items() if k != "algebra"}
        return ser.element_from_json(obj, self.alg)

    def triple(self, text):
        return ser.triple_from_json(self.need_alg(), load_json(text))

    def constants(self):
        c = self.args.constants
        if not c:
            return None
        try:
            return tuple(int(v) for v in c.split(","))
        except ValueError:
            raise ParseError(f"bad --constants {c!r}") from None


def _lattice_json(lat):
    return ser.vectors_to_json(lat.basis)


def _subspace_json(field, sub):
    return ser.scalar_vectors_to_json(field, sub)


def _parse_pair(alg, obj):
    if not isinstance(obj, dict):
        raise ParseError("pair must be an object with 'lattice' and 'subspace'")
    try:
        gens = [tuple(ser._int(v) for v in g) for g in obj.get("lattice", [])]
        sub = [tuple(alg.field.parse(v) for v in t) for t in obj.get("subspace", [])]
    except TypeError:
        raise ParseError("lattice and subspace must be arrays of vectors") from None
    if any(len(g) != alg.rank for g in gens) or any(len(t) != alg.dim for t in sub):
        raise ParseError("vector length does not match the algebra")
    return Sublattice(alg.rank, tuple(g for g in gens if any(g))), sub


def _trace_json(steps):
    out = []
    for s in steps:
        if s.kind == "seed":
            out.append({"kind": "seed", "exp": [str(v) for v in s.vector[0]],
                        "tan": [str(v) for v in s.vector[1]], "r": s.r})
        else:
            out.append({"kind": s.kind, "vector": [str(v) for v in s.vector], "r": s.r})
    return out


def _pair_json(alg, pair, initial, steps):
    return {"lattice": _lattice_json(pair.lattice),
            "subspace": _subspace_json(alg.field, pair.subspace),
            "initial_r": initial, "trace": _trace_json(steps),
            "final_r": pair.certificate.r}


# ---------------------------------------------------------------------------
# subcommands; each returns (payload, exit code)

def cmd_bracket(ctx):
    x = ctx.element(ctx.args.x)
    y = ctx.element(ctx.args.y)
    return {"result": ser.element_to_json(bracket(x, y))}, 0


def cmd_act(ctx):
    x = ctx.element(ctx.args.x)
    beta = load_json(ctx.args.beta)
    if not isinstance(beta, (list, dict)):
        raise ParseError("beta must be an exponent array or map")
    try:
        bv = coerce_vector({k: ser._int(v) for k, v in beta.items()} if isinstance(beta, dict)
                           else [ser._int(v) for v in beta])
        x.algebra.check_exp(bv)
    except WittError as exc:
        raise ParseError(str(exc)) from None
    f = x.algebra.field
    res = act(x, bv)
    return {"result": [{"exp": ser._vec_to_json(x.algebra, e, x.algebra.rank, int),
                        "coeff": f.format(c)} for e, c in res]}, 0


def cmd_simple_check(ctx):
    alg = ctx.need_alg()
    ok = is_simple(alg)
    return {"algebra": ser.descriptor_to_json(alg), "simple": ok}, 0 if ok else 1


def cmd_aut_check(ctx):
    alg = ctx.need_alg()
    res = check_triple(alg, ctx.triple(ctx.args.theta))
    return {"valid": res.ok, "reason": res.reason}, 0 if res.ok else 1


def cmd_aut_apply(ctx):
    ctx.need_alg()
    theta = ctx.triple(ctx.args.theta)
    x = ctx.element(ctx.args.x)
    return {"result": ser.element_to_json(apply_aut(theta, x))}, 0


def cmd_aut_compose(ctx):
    alg = ctx.need_alg()
    return {"result": ser.triple_to_json(alg, compose(alg, ctx.triple(ctx.args.a),
                                                      ctx.triple(ctx.args.b)))}, 0


def cmd_aut_invert(ctx):
    alg = ctx.need_alg()
    return {"result": ser.triple_to_json(alg, invert(alg, ctx.triple(ctx.args.a)))}, 0


def _distinguished_json(d):
    return {"element": ser.element_to_json(d.element), "constants": list(d.constants),
            "sign": d.sign}


def cmd_wnm(ctx):
    d = build_distinguished(ctx.need_alg(), ctx.args.sign, ctx.constants())
    return _distinguished_json(d), 0


def _lemma23_input(ctx):
    obj = load_json(ctx.args.spec)
    if not isinstance(obj, dict) or "n" not in obj:
        raise ParseError("lemma23 input needs 'n' and 'S'/'S_prime' or 'constants'")
    n = ser._int(obj["n"])
    try:
        if "constants" in obj:
            ks = [ser._int(c) for c in obj["constants"]]
            sp = [(k, i // 2 + 1) for i, k in enumerate(ks)]
            s = [tuple(p) for p in obj.get("S", sp)]
        else:
            s = [tuple(ser._int(v) for v in p) for p in obj["S"]]
            sp = [tuple(ser._int(v) for v in p) for p in obj["S_prime"]]
    except (KeyError, TypeError, ValueError):
        raise ParseError("S and S_prime must be lists of [coefficient, axis]") from None
    if any(len(p) != 2 for p in list(s) + list(sp)) or any(not 1 <= a <= n for _, a in list(s) + list(sp)):
        raise ParseError("entries must be [coefficient, axis] with 1 <= axis <= n")
    return n, s, sp


def cmd_lemma23(ctx):
    n, s, sp = _lemma23_input(ctx)
    res = lemma23_decide(n, s, sp)
    return {"sigmas": [ser.intmatrix_to_json(m) for m in res.sigmas],
            "hypotheses_hold": res.hypotheses_hold, "violations": list(res.violations)}, 0


def cmd_lemma23_brute(ctx):
    n, s, sp = _lemma23_input(ctx)
    b = ctx.args.bound if ctx.args.bound is not None else 1
    cap = ctx.args.cap if ctx.args.cap is not None else 10 ** 8
    found = lemma23_bruteforce(n, s, sp, b, cap)
    return {"sigmas": [ser.intmatrix_to_json(m) for m in found], "bound": b,
            "enumerated": str((2 * b + 1) ** (n * n))}, 0


def cmd_stabilizer(ctx):
    if ctx.args.element:
        w = ctx.element(ctx.args.element)
        alg = w.algebra
    else:
        alg = ctx.need_alg()
        w = build_distinguished(alg, ctx.args.sign, ctx.constants())
    return {"stabilizer": [ser.triple_to_json(alg, t) for t in stabilizer_of(w)]}, 0


def cmd_defect(ctx):
    alg = ctx.need_alg()
    lat, sub = _parse_pair(alg, load_json(ctx.args.pair))
    d = nondeg_defect(alg, lat, sub)
    return {"A0": _lattice_json(d.lattice), "T0": _subspace_json(alg.field, d.subspace),
            "r": d.r}, 0


def cmd_complete_pair(ctx):
    alg = ctx.need_alg()
    lat, sub = _parse_pair(alg, load_json(ctx.args.pair))
    pair, initial, steps = complete_pair(alg, lat, sub)
    return _pair_json(alg, pair, initial, steps), 0


def cmd_envelope(ctx):
    x = ctx.element(ctx.args.x)
    y = ctx.element(ctx.args.y)
    env = envelope(x, y)
    out = _pair_json(x.algebra, env.pair, env.initial_r, env.steps)
    out["sub_algebra"] = ser.descriptor_to_json(env.sub)
    out["sub_simple"] = is_simple(env.sub)
    out["x_sub"] = ser.element_to_json(env.embedding.to_sub(x))
    out["y_sub"] = ser.element_to_json(env.embedding.to_sub(y))
    return out, 0


# oracles and probe sets

def _probes(ctx):
    obj = load_json(ctx.args.probes)
    if not isinstance(obj, dict) or "probes" not in obj:
        raise ParseError("probe file needs 'probes' (and optionally 'algebra', 'images')")
    if "algebra" in obj:
        a = parse_algebra(obj["algebra"], ctx.field)
        if ctx.alg is not None and ctx.alg != a:
            raise ParseError("probe algebra differs from --algebra")
        ctx.alg = a
    alg = ctx.need_alg()
    els = [ctx.element_obj(p) for p in obj["probes"]]
    imgs = obj.get("images")
    if imgs is not None:
        if len(imgs) != len(els):
            raise ParseError("one image per probe expected")
        imgs = [None if v is None else ctx.element_obj(v) for v in imgs]
    pairs = obj.get("pairs")
    if pairs is not None:
        pairs = [(ser._int(i), ser._int(j)) for i, j in pairs]
        if any(not (0 <= i < len(els) and 0 <= j < len(els)) for i, j in pairs):
            raise ParseError("pair index out of range")
    return alg, els, imgs, pairs


def _oracle(ctx, alg, imgs_by_el):
    spec = ctx.args.oracle
    if not spec:
        raise ParseError("this command needs --oracle")
    rng = random.Random(ctx.args.seed) if ctx.args.seed is not None else None
    if spec == "builtin:shift":
        return ShiftOracle(), shift_map
    if spec == "builtin:search":
        def evaluate(z):
            if z not in imgs_by_el:
                raise ParseError("search oracle needs an image for every queried element")
            return imgs_by_el[z]
        b = ctx.args.bound if ctx.args.bound is not None else 1
        cap = ctx.args.cap if ctx.args.cap is not None else 10 ** 6
        return SearchOracle(alg, evaluate, b, cap), None
    if spec.startswith("builtin:"):
        theta = ser.triple_from_json(alg, load_json(spec[len("builtin:"):]))
        return TripleOracle(alg, theta, rng), (lambda z: apply_aut(theta, z))
    if spec.startswith("exec:"):
        return ExecOracle(alg, spec[len("exec:"):]), None
    raise ParseError(f"unknown oracle {spec!r}")


def _probe_set(ctx):
    alg, els, imgs, pairs = _probes(ctx)
    given = {x: v for x, v in zip(els, imgs or []) if v is not None}
    oracle, evaluate = _oracle(ctx, alg, given)
    if imgs is not None:
        evaluate = None
    return ProbeSet(alg, els, imgs, evaluate), oracle, pairs


def _report_json(rep):
    return {"kind": rep.kind, "passed": rep.passed, "checked": rep.checked,
            "failures": rep.failures}


def cmd_verify_local(ctx):
    ps, oracle, _ = _probe_set(ctx)
    with oracle:
        rep = verify_local(ps, oracle)
    return _report_json(rep), 0 if rep.passed else 1


def cmd_verify_2local(ctx):
    ps, oracle, pairs = _probe_set(ctx)
    with oracle:
        rep = verify_2local(ps, oracle, pairs)
    return _report_json(rep), 0 if rep.passed else 1


def _recovery_json(alg, rec):
    return {"triple": ser.triple_to_json(alg, rec.triple), "certified": rec.certified,
            "passes": rec.passes,
            "envelope": {"lattice": _lattice_json(rec.envelope.pair.lattice),
                         "subspace": _subspace_json(alg.field, rec.envelope.pair.subspace)}}


def cmd_recover_2local(ctx):
    ps, oracle, _ = _probe_set(ctx)
    with oracle:
        rec = recover_2local(ps, oracle, ctx.constants())
    return _recovery_json(ps.algebra, rec), 0


def cmd_recover_local(ctx):
    ps, oracle, _ = _probe_set(ctx)
    with oracle:
        rec = recover_local(ps, oracle, ctx.constants())
    return _recovery_json(ps.algebra, rec), 0


def cmd_shift(ctx):
    x = ctx.element(ctx.args.x)
    return {"result": ser.element_to_json(shift_map(x))}, 0


def cmd_shift_witness(ctx):
    x = ctx.element(ctx.args.x)
    y = ctx.element(ctx.args.y) if ctx.args.y else WittElement.zero(x.algebra)
    theta = shift_witness(x, y)
    ok = bool(check_triple(x.algebra, theta))
    interp = all(apply_aut(theta, z) == shift_map(z) for z in (x, y))
    return {"triple": ser.triple_to_json(x.algebra, theta), "valid": ok,
            "interpolates": interp}, 0 if ok and interp else 1


def _certificate_json(cert):
    return {"element": ser.element_to_json(cert["element"]), "accepted": cert["accepted"],
            "reasons": [{"exp": {str(k): v for k, v in r["exp"].items()}, "why": r["why"]}
                        for r in cert["reasons"]],
            "preimage": None if cert["preimage"] is None
            else ser.element_to_json(cert["preimage"])}


def cmd_shift_demo(ctx):
    seed = ctx.args.seed if ctx.args.seed is not None else 0
    demo = shift_demo(seed)
    out = {"samples": [{"x": ser.element_to_json(x), "shift": ser.element_to_json(s)}
                       for x, s in demo["samples"]],
           "checks": demo["checks"],
           "certificate": _certificate_json(demo["certificate"]),
           "pair_witnesses": [{"x": ser.element_to_json(x), "y": ser.element_to_json(y),
                               "triple": ser.triple_to_json(x.algebra, t)}
                              for x, y, t in demo["pair_witnesses"]]}
    return out, 0 if all(demo["checks"].values()) else 1


def cmd_selftest(ctx):
    from .acceptance import CRITERIA, run_criteria
    only = None
    if ctx.args.only:
        try:
            only = [int(v) for v in ctx.args.only.split(",")]
        except ValueError:
            raise ParseError(f"bad --only {ctx.args.only!r}") from None
        if any(k not in CRITERIA for k in only):
            raise ParseError("criteria are numbered 1 to 12")
    results = run_criteria(only, log=sys.stderr)
    out = {"criteria": [{"id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail}
                        for r in results],
           "passed": all(r.passed for r in results)}
    return out, 0 if out["passed"] else 1


# ---------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", help="descriptor JSON, an integer n, or 'inf'")
    common.add_argument("--field", choices=["Q", "Q(x)"], help="default field for descriptors")
    common.add_argument("--constants", help="k1,k1',k2,k2',... for distinguished elements")
    common.add_argument("--sign", type=int, choices=[1, -1], default=1)
    common.add_argument("--bound", type=int)
    common.add_argument("--cap", type=int)
    common.add_argument("--oracle",
                        help="builtin:<triple>|builtin:shift|builtin:search|exec:<command>")
    common.add_argument("--seed", type=int)
    common.add_argument("--only", help="comma separated criterion numbers (selftest)")

    parser = argparse.ArgumentParser(prog="wittaut", description=__doc__.splitlines()[0])
    sp = parser.add_subparsers(dest="command", required=True, metavar="command")

    def sub(name, func, *pos, optional=(), help=None):
        p = sp.add_parser(name, parents=[common], help=help)
        for a in pos:
            p.add_argument(a)
        for a in optional:
            p.add_argument(a, nargs="?")
        p.set_defaults(func=func)

    sub("bracket", cmd_bracket, "x", "y", help="Lie bracket of two elements")
    sub("act", cmd_act, "x", "beta", help="apply an element to the monomial t^beta")
    sub("simple-check", cmd_simple_check, help="simplicity of --algebra")
    sub("aut-check", cmd_aut_check, "theta", help="validate a triple")
    sub("aut-apply", cmd_aut_apply, "theta", "x", help="apply a triple to an element")
    sub("aut-compose", cmd_aut_compose, "a", "b", help="triple of a o b")
    sub("aut-invert", cmd_aut_invert, "a", help="inverse triple")
    sub("wnm", cmd_wnm, help="distinguished element w (or w' with --sign -1)")
    sub("lemma23", cmd_lemma23, "spec", help="unimodular sigma with sigma(S) in S'")
    sub("lemma23-brute", cmd_lemma23_brute, "spec", help="bounded exhaustive search")
    sub("stabilizer", cmd_stabilizer, optional=("element",), help="stabilizer of w or an element")
    sub("defect", cmd_defect, "pair", help="defect (A0, T0, r) of a pair")
    sub("complete-pair", cmd_complete_pair, "pair", help="complete to a non-degenerate pair")
    sub("envelope", cmd_envelope, "x", "y", help="sub-Witt-algebra containing x and y")
    sub("verify-local", cmd_verify_local, "probes", help="check the local property on probes")
    sub("verify-2local", cmd_verify_2local, "probes", help="check the 2-local property")
    sub("recover-local", cmd_recover_local, "probes", help="reconstruct a local map")
    sub("recover-2local", cmd_recover_2local, "probes", help="reconstruct a 2-local map")
    sub("shift", cmd_shift, "x", help="index shift on W_inf")
    sub("shift-witness", cmd_shift_witness, "x", optional=("y",), help="cyclic witness")
    sub("shift-demo", cmd_shift_demo, help="the shift: local, 2-local, not surjective")
    sub("selftest", cmd_selftest, help="run the acceptance criteria")
    return parser


def run(argv=None, out=None):
    """Run one command; returns the exit code."""
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, code = args.func(Ctx(args))
    except WittError as exc:
        payload, code = {"error": {"code": exc.code, "message": exc.message}}, exc.exit_code
    except RecursionError:
        payload, code = {"error": {"code": "ParseError", "message": "input nested too deeply"}}, 2
    out.write(ser.dumps(payload))
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
