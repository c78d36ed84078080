"""Witness oracles: the interface through which a local or 2-local map is presented.

An oracle answers ``single(x)`` and ``pair(x, y)`` with a triple that is
claimed to interpolate the map at the queried points, or None when it has no
witness.  Callers never trust the answer; see :func:`validated`.
"""

import json
import shlex
import subprocess
from itertools import product

from . import kernels
from .autos import (AutTriple, _transform, apply_aut, check_triple, compose, identity_triple,
                    proportionality, solve_character, solve_tau)
from .errors import OracleInvalidTriple, SearchSpaceTooLarge
from .shift import shift_witness
from .witt import to_dense


def validated(alg, theta):
    """Re-check an oracle answer; a non-automorphism is a typed error."""
    if theta is None:
        return None
    if not isinstance(theta, AutTriple):
        raise OracleInvalidTriple(f"oracle answered {type(theta).__name__}, not a triple")
    try:
        res = check_triple(alg, theta)
    except Exception as exc:
        raise OracleInvalidTriple(f"malformed triple: {exc}") from None
    if not res:
        raise OracleInvalidTriple(res.reason)
    return theta


class WitnessOracle:
    """Base class; subclasses implement :meth:`pair`."""

    def __init__(self):
        self.queries = 0

    def pair(self, x, y):
        raise NotImplementedError

    def single(self, x):
        return self.pair(x, x)

    def close(self):
        pass

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def _sign_choices(n, exps):
    """Sign characters (as 0/1 vectors) trivial on every exponent in ``exps``."""
    out = []
    for c in product((0, 1), repeat=n):
        if all(sum(ci * int(a) for ci, a in zip(c, e)) % 2 == 0 for e in exps):
            out.append(c)
    return out


class TripleOracle(WitnessOracle):
    """Simulates the map ``x -> theta(x)``.

    Given an ``rng`` the answer is ``theta o psi`` with psi a random sign
    character fixing the queried elements, so that callers cannot rely on
    getting the same triple twice.
    """

    def __init__(self, alg, theta, rng=None, max_sign_rank=8):
        super().__init__()
        self.alg = alg
        self.theta = validated(alg, theta)
        self.rng = rng
        self.max_sign_rank = max_sign_rank

    def pair(self, x, y):
        self.queries += 1
        n = self.alg.rank
        if self.rng is None or self.alg.is_infinite or n > self.max_sign_rank:
            return self.theta
        exps = [to_dense(e, n) for z in (x, y) for e in z.terms]
        c = self.rng.choice(_sign_choices(n, exps))
        if not any(c):
            return self.theta
        ident = identity_triple(self.alg)
        psi = AutTriple(tuple(-1 if ci else 1 for ci in c), ident.sigma, ident.tau)
        return compose(self.alg, self.theta, psi)


class ShiftOracle(WitnessOracle):
    """Cyclic-permutation witnesses for the shift on W_inf."""

    def pair(self, x, y):
        self.queries += 1
        return shift_witness(x, y)

    def single(self, x):
        self.queries += 1
        return shift_witness(x)


class SearchOracle(WitnessOracle):
    """Looks for an interpolating triple by bounded search.

    sigma ranges over unimodular matrices with entries in [-bound, bound]
    that carry each queried support onto the support of its image; tau is
    then forced by compatibility and chi by the term ratios.  A None answer
    only says that no witness exists inside the bound.
    """

    def __init__(self, alg, evaluate, bound=1, cap=10 ** 6):
        super().__init__()
        self.alg = alg
        self.evaluate = evaluate
        self.bound = bound
        self.cap = cap

    def _sigmas(self):
        n, b = self.alg.rank, self.bound
        total = (2 * b + 1) ** (n * n)
        if total > self.cap:
            raise SearchSpaceTooLarge(f"{total} candidate matrices exceed the cap {self.cap}")
        for flat in product(range(-b, b + 1), repeat=n * n):
            if kernels.det_small(flat, n) in (1, -1):
                yield tuple(tuple(flat[r * n:(r + 1) * n]) for r in range(n))

    def pair(self, x, y):
        self.queries += 1
        alg, f, n = self.alg, self.alg.field, self.alg.rank
        pts = [x] if x == y else [x, y]
        imgs = [self.evaluate(z) for z in pts]
        supp = [({tuple(to_dense(e, n)) for e in z.terms}, {tuple(to_dense(e, n)) for e in v.terms})
                for z, v in zip(pts, imgs)]
        if any(len(a) != len(b) for a, b in supp):
            return None
        for sigma in self._sigmas():
            if any({tuple(sum(r[k] * v[k] for k in range(n)) for r in sigma) for v in a} != b
                   for a, b in supp):
                continue
            tau = solve_tau(alg, sigma)
            if tau is None:
                continue
            exps, targets, ok = [], [], True
            for z, v in zip(pts, imgs):
                for e, d in z.terms.items():
                    mu = proportionality(f, v.terms[_transform(sigma, e, n)],
                                         _transform(tau, d, alg.dim))
                    if mu is None:
                        ok = False
                        break
                    exps.append(to_dense(e, n))
                    targets.append(mu)
                if not ok:
                    break
            if not ok:
                continue
            sols, _ = solve_character(f, exps, targets) if exps else ([(1,) * n], n)
            for chi in sols:
                theta = AutTriple(tuple(chi), sigma, tau)
                if check_triple(alg, theta) and all(apply_aut(theta, z) == v
                                                    for z, v in zip(pts, imgs)):
                    return theta
        return None


class ExecOracle(WitnessOracle):
    """An external process answering one JSON request per line.

    Request: ``{"kind": "pair"|"single", "x": <element>, "y": <element>}``.
    Response: a triple object, ``null``, or ``{"error": ...}``.
    """

    def __init__(self, alg, command, timeout=30):
        super().__init__()
        from . import serialize
        self._ser = serialize
        self.alg = alg
        self.timeout = timeout
        argv = shlex.split(command) if isinstance(command, str) else list(command)
        self.proc = subprocess.Popen(argv, stdin=subprocess.PIPE, stdout=subprocess.PIPE,
                                     text=True, bufsize=1)

    def _ask(self, req):
        self.queries += 1
        self.proc.stdin.write(json.dumps(req, sort_keys=True) + "\n")
        self.proc.stdin.flush()
        line = self.proc.stdout.readline()
        if not line:
            raise OracleInvalidTriple("oracle process closed its output")
        try:
            ans = json.loads(line)
        except json.JSONDecodeError:
            raise OracleInvalidTriple(f"oracle sent invalid JSON: {line.strip()!r}") from None
        if ans is None or (isinstance(ans, dict) and "error" in ans):
            return None
        try:
            return self._ser.triple_from_json(self.alg, ans)
        except Exception as exc:
            raise OracleInvalidTriple(f"oracle sent a malformed triple: {exc}") from None

    def pair(self, x, y):
        return self._ask({"kind": "pair", "x": self._ser.element_to_json(x),
                          "y": self._ser.element_to_json(y)})

    def single(self, x):
        return self._ask({"kind": "single", "x": self._ser.element_to_json(x)})

    def close(self):
        if self.proc.poll() is None:
            self.proc.stdin.close()
            try:
                self.proc.wait(self.timeout)
            except subprocess.TimeoutExpired:
                self.proc.kill()
