"""The twelve acceptance criteria as runnable checks.

Each criterion returns ``(passed, detail)``; :func:`run_criteria` times them
and prints one ``PASS``/``FAIL`` line each.  All randomness is seeded.
"""

import random
import time
from dataclasses import dataclass
from itertools import combinations, product

from .autos import (apply_aut, build_distinguished, check_triple, compose, first_primes,
                    identity_triple, invert, is_identity, lemma23_bruteforce, lemma23_decide,
                    stabilizer_of)
from .errors import RecoveryMismatch
from .intlat import contains_lattice, int_identity
from .locality import ProbeSet, recover_2local, recover_local, shift_demo
from .oracles import TripleOracle
from .pairs import complete_pair, envelope, envelope_of, nondeg_defect, subspace_contains
from .sampling import (random_element, random_homogeneous, random_lattice, random_subspace,
                       random_triple)
from .scalars import QQ, QQX, RatFun
from .witt import Algebra, WittElement, bracket, is_simple


def _qx_algebra(phi_rows):
    return Algebra.general(phi_rows, QQX)


W2 = Algebra.witt(2)
W3 = Algebra.witt(3)
W4 = Algebra.witt(4)
X = RatFun.x()
WQX = _qx_algebra([[1, X]])                       # W(Z^2, V_1, (1, x))
WQX32 = _qx_algebra([[1, X, 0], [0, 1, X]])        # W(Z^3, V_2, ...)


def c1_lie_axioms():
    rng = random.Random(101)
    for alg, count in ((W3, 1000), (WQX, 200)):
        zero = WittElement.zero(alg)
        for _ in range(count):
            x, y, z = (random_element(alg, rng, 3) for _ in range(3))
            if bracket(x, y) + bracket(y, x) != zero:
                return False, f"anticommutativity fails in {alg!r}"
            j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
            if j != zero:
                return False, f"Jacobi fails in {alg!r}"
    return True, "1000 triples in W3, 200 in W(Z^2,V_1,(1,x))"


def c2_gradation():
    rng = random.Random(102)
    algs = (W2, W3, WQX)
    for k in range(500):
        alg = algs[k % 3]
        x = random_homogeneous(alg, rng)
        y = random_homogeneous(alg, rng)
        (a,), (b,) = x.terms, y.terms
        deg = tuple(sorted((dict(a).keys() | dict(b).keys())))
        target = tuple((i, dict(a).get(i, 0) + dict(b).get(i, 0)) for i in deg)
        target = tuple(p for p in target if p[1] != 0)
        if any(e != target for e in bracket(x, y).terms):
            return False, f"bracket of degrees {a}, {b} leaves degree {target}"
    return True, "500 homogeneous pairs"


def c3_automorphisms():
    rng = random.Random(103)
    for k in range(100):
        alg = W2 if k % 2 == 0 else W3
        th = random_triple(alg, rng)
        if not check_triple(alg, th):
            return False, "generated triple invalid"
        for _ in range(20):
            x, y = random_element(alg, rng, 3), random_element(alg, rng, 3)
            if apply_aut(th, bracket(x, y)) != bracket(apply_aut(th, x), apply_aut(th, y)):
                return False, f"bracket not preserved by {th}"
        a, b = random_triple(alg, rng), random_triple(alg, rng)
        if not is_identity(alg, compose(alg, th, invert(alg, th))):
            return False, "theta o theta^-1 != id"
        if not is_identity(alg, compose(alg, invert(alg, th), th)):
            return False, "theta^-1 o theta != id"
        if compose(alg, compose(alg, th, a), b) != compose(alg, th, compose(alg, a, b)):
            return False, "compose not associative"
        x = random_element(alg, rng)
        if apply_aut(compose(alg, th, a), x) != apply_aut(th, apply_aut(a, x)):
            return False, "apply does not respect compose"
    return True, "100 triples x 20 pairs, group laws"


def c4_simplicity():
    for n in range(1, 5):
        if not is_simple(Algebra.witt(n)):
            return False, f"W_{n} reported not simple"
    if not is_simple(WQX):
        return False, "(1, x) over Q(x) reported not simple"
    if is_simple(Algebra.witt(0)):
        return False, "n = 0 reported simple"
    rng = random.Random(104)
    for _ in range(50):
        n = rng.randint(2, 4)
        m = rng.randint(1, n - 1)
        phi = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
        if is_simple(Algebra.general(phi, QQ)):
            return False, f"m < n pairing {phi} reported simple"
    return True, "W_1..W_4, (1,x) simple; n=0 and 50 m<n pairings not"


def _covering_subsets(n, sp):
    per_axis = [[p for p in sp if p[1] == i] for i in range(1, n + 1)]
    choices = [[c for r in (1, 2) for c in combinations(ax, r)] for ax in per_axis]
    for pick in product(*choices):
        yield [p for part in pick for p in part]


def c5_lemma23():
    count = 0
    for n in (1, 2, 3):
        ks = first_primes(2 * n)
        sp = [(k, i // 2 + 1) for i, k in enumerate(ks)]
        ident = int_identity(n)
        for s in _covering_subsets(n, sp):
            res = lemma23_decide(n, s, sp)
            count += 1
            if res.sigmas != (ident,):
                return False, f"n={n}, S={s}: {res.sigmas}"
            if n <= 2:
                brute = lemma23_bruteforce(n, s, sp, 8)
                bounded = tuple(m for m in res.sigmas if all(abs(v) <= 8 for r in m for v in r))
                if brute != bounded:
                    return False, f"brute force disagrees for n={n}, S={s}"
    return True, f"{count} covering subsets, brute force (bound 8) agrees for n <= 2"


def c6_stabilizers():
    cases = [(Algebra.witt(1), None), (W2, None), (W3, None), (WQX, None), (WQX32, None)]
    alts = {1: (4, 9), 2: (4, 9, 5, 7), 3: (4, 9, 5, 7, 11, 13)}
    for alg, _ in cases:
        ident = identity_triple(alg)
        for consts in (None, alts[alg.rank]):
            for sign in (1, -1):
                stab = stabilizer_of(build_distinguished(alg, sign, consts))
                if stab != [ident]:
                    return False, f"{alg!r} constants {consts} sign {sign}: {len(stab)} triples"
    w1 = Algebra.witt(1)
    ctrl = WittElement(w1, [(((1, 2),), ((1, 1),)), (((1, 4),), ((1, 1),))])
    stab = stabilizer_of(ctrl)
    if len(stab) != 2 or {s.chi for s in stab} != {(1,), (-1,)}:
        return False, f"negative control stabilizer {stab}"
    return True, "trivial for 5 algebras x 2 constant sets x 2 signs; control has size 2"


def c7_completion():
    rng = random.Random(107)
    for _ in range(200):
        lat = random_lattice(4, rng)
        sub = random_subspace(QQ, 4, rng)
        pair, initial, steps = complete_pair(W4, lat, sub)
        main = [s for s in steps if s.kind != "seed"]
        if len(main) > initial:
            return False, f"{len(main)} steps for initial r = {initial}"
        rs = [initial] + [s.r for s in main]
        if any(b >= a for a, b in zip(rs, rs[1:])):
            return False, f"r-trace {rs} not strictly decreasing"
        d = nondeg_defect(W4, pair.lattice, pair.subspace)
        if d.r != 0:
            return False, "final defect nonzero"
        if not contains_lattice(pair.lattice, lat):
            return False, "output lattice misses an input generator"
        if not all(subspace_contains(QQ, pair.subspace, v) for v in sub):
            return False, "output subspace misses an input vector"
    return True, "200 random pairs in W4"


def c8_envelope():
    rng = random.Random(108)
    algs = (W3, W4, WQX, WQX32)
    for k in range(200):
        alg = algs[k % 4]
        x = random_element(alg, rng, 3) if rng.random() > 0.05 else WittElement.zero(alg)
        y = random_element(alg, rng, 3)
        env = envelope(x, y)
        if not is_simple(env.sub):
            return False, f"restricted algebra {env.sub!r} not simple"
        for z in (x, y):
            zs = env.embedding.to_sub(z)
            if zs is None or env.embedding.to_ambient(zs) != z:
                return False, "element not in the envelope"
    return True, "200 pairs over Q and Q(x)"


def _roundtrip(recover, k, rng, exceptional=False):
    alg = (W2, W3, WQX)[k % 3]
    th = random_triple(alg, rng)
    probes = [random_element(alg, rng, 3) for _ in range(3)]
    if exceptional:
        env = envelope_of(alg, probes)
        w = env.embedding.to_ambient(build_distinguished(env.sub).element)
        probes += [WittElement(alg, {e: d}) for e, d in list(w.terms.items())[:2]]
    ps = ProbeSet(alg, probes, evaluate=lambda z: apply_aut(th, z))
    rec = recover(ps, TripleOracle(alg, th, rng))
    emb = rec.envelope.embedding
    for _ in range(50):
        z = emb.to_ambient(random_element(emb.sub, rng, 3))
        if apply_aut(rec.triple, z) != apply_aut(th, z):
            return False, rec
    return True, rec


def _scaling_probe():
    w1 = Algebra.witt(1)
    z = WittElement(w1, [(((1, 2),), ((1, 1),))])

    def phi(v):
        return WittElement(w1, {e: (tuple((i, 2 * c) for i, c in d) if e == ((1, 2),) else d)
                                for e, d in v.terms.items()})
    return w1, z, phi


def c9_recover_2local():
    rng = random.Random(109)
    for k in range(100):
        ok, rec = _roundtrip(recover_2local, k, rng)
        if not ok:
            return False, f"round trip {k} disagrees off the probes"
    w1, z, phi = _scaling_probe()
    try:
        recover_2local(ProbeSet(w1, [z], evaluate=phi), TripleOracle(w1, identity_triple(w1)))
    except RecoveryMismatch:
        return True, "100 round trips exact; scaling map rejected"
    return False, "scaling map was not rejected"


def c10_recover_local():
    rng = random.Random(110)
    wp = 0
    for k in range(100):
        ok, rec = _roundtrip(recover_local, k, rng, exceptional=(k % 2 == 0))
        if not ok:
            return False, f"round trip {k} disagrees off the probes"
        if k % 2 == 0:
            if rec.passes.get("w_prime", 0) == 0:
                return False, f"round trip {k}: exceptional probes not routed to the w' pass"
            wp += 1
    w1, z, phi = _scaling_probe()
    try:
        recover_local(ProbeSet(w1, [z], evaluate=phi), TripleOracle(w1, identity_triple(w1)))
    except RecoveryMismatch:
        return True, f"100 round trips exact ({wp} with w' pass); scaling map rejected"
    return False, "scaling map was not rejected"


def c11_shift():
    demo = shift_demo(111)
    bad = [k for k, v in demo["checks"].items() if not v]
    if bad:
        return False, f"failed: {bad}"
    if not demo["certificate"]["accepted"]:
        return False, "certificate for d_1 rejected"
    return True, "injective, bracket preserving, local and 2-local witnessed, d_1 certified"


def c12_golden():
    from .golden import check_all
    bad, total = check_all()
    if bad:
        return False, f"{len(bad)}/{total} golden cases differ: {bad[:3]}"
    return True, f"{total} golden cases byte-identical"


CRITERIA = {
    1: ("Lie axioms", c1_lie_axioms, 10),
    2: ("gradation", c2_gradation, 5),
    3: ("automorphism action and group laws", c3_automorphisms, 30),
    4: ("simplicity criterion", c4_simplicity, 5),
    5: ("sigma(S) in S' rigidity", c5_lemma23, 60),
    6: ("stabilizer of w", c6_stabilizers, 30),
    7: ("pair completion", c7_completion, 30),
    8: ("two-element envelope", c8_envelope, 30),
    9: ("2-local recovery", c9_recover_2local, 60),
    10: ("local recovery", c10_recover_local, 60),
    11: ("W_inf shift", c11_shift, 10),
    12: ("CLI golden files", c12_golden, 10),
}


@dataclass
class Result:
    id: int
    name: str
    passed: bool
    detail: str
    seconds: float
    budget: float


def run_criterion(k):
    name, fn, budget = CRITERIA[k]
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failure, reported like one
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    dt = time.perf_counter() - t0
    if ok and dt > budget:
        ok, detail = False, f"{detail}; took {dt:.1f} s > {budget} s"
    return Result(k, name, ok, detail, dt, budget)


def run_criteria(only=None, log=None):
    out = []
    for k in sorted(only or CRITERIA):
        r = run_criterion(k)
        out.append(r)
        if log is not None:
            print(f"{'PASS' if r.passed else 'FAIL'} criterion {k:2d} {r.name}: {r.detail} "
                  f"[{r.seconds:.2f} s / {r.budget} s]", file=log)
    return out
