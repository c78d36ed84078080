"""Checking and reconstructing local and 2-local automorphisms.

A map Phi is presented by a :class:`ProbeSet` (finitely many points with
known or computable images) together with a witness oracle.  The verifiers
test the defining property on the probes; the recovery procedures follow
the distinguished-element argument: one witness at w pins down a global
candidate theta, and every other witness, once known to fix w, must be the
identity on the envelope, which forces theta^-1 Phi to fix each probe.
"""

from dataclasses import dataclass, field as dc_field

from .autos import (apply_aut, build_distinguished, compose, identity_triple, invert,
                    stabilizer_of)
from .errors import (NotLinearOnProbes, PropertyViolation, RecoveryMismatch,
                     WitnessDoesNotFixW)
from .oracles import validated
from .pairs import envelope_of
from .witt import WittElement, graded_components


class ProbeSet:
    """Probe points of one algebra with their images under the map.

    Images may be given explicitly, computed by ``evaluate``, or left open;
    an open image is taken from the first oracle witness that covers it and
    every later witness must agree with that value.
    """

    def __init__(self, algebra, elements, images=None, evaluate=None):
        self.algebra = algebra
        self.evaluate = evaluate
        self.elements = []
        self._images = {}
        self.sources = {}
        images = list(images) if images is not None else [None] * len(elements)
        if len(images) != len(elements):
            raise ValueError("one image per probe expected")
        for x, img in zip(elements, images):
            if x.algebra != algebra or (img is not None and img.algebra != algebra):
                raise ValueError("probe outside the probe algebra")
            if x in self._images or x in self.sources:
                old = self._images.get(x)
                if img is not None and old is not None and old != img:
                    raise PropertyViolation(f"probe {x!r} listed with two different images")
                if img is not None:
                    self._images[x] = img
                continue
            self.elements.append(x)
            if img is not None:
                self._images[x] = img
                self.sources[x] = "given"
            else:
                self.sources[x] = None

    def __len__(self):
        return len(self.elements)

    def known(self, x):
        if x in self._images:
            return self._images[x]
        if self.evaluate is not None:
            v = self.evaluate(x)
            self._images[x] = v
            self.sources[x] = "evaluate"
            return v
        return None

    def image(self, x, witness=None):
        """Phi(x); falls back on ``witness(x)`` and records it."""
        v = self.known(x)
        if v is None and witness is not None:
            v = apply_aut(witness, x, check=False)
            self._images[x] = v
            self.sources[x] = "oracle"
        return v


@dataclass
class Report:
    kind: str
    checked: int = 0
    failures: list = dc_field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def fail(self, where, reason):
        self.failures.append({"probes": list(where), "reason": reason})


def _ask(oracle, alg, x, y=None):
    theta = oracle.single(x) if y is None else oracle.pair(x, y)
    return validated(alg, theta)


def verify_2local(probes, oracle, pairs=None):
    """Every ordered pair of probes (or the listed index pairs) is witnessed."""
    alg = probes.algebra
    els = probes.elements
    if pairs is None:
        pairs = [(i, j) for i in range(len(els)) for j in range(len(els))]
    rep = Report("2local")
    for i, j in pairs:
        x, y = els[i], els[j]
        rep.checked += 1
        theta = _ask(oracle, alg, x, y)
        if theta is None:
            rep.fail((i, j), "oracle has no witness")
            continue
        for k, z in ((i, x), (j, y)):
            if apply_aut(theta, z, check=False) != probes.image(z, theta):
                rep.fail((i, j), f"witness does not interpolate probe {k}")
                break
    return rep


def linearity_failures(probes):
    """Sums x + y and multiples c x present among the probes must be respected."""
    els = probes.elements
    index = {x: k for k, x in enumerate(els)}
    bad = []
    img = probes.known
    for a, x in enumerate(els):
        for b in range(a, len(els)):
            y = els[b]
            s = x + y
            k = index.get(s)
            if k is not None and img(x) is not None and img(y) is not None and img(s) is not None:
                if img(s) != img(x) + img(y):
                    bad.append(((a, b, k), "Phi(x + y) != Phi(x) + Phi(y)"))
        if not x.terms:
            if img(x) is not None and img(x).terms:
                bad.append(((a,), "Phi(0) != 0"))
            continue
        e0, d0 = x.sorted_terms()[0]
        for c, z in enumerate(els):
            if c == a or len(z) != len(x) or e0 not in z.terms:
                continue
            i0, v0 = d0[0]
            lam = probes.algebra.field.div(dict(z.terms[e0]).get(i0, 0), v0)
            if lam == 0 or x.scale(lam) != z:
                continue
            if img(x) is not None and img(z) is not None and img(z) != img(x).scale(lam):
                bad.append(((a, c), "Phi(c x) != c Phi(x)"))
    return bad


def verify_local(probes, oracle):
    """Per-element witnesses plus linearity on the probe combinations present.

    Raises NotLinearOnProbes when a sum or multiple among the probes is not
    respected; interpolation failures are reported.
    """
    alg = probes.algebra
    rep = Report("local")
    witnesses = []
    for x in probes.elements:
        theta = _ask(oracle, alg, x)
        witnesses.append(theta)
        if theta is not None:
            probes.image(x, theta)
    bad = linearity_failures(probes)
    if bad:
        raise NotLinearOnProbes(f"{bad[0][1]} at probes {list(bad[0][0])}")
    for k, (x, theta) in enumerate(zip(probes.elements, witnesses)):
        rep.checked += 1
        if theta is None:
            rep.fail((k,), "oracle has no witness")
        elif apply_aut(theta, x, check=False) != probes.image(x):
            rep.fail((k,), "witness does not interpolate")
    return rep


@dataclass
class Recovery:
    triple: object
    envelope: object
    certified: int = 0
    passes: dict = dc_field(default_factory=dict)
    queries: int = 0


class _Frame:
    """Distinguished elements of the envelope, written in ambient coordinates."""

    def __init__(self, alg, elements, constants=None):
        self.env = envelope_of(alg, elements)
        emb = self.env.embedding
        self.emb = emb
        self.sub_identity = identity_triple(emb.sub)
        self.w = {}
        for sign in (1, -1):
            d = build_distinguished(emb.sub, sign, constants)
            stab = stabilizer_of(d)
            if stab != [self.sub_identity]:
                raise PropertyViolation(f"stabilizer of w (sign {sign}) is not trivial")
            self.w[sign] = (d, emb.to_ambient(d.element))

    def certify_fixes(self, psi, sign, where):
        """psi fixes w, hence (trivial stabilizer) acts as the identity on the envelope."""
        w = self.w[sign][1]
        if apply_aut(psi, w, check=False) != w:
            raise WitnessDoesNotFixW(f"witness for {where} does not fix w")
        r = self.emb.restrict(psi)
        if r != self.sub_identity:
            raise WitnessDoesNotFixW(f"witness for {where} fixes w but moves the envelope")


def recover_2local(probes, oracle, constants=None):
    """Global triple reproducing a 2-local map on its probes."""
    alg = probes.algebra
    fr = _Frame(alg, probes.elements, constants)
    w = fr.w[1][1]
    theta = _ask(oracle, alg, w, w)
    if theta is None:
        raise RecoveryMismatch("oracle has no witness at (w, w)")
    if apply_aut(theta, w, check=False) != probes.image(w, theta):
        raise WitnessDoesNotFixW("witness at (w, w) does not interpolate w")
    inv = invert(alg, theta)
    n = 0
    for k, z in enumerate(probes.elements):
        tz = _ask(oracle, alg, w, z)
        if tz is None:
            raise RecoveryMismatch(f"oracle has no witness at (w, probe {k})")
        if apply_aut(tz, w, check=False) != probes.image(w):
            raise WitnessDoesNotFixW(f"witness at (w, probe {k}) moves Phi(w)")
        fr.certify_fixes(compose(alg, inv, tz), 1, f"(w, probe {k})")
        if apply_aut(inv, probes.image(z, tz), check=False) != z:
            raise RecoveryMismatch(f"theta^-1 Phi does not fix probe {k}")
        n += 1
    return Recovery(theta, fr.env, n, {"w": n}, oracle.queries)


def recover_local(probes, oracle, constants=None):
    """Global triple reproducing a local (linear) map on its probes.

    Probes are split into homogeneous components; components outside the
    exceptional set of w are certified through the witness at m + w, the
    rest through m + w' once w' itself has been certified.
    """
    alg = probes.algebra
    fr = _Frame(alg, probes.elements, constants)
    (_, w), (_, w2) = fr.w[1], fr.w[-1]
    theta = _ask(oracle, alg, w)
    if theta is None:
        raise RecoveryMismatch("oracle has no witness at w")
    if apply_aut(theta, w, check=False) != probes.image(w, theta):
        raise RecoveryMismatch("witness at w does not interpolate w")
    inv = invert(alg, theta)

    def phi(x):
        v = probes.known(x)
        if v is None:
            t = _ask(oracle, alg, x)
            if t is None:
                raise RecoveryMismatch(f"oracle has no witness at {x!r}")
            v = probes.image(x, t)
        return v

    # Phi must be additive over the decomposition of every probe.
    comps = {}
    for k, z in enumerate(probes.elements):
        parts = [c for _, c in graded_components(z)]
        img = phi(z)
        total = WittElement.zero(alg)
        for c in parts:
            comps.setdefault(c, None)
            total = total + phi(c)
        if total != img:
            raise NotLinearOnProbes(f"probe {k}: Phi is not additive over its components")
    for _, c in graded_components(w2):
        comps.setdefault(c, None)

    plus_exc = set(w.terms)
    first = [c for c in comps if next(iter(c.terms)) not in plus_exc]
    second = [c for c in comps if next(iter(c.terms)) in plus_exc]
    if set(w2.terms) & plus_exc:
        raise PropertyViolation("exceptional sets of w and w' overlap")

    def certify(m, base, sign):
        s = m + base
        v = probes.known(s)
        ts = _ask(oracle, alg, s)
        if ts is None:
            raise RecoveryMismatch(f"oracle has no witness at m + w for {m!r}")
        if v is None:
            v = probes.image(s, ts)
        if v != phi(m) + phi(base):
            raise NotLinearOnProbes(f"Phi(m + w) != Phi(m) + Phi(w) for {m!r}")
        fr.certify_fixes(compose(alg, inv, ts), sign, repr(m))
        if apply_aut(inv, phi(m), check=False) != m:
            raise RecoveryMismatch(f"theta^-1 Phi does not fix {m!r}")

    for m in first:
        certify(m, w, 1)
    if apply_aut(inv, phi(w2), check=False) != w2:
        raise RecoveryMismatch("theta^-1 Phi does not fix w'")
    for m in second:
        certify(m, w2, -1)
    for k, z in enumerate(probes.elements):
        if apply_aut(theta, z, check=False) != phi(z):
            raise RecoveryMismatch(f"recovered triple misses probe {k}")
    return Recovery(theta, fr.env, len(comps), {"w": len(first), "w_prime": len(second)},
                    oracle.queries)


def shift_demo(seed=0, samples=100, probes=50):
    """Run the W_inf shift through every check: injective, bracket preserving,
    witnessed pointwise and pairwise, yet not surjective."""
    import random

    from .oracles import ShiftOracle
    from .sampling import random_element
    from .shift import shift_is_not_surjective, shift_map, shift_witness
    from .witt import Algebra, bracket

    rng = random.Random(seed)
    alg = Algebra.infinite()
    xs = []
    seen = set()
    while len(xs) < samples:
        x = random_element(alg, rng, 4, dims=rng.randint(1, 5))
        if x not in seen:
            seen.add(x)
            xs.append(x)
    imgs = [shift_map(x) for x in xs]
    injective = len(set(imgs)) == len(xs)
    brackets = all(shift_map(bracket(xs[i], xs[-1 - i])) == bracket(imgs[i], imgs[-1 - i])
                   for i in range(samples))
    els = xs[:probes - 2] + [xs[0] + xs[1], xs[2].scale(3)]
    ps = ProbeSet(alg, els, evaluate=shift_map)
    loc = verify_local(ps, ShiftOracle())
    pairs = [(rng.randrange(len(els)), rng.randrange(len(els))) for _ in range(probes)]
    two = verify_2local(ProbeSet(alg, els, evaluate=shift_map), ShiftOracle(), pairs)
    cert = shift_is_not_surjective()
    witnesses = [(els[i], els[j], shift_witness(els[i], els[j])) for i, j in pairs[:3]]
    checks = {"injective": injective, "bracket_preserving": brackets,
              "local_witnessed": loc.passed and loc.checked == len(els),
              "2local_witnessed": two.passed and two.checked == len(pairs),
              "not_surjective": cert["accepted"]}
    return {"samples": list(zip(xs[:3], imgs[:3])), "checks": checks, "certificate": cert,
            "pair_witnesses": witnesses}
