import json
import random
import sys
from pathlib import Path

import pytest

from helpers import INF, W1, W2, W3, WQX, mono
from wittaut.autos import (AutTriple, apply_aut, build_distinguished, identity_triple,
                           is_identity, triples_equal)
from wittaut.errors import (NotLinearOnProbes, OracleInvalidTriple, RecoveryMismatch,
                            WitnessDoesNotFixW)
from wittaut.locality import (ProbeSet, recover_2local, recover_local, verify_2local,
                              verify_local)
from wittaut.oracles import ExecOracle, SearchOracle, ShiftOracle, TripleOracle, WitnessOracle
from wittaut.sampling import random_element, random_triple
from wittaut.serialize import triple_to_json
from wittaut.shift import shift_map
from wittaut.witt import WittElement

HELPER = str(Path(__file__).with_name("oracle_helper.py"))


def probes_for(alg, theta, rng, count=6):
    els = [random_element(alg, rng, 3) for _ in range(count)]
    return ProbeSet(alg, els, evaluate=lambda x: apply_aut(theta, x))


def shift_probes(rng, count=5):
    els = [random_element(INF, rng, 3, dims=4) for _ in range(count)]
    return ProbeSet(INF, els, [shift_map(x) for x in els])


def scaling_probes():
    x = mono(W1, [2], [1])
    return ProbeSet(W1, [x], [x.scale(2)])


class FixedPairOracle(WitnessOracle):
    """Answers (w, w) with one triple and everything else with another."""

    def __init__(self, first, other):
        super().__init__()
        self.first, self.other = first, other

    def pair(self, x, y):
        self.queries += 1
        return self.first if x == y else self.other


def test_verify_2local_identity(rng):
    ident = identity_triple(W2)
    p = probes_for(W2, ident, rng)
    rep = verify_2local(p, TripleOracle(W2, ident))
    assert rep.passed and rep.checked == len(p) ** 2


def test_verify_2local_shift(rng):
    assert verify_2local(shift_probes(rng), ShiftOracle()).passed


def test_verify_2local_scaling_fails():
    p = scaling_probes()
    rep = verify_2local(p, SearchOracle(W1, p.known, bound=2))
    assert not rep.passed


def test_verify_local(rng):
    assert verify_local(probes_for(W2, identity_triple(W2), rng), TripleOracle(W2, identity_triple(W2))).passed
    assert verify_local(shift_probes(rng), ShiftOracle()).passed


def test_verify_local_nonlinear():
    a, b = mono(W1, [1], [1]), mono(W1, [3], [1])
    p = ProbeSet(W1, [a, b, a + b], [a, b, a.scale(2) + b])
    with pytest.raises(NotLinearOnProbes):
        verify_local(p, TripleOracle(W1, identity_triple(W1)))


def test_missing_images_come_from_witness(rng):
    t = random_triple(W2, rng)
    els = [random_element(W2, rng, 2) for _ in range(3)]
    p = ProbeSet(W2, els)
    assert verify_2local(p, TripleOracle(W2, t, random.Random(1))).passed
    assert set(p.sources.values()) == {"oracle"}


@pytest.mark.parametrize("alg", [W2, W3, WQX])
def test_recover_2local_roundtrip(alg):
    rng = random.Random(21)
    for _ in range(4):
        t = random_triple(alg, rng)
        p = probes_for(alg, t, rng, 4)
        rec = recover_2local(p, TripleOracle(alg, t, random.Random(2)))
        assert triples_equal(alg, rec.triple, t)
        assert rec.certified == len(p.elements)


@pytest.mark.parametrize("alg", [W2, W3, WQX])
def test_recover_local_roundtrip(alg):
    rng = random.Random(22)
    for _ in range(4):
        t = random_triple(alg, rng)
        p = probes_for(alg, t, rng, 4)
        rec = recover_local(p, TripleOracle(alg, t, random.Random(3)))
        assert triples_equal(alg, rec.triple, t)


def test_recover_identity():
    p = ProbeSet(W2, [mono(W2, [1, 1], [1, 2])], evaluate=lambda x: x)
    oracle = TripleOracle(W2, identity_triple(W2))
    assert is_identity(W2, recover_2local(p, oracle).triple)
    assert is_identity(W2, recover_local(p, oracle).triple)


def test_recover_local_exceptional_probe():
    w = build_distinguished(W2).element
    k1 = next(iter(sorted(w.terms)))
    exceptional = WittElement(W2, {k1: w.terms[k1]})
    # the envelope is all of W2, so w is written in the ambient coordinates
    spanning = [mono(W2, [1, 0], [1, 0]), mono(W2, [0, 1], [0, 1])]
    p = ProbeSet(W2, spanning + [exceptional], evaluate=lambda x: x)
    rec = recover_local(p, TripleOracle(W2, identity_triple(W2)))
    assert rec.passes["w_prime"] >= 1


def test_recover_scaling_mismatch():
    with pytest.raises(RecoveryMismatch):
        recover_2local(scaling_probes(), TripleOracle(W1, identity_triple(W1)))


def test_witness_must_fix_w():
    ident = identity_triple(W1)
    chi2 = AutTriple((2,), ((1,),), ((1,),))
    p = ProbeSet(W1, [mono(W1, [1], [1])], evaluate=lambda x: x)
    with pytest.raises(WitnessDoesNotFixW):
        recover_2local(p, FixedPairOracle(ident, chi2))


def test_triple_oracle_perturbation_agrees_on_query(rng):
    t = random_triple(W3, rng)
    o = TripleOracle(W3, t, random.Random(0))
    for _ in range(20):
        x, y = random_element(W3, rng, 2), random_element(W3, rng, 2)
        s = o.pair(x, y)
        assert apply_aut(s, x) == apply_aut(t, x) and apply_aut(s, y) == apply_aut(t, y)


def test_search_oracle_finds_swap():
    swap = AutTriple((1, 1), ((0, 1), (1, 0)), ((0, 1), (1, 0)))
    x = mono(W2, [2, 1], [1, 3])
    o = SearchOracle(W2, lambda z: apply_aut(swap, z))
    s = o.single(x)
    assert apply_aut(s, x) == apply_aut(swap, x)


def test_exec_oracle_shift(rng):
    with ExecOracle(INF, [sys.executable, HELPER, "shift"]) as o:
        assert verify_2local(shift_probes(rng, 3), o).passed
        assert o.queries == 9


def test_exec_oracle_fixed_and_none(rng):
    t = random_triple(W2, rng)
    cmd = [sys.executable, HELPER, "fixed", json.dumps(triple_to_json(W2, t))]
    with ExecOracle(W2, cmd) as o:
        rec = recover_2local(probes_for(W2, t, rng, 2), o)
        assert triples_equal(W2, rec.triple, t)
    with ExecOracle(W2, [sys.executable, HELPER, "none"]) as o:
        rep = verify_2local(probes_for(W2, t, rng, 2), o)
        assert not rep.passed and "no witness" in rep.failures[0]["reason"]


def test_exec_oracle_garbage(rng):
    with ExecOracle(W2, [sys.executable, HELPER, "garbage"]) as o:
        with pytest.raises(OracleInvalidTriple):
            o.single(mono(W2, [1, 0], [1, 0]))


def test_oracle_invalid_triple(rng):
    bad = {"chi": ["1", "1"], "sigma": [[1, 0], [0, 1]], "tau": [["2", "0"], ["0", "2"]]}
    with ExecOracle(W2, [sys.executable, HELPER, "fixed", json.dumps(bad)]) as o:
        with pytest.raises(OracleInvalidTriple):
            verify_2local(probes_for(W2, identity_triple(W2), rng, 1), o)
