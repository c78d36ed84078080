"""Golden-file corpus for the CLI.

``CASES`` lists argument vectors; ``python -m wittaut.golden --regen``
writes their outputs and exit codes under ``golden/``.  :func:`check_all`
replays the stored manifest and compares stdout byte for byte.
"""

import io
import json
import sys
from pathlib import Path

from . import cli

GOLDEN_DIR = Path(__file__).with_name("golden")


def _el(alg, terms):
    return json.dumps({"algebra": alg, "terms": [{"exp": e, "tan": t} for e, t in terms]})


W1 = {"rank": 1, "dim": 1, "phi": "kronecker"}
W2 = {"rank": 2, "dim": 2, "phi": "kronecker"}
W3 = {"rank": 3, "dim": 3, "phi": "kronecker"}
QX = {"rank": 2, "dim": 1, "field": "Q(x)", "phi": [["1", "x"]]}
INF = {"rank": "inf", "dim": "inf", "phi": "kronecker"}

X2 = _el(W2, [([1, 0], ["1", "0"]), ([0, 1], ["0", "1"])])
Y2 = _el(W2, [([2, 1], ["1", "1"])])
XQ = _el(QX, [([1, 0], ["1"]), ([0, 2], [{"num": ["0", "1"], "den": ["1"]}])])
YQ = _el(QX, [([1, -1], ["1/2"])])
SWAP = json.dumps({"chi": ["1", "1"], "sigma": [[0, 1], [1, 0]], "tau": [["0", "1"], ["1", "0"]]})
SHEAR = json.dumps({"chi": ["2", "-1/3"], "sigma": [[1, 1], [0, 1]], "tau": [["1", "0"], ["-1", "1"]]})
BAD = json.dumps({"chi": ["1", "1"], "sigma": [[1, 0], [0, 1]], "tau": [["2", "0"], ["0", "2"]]})
CHI2 = json.dumps({"chi": ["2"], "sigma": [[1]], "tau": [["1"]]})
CHI3 = json.dumps({"chi": ["3"], "sigma": [[1]], "tau": [["1"]]})
QXNEG = json.dumps({"chi": [{"num": ["1", "1"], "den": ["1"]}, "2"], "sigma": [[-1, 0], [0, -1]],
                    "tau": [["-1"]]})
IDENT1 = json.dumps({"chi": ["1"], "sigma": [[1]], "tau": [["1"]]})

PROBES2 = json.dumps({"algebra": W2, "probes": [
    {"terms": [{"exp": [1, 0], "tan": ["1", "0"]}]},
    {"terms": [{"exp": [0, 1], "tan": ["0", "1"]}]},
    {"terms": [{"exp": [1, 0], "tan": ["1", "0"]}, {"exp": [0, 1], "tan": ["0", "1"]}]},
    {"terms": [{"exp": [2, -1], "tan": ["3", "1"]}]}]})
PROBESQ = json.dumps({"algebra": QX, "probes": [
    {"terms": [{"exp": [1, 0], "tan": ["1"]}]},
    {"terms": [{"exp": [0, 3], "tan": ["2/3"]}, {"exp": [-1, 1], "tan": ["1"]}]}]})
SCALE = json.dumps({"algebra": W1, "probes": [{"terms": [{"exp": [2], "tan": ["1"]}]}],
                    "images": [{"terms": [{"exp": [2], "tan": ["2"]}]}]})
SCALE_ID = json.dumps({"algebra": W1, "probes": [{"terms": [{"exp": [1], "tan": ["1"]}]},
                                                 {"terms": [{"exp": [-1], "tan": ["5"]}]}]})
NONLIN = json.dumps({"algebra": W1, "probes": [
    {"terms": [{"exp": [1], "tan": ["1"]}]}, {"terms": [{"exp": [3], "tan": ["1"]}]},
    {"terms": [{"exp": [1], "tan": ["1"]}, {"exp": [3], "tan": ["1"]}]}],
    "images": [{"terms": [{"exp": [1], "tan": ["1"]}]}, {"terms": [{"exp": [3], "tan": ["1"]}]},
               {"terms": [{"exp": [1], "tan": ["2"]}, {"exp": [3], "tan": ["1"]}]}]})
SHIFTP = json.dumps({"algebra": INF, "probes": [
    {"terms": [{"exp": {"1": 2}, "tan": {"1": "1"}}]},
    {"terms": [{"exp": {"2": -1, "3": 1}, "tan": {"1": "1", "3": "-2"}}]},
    {"terms": [{"exp": {}, "tan": {"2": "1"}}]}]})
XI = _el(INF, [({"1": 2}, {"1": "1"})])
YI = _el(INF, [({"1": 1, "2": 1}, {"2": "1"})])

CASES = {
    "bracket_w2": ["bracket", X2, Y2],
    "bracket_qx": ["bracket", XQ, YQ],
    "bracket_zero": ["bracket", _el(W2, []), Y2],
    "bracket_mismatch": ["bracket", X2, XQ],
    "act_w2": ["act", X2, "[2, 3]"],
    "act_w1": ["act", _el(W1, [([1], ["2"])]), "[3]"],
    "act_qx_error": ["act", XQ, "[1, 1]"],
    "simple_w3": ["simple-check", "--algebra", json.dumps(W3)],
    "simple_qx": ["simple-check", "--algebra", json.dumps(QX)],
    "simple_degenerate": ["simple-check", "--algebra", json.dumps(
        {"rank": 2, "dim": 1, "phi": [["1", "2"]]})],
    "simple_rank0": ["simple-check", "--algebra", "0"],
    "autcheck_swap": ["aut-check", "--algebra", "2", SWAP],
    "autcheck_bad": ["aut-check", "--algebra", "2", BAD],
    "autcheck_qx": ["aut-check", "--algebra", json.dumps(QX), QXNEG],
    "autapply_swap": ["aut-apply", "--algebra", "2", SWAP, _el(W2, [([1, 2], ["1", "0"])])],
    "autapply_chi": ["aut-apply", "--algebra", "1", CHI2, _el(W1, [([3], ["1"])])],
    "autapply_invalid": ["aut-apply", "--algebra", "2", BAD, X2],
    "compose_chi": ["aut-compose", "--algebra", "1", CHI2, CHI3],
    "compose_swap": ["aut-compose", "--algebra", "2", SWAP, SWAP],
    "compose_shear": ["aut-compose", "--algebra", "2", SHEAR, SWAP],
    "invert_shear": ["aut-invert", "--algebra", "2", SHEAR],
    "invert_qx": ["aut-invert", "--algebra", json.dumps(QX), QXNEG],
    "wnm_21": ["wnm", "--algebra", json.dumps(QX), "--constants", "2,3,5,7"],
    "wnm_w3_neg": ["wnm", "--algebra", "3", "--sign", "-1"],
    "wnm_notcoprime": ["wnm", "--algebra", "2", "--constants", "2,4,3,5"],
    "wnm_small": ["wnm", "--algebra", "1", "--constants", "1,3"],
    "lemma23_n1": ["lemma23", '{"n": 1, "S": [[2, 1]], "S_prime": [[2, 1], [3, 1]]}'],
    "lemma23_n2": ["lemma23", '{"n": 2, "constants": [2, 3, 5, 7]}'],
    "lemma23_flag": ["lemma23", '{"n": 1, "S": [[2, 1]], "S_prime": [[2, 1], [-2, 1]]}'],
    "lemma23_uncovered": ["lemma23", '{"n": 2, "S": [[2, 1]], "S_prime": [[2, 1], [3, 1], [5, 2], [7, 2]]}'],
    "brute_n1": ["lemma23-brute", '{"n": 1, "S": [[2, 1]], "S_prime": [[2, 1], [3, 1]]}',
                 "--bound", "3"],
    "brute_n2": ["lemma23-brute", '{"n": 2, "constants": [2, 3, 5, 7]}', "--bound", "1"],
    "brute_bound0": ["lemma23-brute", '{"n": 2, "constants": [2, 3, 5, 7]}', "--bound", "0"],
    "brute_cap": ["lemma23-brute", '{"n": 3, "constants": [2, 3, 5, 7, 11, 13]}',
                  "--bound", "8", "--cap", "1000"],
    "stab_w1": ["stabilizer", "--algebra", "1"],
    "stab_qx": ["stabilizer", "--algebra", json.dumps(QX), "--constants", "2,3,5,7"],
    "stab_control": ["stabilizer", _el(W1, [([2], ["1"]), ([4], ["1"])])],
    "stab_w2_neg": ["stabilizer", "--algebra", "2", "--sign", "-1"],
    "defect_w2": ["defect", "--algebra", "2", '{"lattice": [[1, 0]], "subspace": [["0", "1"]]}'],
    "defect_full": ["defect", "--algebra", "2",
                    '{"lattice": [[1, 0], [0, 1]], "subspace": [["1", "0"], ["0", "1"]]}'],
    "defect_empty": ["defect", "--algebra", "2", '{"lattice": [], "subspace": []}'],
    "defect_degenerate": ["defect", "--algebra", json.dumps({"rank": 2, "dim": 1, "phi": [["1", "1"]]}),
                          '{"lattice": [], "subspace": []}'],
    "complete_w2": ["complete-pair", "--algebra", "2",
                    '{"lattice": [[1, 0]], "subspace": [["0", "1"]]}'],
    "complete_w3": ["complete-pair", "--algebra", "3",
                    '{"lattice": [[0, 0, 1]], "subspace": [["1", "0", "0"]]}'],
    "complete_done": ["complete-pair", "--algebra", "2",
                      '{"lattice": [[1, 0], [0, 1]], "subspace": [["1", "0"], ["0", "1"]]}'],
    "complete_zero": ["complete-pair", "--algebra", json.dumps(QX), '{"lattice": [], "subspace": []}'],
    "envelope_w3": ["envelope", _el(W3, [([1, 0, 0], ["1", "0", "0"])]),
                    _el(W3, [([0, 1, 0], ["0", "1", "0"])])],
    "envelope_zero": ["envelope", _el(W3, []), _el(W3, [])],
    "envelope_step": ["envelope", _el(W3, [([0, 0, 1], ["1", "0", "0"])]), _el(W3, [])],
    "envelope_qx": ["envelope", XQ, YQ],
    "vlocal_triple": ["verify-local", PROBES2, "--oracle", "builtin:" + SHEAR],
    "vlocal_shift": ["verify-local", SHIFTP, "--oracle", "builtin:shift"],
    "vlocal_nonlinear": ["verify-local", NONLIN, "--oracle", "builtin:" + IDENT1],
    "vlocal_scale": ["verify-local", SCALE, "--oracle", "builtin:search"],
    "v2local_triple": ["verify-2local", PROBESQ, "--oracle", "builtin:" + QXNEG, "--seed", "3"],
    "v2local_shift": ["verify-2local", SHIFTP, "--oracle", "builtin:shift"],
    "v2local_scale": ["verify-2local", SCALE, "--oracle", "builtin:search"],
    "v2local_identity": ["verify-2local", SCALE_ID, "--oracle", "builtin:" + IDENT1],
    "rlocal_w2": ["recover-local", PROBES2, "--oracle", "builtin:" + SHEAR, "--seed", "1"],
    "rlocal_qx": ["recover-local", PROBESQ, "--oracle", "builtin:" + QXNEG],
    "rlocal_scale": ["recover-local", SCALE, "--oracle", "builtin:" + IDENT1],
    "r2local_w2": ["recover-2local", PROBES2, "--oracle", "builtin:" + SHEAR, "--seed", "2"],
    "r2local_qx": ["recover-2local", PROBESQ, "--oracle", "builtin:" + QXNEG],
    "r2local_scale": ["recover-2local", SCALE, "--oracle", "builtin:" + IDENT1],
    "r2local_identity": ["recover-2local", SCALE_ID, "--oracle", "builtin:" + IDENT1],
    "shift_basic": ["shift", XI],
    "shift_zero": ["shift", _el(INF, [])],
    "shift_mismatch": ["shift", X2],
    "witness_one": ["shift-witness", XI],
    "witness_pair": ["shift-witness", XI, YI],
    "witness_zero": ["shift-witness", _el(INF, []), _el(INF, [])],
    "demo_seed0": ["shift-demo"],
    "demo_seed7": ["shift-demo", "--seed", "7"],
    "selftest_4": ["selftest", "--only", "4"],
    "selftest_2_6": ["selftest", "--only", "2,6"],
    "parse_error": ["bracket", "{not json", Y2],
    "parse_missing_alg": ["aut-check", SWAP],
}


def run_case(argv):
    buf = io.StringIO()
    code = cli.run(list(argv), out=buf)
    return buf.getvalue(), code


def regenerate(directory=GOLDEN_DIR):
    directory.mkdir(exist_ok=True)
    for old in directory.glob("*.out"):
        old.unlink()
    manifest = {}
    for name, argv in CASES.items():
        text, code = run_case(argv)
        (directory / f"{name}.out").write_text(text)
        manifest[name] = {"argv": argv, "exit": code}
    (directory / "manifest.json").write_text(json.dumps(manifest, indent=1, sort_keys=True) + "\n")
    return manifest


def check_all(directory=GOLDEN_DIR):
    """Replay every stored case twice; returns (mismatching names, total)."""
    manifest = json.loads((directory / "manifest.json").read_text())
    bad = []
    for name, case in sorted(manifest.items()):
        want = (directory / f"{name}.out").read_text()
        first = run_case(case["argv"])
        second = run_case(case["argv"])
        if first != (want, case["exit"]) or second != first:
            bad.append(name)
    return bad, len(manifest)


if __name__ == "__main__":
    if "--regen" in sys.argv:
        m = regenerate()
        for name, case in sorted(m.items()):
            print(f"{case['exit']}  {name}")
    else:
        bad, total = check_all()
        print(f"{total - len(bad)}/{total} golden cases match")
        sys.exit(1 if bad else 0)
