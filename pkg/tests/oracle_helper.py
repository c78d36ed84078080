"""Line-oriented witness oracle used by the ExecOracle tests.

Usage: oracle_helper.py MODE [TRIPLE_JSON]
  shift   answer with the cyclic shift witness (W_inf)
  fixed   answer every query with TRIPLE_JSON
  none    answer null
  garbage answer with a line that is not JSON
"""

import json
import sys

from wittaut.serialize import element_from_json, triple_to_json
from wittaut.shift import shift_witness
from wittaut.witt import Algebra


def main():
    mode = sys.argv[1]
    for line in sys.stdin:
        req = json.loads(line)
        if mode == "shift":
            alg = Algebra.infinite()
            x = element_from_json(req["x"], alg)
            y = element_from_json(req["y"], alg) if req["kind"] == "pair" else None
            ans = triple_to_json(alg, shift_witness(x, y))
        elif mode == "fixed":
            ans = json.loads(sys.argv[2])
        elif mode == "none":
            ans = None
        else:
            print("not json", flush=True)
            continue
        print(json.dumps(ans), flush=True)


if __name__ == "__main__":
    main()
