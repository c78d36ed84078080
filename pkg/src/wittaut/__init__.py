"""Exact computations in simple generalized Witt algebras W(Z^n, V_m, phi).

The main entry points are re-exported here; the ``wittaut`` command and
``python -m wittaut`` expose the same operations as JSON subcommands.
"""

from .autos import (AutTriple, apply_aut, build_distinguished, check_triple, compose,
                    identity_triple, invert, lemma23_bruteforce, lemma23_decide, stabilizer_of)
from .intlat import Sublattice, hnf, is_unimodular, lattice_constraint_kernel, lattice_member
from .kernels import BACKEND
from .locality import (ProbeSet, recover_2local, recover_local, shift_demo, verify_2local,
                       verify_local)
from .oracles import ExecOracle, SearchOracle, ShiftOracle, TripleOracle, WitnessOracle
from .pairs import complete_pair, envelope, nondeg_defect
from .scalars import QQ, QQX, RatFun, scalar_normalize, unit_torsion_solutions
from .shift import shift_is_not_surjective, shift_map, shift_witness
from .witt import Algebra, WittElement, act, bracket, graded_components, is_simple, phi_pair

__version__ = "0.1.0"

__all__ = [
    "AutTriple", "apply_aut", "build_distinguished", "check_triple", "compose",
    "identity_triple", "invert", "lemma23_bruteforce", "lemma23_decide", "stabilizer_of",
    "Sublattice", "hnf", "is_unimodular", "lattice_constraint_kernel", "lattice_member",
    "BACKEND", "ProbeSet", "recover_2local", "recover_local", "shift_demo", "verify_2local",
    "verify_local", "ExecOracle", "SearchOracle", "ShiftOracle", "TripleOracle",
    "WitnessOracle", "complete_pair", "envelope", "nondeg_defect", "QQ", "QQX", "RatFun",
    "scalar_normalize", "unit_torsion_solutions", "shift_is_not_surjective", "shift_map",
    "shift_witness", "Algebra", "WittElement", "act", "bracket", "graded_components",
    "is_simple", "phi_pair",
]
