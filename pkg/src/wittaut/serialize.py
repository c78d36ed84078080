"""Canonical JSON forms for descriptors, elements, triples and matrices."""

import json

from .autos import AutTriple
from .errors import ParseError, WittError
from .scalars import field_from_tag
from .witt import Algebra, WittElement, sparse, to_dense


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _int(v):
    if isinstance(v, bool):
        raise ParseError(f"expected an integer, got {v!r}")
    try:
        return int(v)
    except (TypeError, ValueError):
        raise ParseError(f"expected an integer, got {v!r}") from None


# descriptors

def descriptor_to_json(alg):
    if alg.is_infinite:
        return {"rank": "inf", "dim": "inf", "field": alg.field.tag, "phi": "kronecker"}
    phi = "kronecker" if alg.is_kronecker else [[alg.field.format(v) for v in r] for r in alg.phi]
    return {"rank": alg.rank, "dim": alg.dim, "field": alg.field.tag, "phi": phi}


def descriptor_from_json(obj):
    if not isinstance(obj, dict):
        raise ParseError("algebra descriptor must be an object")
    field = field_from_tag(obj.get("field", "Q"))
    rank, dim, phi = obj.get("rank"), obj.get("dim"), obj.get("phi", "kronecker")
    if rank == "inf" or dim == "inf":
        if rank != dim or phi != "kronecker":
            raise ParseError("W_inf needs rank = dim = 'inf' and the Kronecker pairing")
        return Algebra.infinite(field)
    if phi == "kronecker":
        n = _int(rank)
        if dim is not None and _int(dim) != n:
            raise ParseError("Kronecker pairing needs rank == dim")
        return Algebra.witt(n, field)
    if not isinstance(phi, list):
        raise ParseError("phi must be 'kronecker' or a matrix")
    alg = Algebra.general([[field.parse(v) for v in r] for r in phi], field)
    if (rank is not None and _int(rank) != alg.rank) or (dim is not None and _int(dim) != alg.dim):
        raise ParseError("rank/dim disagree with the pairing matrix shape")
    return alg


# elements

def _vec_to_json(alg, sv, size, fmt):
    if alg.is_infinite:
        return {str(i): fmt(v) for i, v in sv}
    return [fmt(v) for v in to_dense(sv, size)]


def _vec_from_json(alg, obj, parse):
    if isinstance(obj, dict):
        try:
            return sparse((int(i), parse(v)) for i, v in obj.items())
        except ValueError:
            raise ParseError(f"bad sparse vector {obj!r}") from None
    if isinstance(obj, list):
        return tuple((i + 1, v) for i, v in enumerate(parse(v) for v in obj) if v != 0)
    raise ParseError(f"bad vector {obj!r}")


def element_to_json(x):
    alg = x.algebra
    f = alg.field
    terms = [{"exp": _vec_to_json(alg, e, alg.rank, int),
              "tan": _vec_to_json(alg, d, alg.dim, f.format)}
             for e, d in x.sorted_terms()]
    return {"algebra": descriptor_to_json(alg), "terms": terms}


def element_from_json(obj, alg=None):
    if not isinstance(obj, dict) or "terms" not in obj:
        raise ParseError("element must be an object with 'terms'")
    if "algebra" in obj:
        a2 = descriptor_from_json(obj["algebra"])
        if alg is not None and a2 != alg:
            raise ParseError("element algebra differs from the expected algebra")
        alg = a2
    if alg is None:
        raise ParseError("element without an algebra")
    terms = []
    for t in obj["terms"]:
        try:
            e = _vec_from_json(alg, t["exp"], _int)
            d = _vec_from_json(alg, t["tan"], alg.field.parse)
        except (KeyError, TypeError):
            raise ParseError(f"bad term {t!r}") from None
        if not alg.is_infinite and (isinstance(t["exp"], list) and len(t["exp"]) != alg.rank
                                    or isinstance(t["tan"], list) and len(t["tan"]) != alg.dim):
            raise ParseError(f"term {t!r} has the wrong length for {alg!r}")
        terms.append((e, d))
    try:
        return WittElement(alg, terms)
    except WittError as exc:
        raise ParseError(str(exc)) from None


# triples

def triple_to_json(alg, theta):
    f = alg.field
    out = {"chi": [f.format(c) for c in theta.chi],
           "sigma": [[int(v) for v in r] for r in theta.sigma],
           "tau": [[f.format(v) for v in r] for r in theta.tau]}
    if alg.is_infinite:
        out["support"] = theta.exp_size
    return out


def triple_from_json(alg, obj):
    if not isinstance(obj, dict):
        raise ParseError("triple must be an object")
    f = alg.field
    try:
        chi = tuple(f.parse(c) for c in obj["chi"])
        sigma = tuple(tuple(_int(v) for v in r) for r in obj["sigma"])
        tau = tuple(tuple(f.parse(v) for v in r) for r in obj["tau"])
    except (KeyError, TypeError):
        raise ParseError("triple needs chi, sigma and tau") from None
    if alg.is_infinite and "support" in obj and _int(obj["support"]) != len(sigma):
        raise ParseError("declared support disagrees with the block size")
    return AutTriple(chi, sigma, tau)


# integer matrices and lattices

def intmatrix_to_json(m):
    return [[str(v) for v in r] for r in m]


def intmatrix_from_json(obj):
    try:
        return tuple(tuple(_int(v) for v in r) for r in obj)
    except TypeError:
        raise ParseError("integer matrix must be a nested array") from None


def vectors_to_json(vs):
    return [[str(v) for v in vec] for vec in vs]


def scalar_vectors_to_json(field, vs):
    return [[field.format(v) for v in vec] for vec in vs]
