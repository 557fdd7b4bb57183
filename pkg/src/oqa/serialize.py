"""Canonical JSON (de)serialisation for every object kind.

Schemas:

  algebra   {"name", "params": [names], "basis": [labels],
             "unit": {label: scalar}, "mul": [{"l", "r", "out": {label: scalar}}]}
  element   {label: scalar}
  map       {"images": {label: element}}
  tensor    {"legs": [algebra names], "terms": [{"idx": [labels], "c": scalar}]}
  oqa       {"algebra": name-or-inline, "r": tensor, "D": map, "U": map,
             "r_inv": optional tensor}
  nonuple   {"H", "H'", "p", "p'", "r", "D", "U", "D'", "U'"} (same encodings)
  hopf      algebra fields plus {"delta": {label: tensor},
             "counit": {label: scalar}, "antipode": map}

Scalars serialise as their canonical text form.  Absent mul entries mean zero
products.  Leg names resolve against bundle-inline algebras first, then the
catalog's base algebras, then recursively as tensor-product names A⊗B.
Serialisation is deterministic: keys appear in basis order, terms in index
order, so identical objects always produce byte-identical files.
"""

from __future__ import annotations

import json

from .algebra import Algebra, AlgebraError, AlgebraMap, make_algebra, make_map, tensor_algebra
from .catalog import _ALGEBRAS, CatalogError
from .hopf import HopfAlgebra
from .nonuple import Nonuple
from .oriented import OqaCandidate
from .tensors import TensorElement


def dumps(payload):
    return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=False) + "\n"


# ---------------------------------------------------------------------------
# encoding
# ---------------------------------------------------------------------------

def algebra_to_json(algebra):
    mul = []
    for (i, j) in sorted(algebra.mul):
        vec = algebra.mul[(i, j)]
        mul.append(
            {
                "l": algebra.basis[i],
                "r": algebra.basis[j],
                "out": {algebra.basis[k]: str(vec[k]) for k in sorted(vec)},
            }
        )
    return {
        "name": algebra.name,
        "params": list(algebra.params),
        "basis": list(algebra.basis),
        "unit": {algebra.basis[k]: str(algebra.unit[k]) for k in sorted(algebra.unit)},
        "mul": mul,
    }


def element_to_json(element):
    basis = element.algebra.basis
    return {basis[i]: str(element.coeffs[i]) for i in sorted(element.coeffs)}


def map_to_json(fmap):
    basis = fmap.source.basis
    return {
        "images": {
            basis[i]: element_to_json(fmap.images[i]) for i in range(fmap.source.dim)
        }
    }


def tensor_to_json(element):
    return {
        "legs": [leg.name for leg in element.legs],
        "terms": [
            {"idx": list(element.labels(idx)), "c": str(element.coeffs[idx])}
            for idx in sorted(element.coeffs)
        ],
    }


def oqa_to_json(candidate, inline_algebra=True):
    algebra = candidate.algebra
    payload = {
        "algebra": algebra_to_json(algebra) if inline_algebra else algebra.name,
        "r": tensor_to_json(candidate.r),
        "D": map_to_json(candidate.D),
        "U": map_to_json(candidate.U),
    }
    if candidate.r_inverse is not None:
        payload["r_inv"] = tensor_to_json(candidate.r_inverse)
    return payload


def nonuple_to_json(bundle, inline_algebra=True):
    payload = {
        "H": algebra_to_json(bundle.H) if inline_algebra else bundle.H.name,
        "H'": algebra_to_json(bundle.Hp) if inline_algebra else bundle.Hp.name,
        "p": tensor_to_json(bundle.p),
        "p'": tensor_to_json(bundle.pp),
        "r": tensor_to_json(bundle.r),
        "D": map_to_json(bundle.D),
        "U": map_to_json(bundle.U),
        "D'": map_to_json(bundle.Dp),
        "U'": map_to_json(bundle.Up),
    }
    if bundle.r_inverse is not None:
        payload["r_inv"] = tensor_to_json(bundle.r_inverse)
    return payload


def hopf_to_json(hopf):
    algebra = hopf.algebra
    payload = algebra_to_json(algebra)
    payload["delta"] = {
        algebra.basis[i]: tensor_to_json(hopf.delta[i]) for i in range(algebra.dim)
    }
    payload["counit"] = {
        algebra.basis[i]: str(hopf.counit[i]) for i in range(algebra.dim)
    }
    payload["antipode"] = map_to_json(hopf.antipode)
    return payload


def to_json(obj, inline_algebra=True):
    if isinstance(obj, OqaCandidate):
        return oqa_to_json(obj, inline_algebra)
    if isinstance(obj, Nonuple):
        return nonuple_to_json(obj, inline_algebra)
    if isinstance(obj, HopfAlgebra):
        return hopf_to_json(obj)
    if isinstance(obj, TensorElement):
        return tensor_to_json(obj)
    if isinstance(obj, Algebra):
        return algebra_to_json(obj)
    if isinstance(obj, AlgebraMap):
        return map_to_json(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


# ---------------------------------------------------------------------------
# decoding
# ---------------------------------------------------------------------------

class Resolver:
    """Resolves algebra names against inline definitions and the catalog."""

    def __init__(self):
        self.known = {}

    def add(self, algebra):
        self.known[algebra.name] = algebra
        return algebra

    def resolve(self, ref):
        if isinstance(ref, dict):
            return self.add(algebra_from_json(ref))
        if ref in self.known:
            return self.known[ref]
        if ref in _ALGEBRAS:
            return self.add(_ALGEBRAS[ref]())
        if "⊗" in ref:
            left_name, right_name = _split_tensor_name(ref)
            return self.add(
                tensor_algebra(self.resolve(left_name), self.resolve(right_name))
            )
        raise CatalogError(f"cannot resolve algebra name {ref!r}")


def _split_tensor_name(name):
    depth = 0
    for pos, ch in enumerate(name):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "⊗" and depth == 0:
            left, right = name[:pos], name[pos + 1:]
            return _strip_parens(left), _strip_parens(right)
    raise CatalogError(f"malformed tensor-product name {name!r}")


def _strip_parens(name):
    if name.startswith("(") and name.endswith(")"):
        return name[1:-1]
    return name


def algebra_from_json(data):
    mul = {}
    for entry in data.get("mul", []):
        mul[(entry["l"], entry["r"])] = entry["out"]
    return make_algebra(
        data["name"],
        tuple(data.get("params", [])),
        tuple(data["basis"]),
        mul,
        data.get("unit", {}),
    )


def element_from_json(algebra, data):
    return algebra.element(data)


def map_from_json(source, target, data):
    """Load a linear map; upgraded to a certified automorphism when it is one."""
    images = {
        label: element_from_json(target, value)
        for label, value in data["images"].items()
    }
    try:
        return make_map(source, target, images, require_automorphism=True)
    except AlgebraError:
        return make_map(source, target, images)


def tensor_from_json(data, resolver):
    legs = tuple(resolver.resolve(name) for name in data["legs"])
    terms = [tuple(term["idx"]) + (term["c"],) for term in data.get("terms", [])]
    return TensorElement.from_terms(legs, terms)


def oqa_from_json(data):
    resolver = Resolver()
    algebra = resolver.resolve(data["algebra"])
    r = tensor_from_json(data["r"], resolver)
    d_map = map_from_json(algebra, algebra, data["D"])
    u_map = map_from_json(algebra, algebra, data["U"])
    r_inv = tensor_from_json(data["r_inv"], resolver) if "r_inv" in data else None
    return OqaCandidate(algebra, r, d_map, u_map, r_inv)


def nonuple_from_json(data):
    resolver = Resolver()
    h = resolver.resolve(data["H"])
    hp = resolver.resolve(data["H'"])
    return Nonuple(
        h,
        hp,
        tensor_from_json(data["p"], resolver),
        tensor_from_json(data["p'"], resolver),
        tensor_from_json(data["r"], resolver),
        map_from_json(h, h, data["D"]),
        map_from_json(h, h, data["U"]),
        map_from_json(hp, hp, data["D'"]),
        map_from_json(hp, hp, data["U'"]),
        r_inverse=(
            tensor_from_json(data["r_inv"], resolver) if "r_inv" in data else None
        ),
    )


def hopf_from_json(data):
    resolver = Resolver()
    algebra = resolver.resolve(
        {key: data[key] for key in ("name", "params", "basis", "unit", "mul")}
    )
    delta = [
        tensor_from_json(data["delta"][label], resolver) for label in algebra.basis
    ]
    counit = [data["counit"][label] for label in algebra.basis]
    from .algebra import _coerce_scalar

    counit = [_coerce_scalar(value, algebra.params) for value in counit]
    antipode = map_from_json(algebra, algebra, data["antipode"])
    return HopfAlgebra(algebra, delta, counit, antipode)


def detect_kind(data):
    """Best-effort structural detection of a bundle's kind."""
    if not isinstance(data, dict):
        raise CatalogError("a bundle must be a JSON object")
    if "delta" in data:
        return "hopf"
    if "H" in data:
        return "nonuple"
    if "algebra" in data and "r" in data:
        return "oqa"
    if "legs" in data:
        return "tensor"
    if "basis" in data:
        return "algebra"
    raise CatalogError("cannot determine the kind of this bundle")


def from_json(data, kind=None):
    kind = kind or detect_kind(data)
    loaders = {
        "oqa": oqa_from_json,
        "nonuple": nonuple_from_json,
        "hopf": hopf_from_json,
        "algebra": algebra_from_json,
    }
    if kind == "tensor":
        return tensor_from_json(data, Resolver())
    if kind not in loaders:
        raise CatalogError(f"no loader for bundle kind {kind!r}")
    return loaders[kind](data)
