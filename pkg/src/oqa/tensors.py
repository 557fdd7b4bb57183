"""Sparse elements of n-fold tensor products of algebras.

A tensor element stores a tuple of leg algebras and a sparse map from basis
multi-indices (one index per leg) to nonzero scalars.  Besides componentwise
products this module provides leg embeddings (placing a small element into
chosen legs of a bigger product, units elsewhere), per-leg map application,
leg permutation, regrouping of consecutive legs into tensor-product algebras,
exact inversion, and :func:`multi_product`, which assembles sums like

    sum over independent term choices of  x_i y_j ... (x^i ... y^j ...)

by iterating the factor term lists independently per copy.  That last helper
is how every multi-copy construction formula in the package is evaluated.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .algebra import (
    Element,
    ShapeMismatchError,
    invert_element,
    tensor_algebra,
    _coerce_scalar,
)
from .scalars import Scalar, scalar_eq


class TensorElement:
    """Sparse element of a tensor product of algebras."""

    __slots__ = ("legs", "coeffs")

    def __init__(self, legs, coeffs):
        self.legs = tuple(legs)
        clean = {}
        arity = len(self.legs)
        for idx, c in coeffs.items():
            if c.is_zero():
                continue
            idx = tuple(idx)
            if len(idx) != arity:
                raise ShapeMismatchError(
                    f"multi-index {idx} has arity {len(idx)}, expected {arity}"
                )
            clean[idx] = c
        self.coeffs = clean

    @classmethod
    def zero(cls, legs):
        return cls(legs, {})

    @classmethod
    def unit(cls, legs):
        """The tensor product of the leg units."""
        legs = tuple(legs)
        coeffs = {}
        unit_items = [list(leg.unit.items()) for leg in legs]
        for combo in itertools.product(*unit_items):
            idx = tuple(i for i, _ in combo)
            c = Scalar.one(legs[0].params if legs else ())
            for _, factor in combo:
                c = c * factor
            coeffs[idx] = c
        return cls(legs, coeffs)

    @classmethod
    def from_terms(cls, legs, terms):
        """Build from (labels..., coefficient) tuples."""
        legs = tuple(legs)
        params = legs[0].params if legs else ()
        coeffs = {}
        for *labels, value in terms:
            idx = tuple(leg.index(label) for leg, label in zip(legs, labels))
            scalar = _coerce_scalar(value, params)
            if idx in coeffs:
                scalar = coeffs[idx] + scalar
            coeffs[idx] = scalar
        return cls(legs, coeffs)

    @property
    def arity(self):
        return len(self.legs)

    def is_zero(self):
        return not self.coeffs

    def labels(self, idx):
        return tuple(leg.basis[i] for leg, i in zip(self.legs, idx))

    def _check_same(self, other):
        if self.legs != other.legs:
            raise ShapeMismatchError(
                f"leg mismatch: {[a.name for a in self.legs]} vs {[a.name for a in other.legs]}"
            )

    def __add__(self, other):
        self._check_same(other)
        acc = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            acc[idx] = acc[idx] + c if idx in acc else c
        return TensorElement(self.legs, acc)

    def __neg__(self):
        return TensorElement(self.legs, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        params = self.legs[0].params if self.legs else ()
        factor = _coerce_scalar(factor, params)
        return TensorElement(self.legs, {i: c * factor for i, c in self.coeffs.items()})

    def __rmul__(self, factor):
        if isinstance(factor, (int, Fraction, Scalar)):
            return self.scale(factor)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return tensor_multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check_same(other)
        return first_difference(self, other) is None

    __hash__ = None

    def substitute(self, assignment):
        legs = tuple(leg.substitute(assignment) for leg in self.legs)
        coeffs = {i: c.substitute(assignment) for i, c in self.coeffs.items()}
        return TensorElement(legs, coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for idx in sorted(self.coeffs):
            labels = "⊗".join(self.labels(idx))
            parts.append(f"({self.coeffs[idx]})·{labels}")
        return " + ".join(parts)

    def __repr__(self):
        names = ",".join(a.name for a in self.legs)
        return f"TensorElement([{names}]: {len(self.coeffs)} terms)"


def first_difference(s, t):
    """First differing coefficient, or None; basis for equality witnesses."""
    s._check_same(t)
    zero = Scalar.zero(s.legs[0].params if s.legs else ())
    for idx in sorted(set(s.coeffs) | set(t.coeffs)):
        a = s.coeffs.get(idx, zero)
        b = t.coeffs.get(idx, zero)
        if not scalar_eq(a, b):
            return idx, a, b
    return None


def outer(s, t):
    """Concatenate legs: (s ⊗ t)."""
    coeffs = {}
    for i1, c1 in s.coeffs.items():
        for i2, c2 in t.coeffs.items():
            coeffs[i1 + i2] = c1 * c2
    return TensorElement(s.legs + t.legs, coeffs)


def tensor_multiply(s, t, reversed_legs=()):
    """Componentwise product of tensor elements with identical legs.

    Legs listed in ``reversed_legs`` multiply in the opposite order, which is
    how products in a tensor factor carrying the opposite multiplication are
    evaluated without a separate opposite-algebra code path.
    """
    s._check_same(t)
    legs = s.legs
    arity = len(legs)
    reversed_legs = frozenset(reversed_legs)
    acc = {}
    for idx_s, cs in s.coeffs.items():
        for idx_t, ct in t.coeffs.items():
            vecs = []
            for leg in range(arity):
                if leg in reversed_legs:
                    pair = (idx_t[leg], idx_s[leg])
                else:
                    pair = (idx_s[leg], idx_t[leg])
                vec = legs[leg].mul.get(pair)
                if not vec:
                    break
                vecs.append(vec)
            else:
                base = cs * ct
                for combo in itertools.product(*(v.items() for v in vecs)):
                    idx = tuple(i for i, _ in combo)
                    c = base
                    for _, factor in combo:
                        c = c * factor
                    acc[idx] = acc[idx] + c if idx in acc else c
    return TensorElement(legs, acc)


def embed(t, target_legs, positions):
    """Place ``t`` at the given (0-based, strictly increasing) leg positions.

    Every other target leg is filled with that algebra's unit.
    """
    target_legs = tuple(target_legs)
    positions = tuple(positions)
    if len(positions) != t.arity:
        raise ShapeMismatchError("one position per leg of the embedded element")
    if any(b <= a for a, b in zip(positions, positions[1:])):
        raise ShapeMismatchError("positions must be strictly increasing")
    for pos, leg in zip(positions, t.legs):
        if not 0 <= pos < len(target_legs):
            raise ShapeMismatchError(f"position {pos} out of range")
        if target_legs[pos] != leg:
            raise ShapeMismatchError(
                f"algebra mismatch at position {pos}: "
                f"{target_legs[pos].name} vs {leg.name}"
            )
    filler = [i for i in range(len(target_legs)) if i not in positions]
    unit_items = [list(target_legs[i].unit.items()) for i in filler]
    coeffs = {}
    for idx, c in t.coeffs.items():
        for combo in itertools.product(*unit_items):
            full = [0] * len(target_legs)
            for pos, value in zip(positions, idx):
                full[pos] = value
            scalar = c
            for slot, (k, factor) in zip(filler, combo):
                full[slot] = k
                scalar = scalar * factor
            key = tuple(full)
            coeffs[key] = coeffs[key] + scalar if key in coeffs else scalar
    return TensorElement(target_legs, coeffs)


def apply_maps(t, maps):
    """Apply one optional linear map per leg (None means identity)."""
    maps = tuple(maps)
    if len(maps) != t.arity:
        raise ShapeMismatchError("one (optional) map per leg required")
    for leg, fmap in zip(t.legs, maps):
        if fmap is not None and fmap.source != leg:
            raise ShapeMismatchError(
                f"map source {fmap.source.name} does not match leg {leg.name}"
            )
    target_legs = tuple(
        fmap.target if fmap is not None else leg for leg, fmap in zip(t.legs, maps)
    )
    coeffs = {}
    for idx, c in t.coeffs.items():
        vecs = []
        for leg, (fmap, i) in enumerate(zip(maps, idx)):
            if fmap is None:
                vecs.append({i: None})
            else:
                vecs.append(fmap.images[i].coeffs)
        for combo in itertools.product(*(v.items() for v in vecs)):
            idx_out = tuple(i for i, _ in combo)
            scalar = c
            for _, factor in combo:
                if factor is not None:
                    scalar = scalar * factor
            if scalar.is_zero():
                continue
            coeffs[idx_out] = coeffs[idx_out] + scalar if idx_out in coeffs else scalar
    return TensorElement(target_legs, coeffs)


def permute_legs(t, perm):
    """Reorder legs: output leg ``i`` is input leg ``perm[i]``."""
    perm = tuple(perm)
    if sorted(perm) != list(range(t.arity)):
        raise ShapeMismatchError(f"{perm} is not a permutation of the legs")
    legs = tuple(t.legs[p] for p in perm)
    coeffs = {
        tuple(idx[p] for p in perm): c for idx, c in t.coeffs.items()
    }
    return TensorElement(legs, coeffs)


def _fold_algebra(legs):
    algebra = legs[0]
    for leg in legs[1:]:
        algebra = tensor_algebra(algebra, leg)
    return algebra


def flatten(t, groups):
    """Regroup consecutive legs into tensor-product legs.

    ``groups`` lists the sizes of consecutive blocks; a block of size one
    keeps its original algebra, larger blocks become tensor-product algebras
    with lexicographically combined indices.
    """
    if sum(groups) != t.arity or any(g < 1 for g in groups):
        raise ShapeMismatchError(f"groups {groups} do not partition {t.arity} legs")
    bounds = []
    start = 0
    for g in groups:
        bounds.append((start, start + g))
        start += g
    new_legs = []
    for lo, hi in bounds:
        block = t.legs[lo:hi]
        new_legs.append(block[0] if len(block) == 1 else _fold_algebra(block))
    coeffs = {}
    for idx, c in t.coeffs.items():
        out = []
        for (lo, hi) in bounds:
            flat = idx[lo]
            for pos in range(lo + 1, hi):
                flat = flat * t.legs[pos].dim + idx[pos]
            out.append(flat)
        coeffs[tuple(out)] = c
    return TensorElement(new_legs, coeffs)


def unflatten(t, factors):
    """Inverse regrouping: ``factors[i]`` lists the algebras of block ``i``."""
    if len(factors) != t.arity:
        raise ShapeMismatchError("one factor list per leg required")
    for leg, block in zip(t.legs, factors):
        expected = block[0] if len(block) == 1 else _fold_algebra(block)
        if leg != expected:
            raise ShapeMismatchError(
                f"leg {leg.name} does not factor as {[a.name for a in block]}"
            )
    new_legs = tuple(a for block in factors for a in block)
    coeffs = {}
    for idx, c in t.coeffs.items():
        out = []
        for flat, block in zip(idx, factors):
            split = []
            for algebra in reversed(block):
                split.append(flat % algebra.dim)
                flat //= algebra.dim
            out.extend(reversed(split))
        coeffs[tuple(out)] = c
    return TensorElement(new_legs, coeffs)


def to_element(t):
    """View a tensor element as an element of the folded tensor algebra."""
    flat = flatten(t, [t.arity]) if t.arity > 1 else t
    algebra = flat.legs[0]
    return Element(algebra, {idx[0]: c for idx, c in flat.coeffs.items()})


def from_element(element, legs):
    """Inverse of :func:`to_element` for the given leg factorisation."""
    wrapped = TensorElement((element.algebra,), {(i,): c for i, c in element.coeffs.items()})
    if len(legs) == 1:
        return wrapped
    return unflatten(wrapped, [list(legs)])


def tensor_invert(t):
    """Two-sided inverse in the tensor-product algebra of the legs."""
    element = to_element(t)
    inverse = invert_element(element)
    return from_element(inverse, t.legs)


def multi_product(factors, out_legs, pattern):
    """Assemble a sum over independent copies of sparse tensor factors.

    ``pattern[leg]`` is an ordered list of atoms ``(factor, slot)`` or
    ``(factor, slot, map)``: for every choice of one term from each factor,
    the selected slots' basis elements (after applying the optional map) are
    multiplied in the listed order inside ``out_legs[leg]``, and the products
    of the term coefficients accumulate.  Each factor term list is iterated
    independently, which is exactly the "independent dummy copy" convention
    the construction formulas are written in.
    """
    out_legs = tuple(out_legs)
    params = out_legs[0].params if out_legs else ()
    one = Scalar.one(params)
    acc = {}
    term_lists = [list(f.coeffs.items()) for f in factors]
    norm_pattern = []
    for atoms in pattern:
        if not atoms:
            raise ShapeMismatchError("every output leg needs at least one atom")
        norm_pattern.append([
            (atom[0], atom[1], atom[2] if len(atom) > 2 else None) for atom in atoms
        ])
    for combo in itertools.product(*term_lists):
        coeff = one
        for _, c in combo:
            coeff = coeff * c
        leg_vecs = []
        for leg, atoms in enumerate(norm_pattern):
            algebra = out_legs[leg]
            vec = None
            for fi, slot, fmap in atoms:
                basis_idx = combo[fi][0][slot]
                nxt = (
                    {basis_idx: None}
                    if fmap is None
                    else fmap.images[basis_idx].coeffs
                )
                if vec is None:
                    vec = {k: v for k, v in nxt.items()}
                else:
                    folded = {}
                    for i, ci in vec.items():
                        for j, cj in nxt.items():
                            table = algebra.mul_basis(i, j)
                            if not table:
                                continue
                            factor = None
                            if ci is not None:
                                factor = ci
                            if cj is not None:
                                factor = cj if factor is None else factor * cj
                            for k, ck in table.items():
                                value = ck if factor is None else factor * ck
                                folded[k] = folded[k] + value if k in folded else value
                    vec = {k: v for k, v in folded.items() if v is None or not v.is_zero()}
                if not vec:
                    break
            if not vec:
                leg_vecs = None
                break
            leg_vecs.append(vec)
        if leg_vecs is None:
            continue
        for choice in itertools.product(*(v.items() for v in leg_vecs)):
            idx = tuple(i for i, _ in choice)
            c = coeff
            for _, factor in choice:
                if factor is not None:
                    c = c * factor
            if c.is_zero():
                continue
            acc[idx] = acc[idx] + c if idx in acc else c
    return TensorElement(out_legs, acc)
