"""Oriented quantum algebra bundles and their axiom checker.

An oriented quantum algebra (OQA) is a tuple (H, r, D, U): an algebra H, an
invertible element r of H⊗H, and two commuting algebra automorphisms D, U of
H such that

  * (D⊗id)(r⁻¹) and (id⊗U)(r) are mutually inverse when the second tensor
    factor multiplies in the opposite order,
  * (D⊗D)(r) = r = (U⊗U)(r),
  * r satisfies the quantum Yang-Baxter equation r₁₂r₁₃r₂₃ = r₂₃r₁₃r₁₂.

This module checks those axioms exactly, and builds new OQAs from old ones:
the orientation swap (H, r, U, D), the tensor product of two OQAs on H⊗H',
and the tensor-square construction placing a structure on H⊗H out of four
independent copies of r and its inverse.
"""

from __future__ import annotations

from .algebra import (
    AlgebraMap,
    NotInvertibleError,
    ShapeMismatchError,
    maps_commute,
    tensor_algebra,
    tensor_map,
)
from .reports import CertificationError, CheckReport, UncertifiedInputError, Verdict, Witness
from .tensors import (
    TensorElement,
    apply_maps,
    embed,
    first_difference,
    flatten,
    multi_product,
    outer,
    permute_legs,
    tensor_multiply,
    tensor_invert,
)

AXIOM_INVERTIBLE = "invertible"
AXIOM_AUTOMORPHISMS = "commuting-automorphisms"
AXIOM_TWISTED_LEFT = "twisted-inverse-left"
AXIOM_TWISTED_RIGHT = "twisted-inverse-right"
AXIOM_D_INVARIANCE = "D-invariance"
AXIOM_U_INVARIANCE = "U-invariance"
AXIOM_YANG_BAXTER = "yang-baxter"


class OqaCandidate:
    """A bundle (H, r, D, U) that may or may not satisfy the axioms."""

    __slots__ = ("algebra", "r", "D", "U", "r_inverse", "certified")

    def __init__(self, algebra, r, D, U, r_inverse=None):
        if r.legs != (algebra, algebra):
            raise ShapeMismatchError("r must be a two-leg element of H⊗H")
        for fmap in (D, U):
            if not isinstance(fmap, AlgebraMap) or fmap.source != algebra or fmap.target != algebra:
                raise ShapeMismatchError("D and U must be maps of the carrier algebra")
        self.algebra = algebra
        self.r = r
        self.D = D
        self.U = U
        self.r_inverse = r_inverse
        self.certified = False

    def require_certified(self):
        if not self.certified:
            raise UncertifiedInputError(
                f"candidate on {self.algebra.name} has not passed check_oqa"
            )

    def substitute(self, assignment):
        out = OqaCandidate(
            self.algebra.substitute(assignment),
            self.r.substitute(assignment),
            self.D.substitute(assignment),
            self.U.substitute(assignment),
            self.r_inverse.substitute(assignment) if self.r_inverse is not None else None,
        )
        return out

    def __repr__(self):
        state = "certified" if self.certified else "unchecked"
        return f"OqaCandidate({self.algebra.name}, {state})"


def _witness(difference, element):
    idx, left, right = difference
    return Witness(element.labels(idx), str(left), str(right))


def _equation_verdict(axiom, lhs, rhs, note=None):
    difference = first_difference(lhs, rhs)
    if difference is None:
        return Verdict(axiom, True, note=note)
    return Verdict(axiom, False, _witness(difference, lhs), note)


def ensure_inverse(candidate):
    """Return a verified two-sided inverse of r, computing it if needed."""
    unit = TensorElement.unit(candidate.r.legs)
    if candidate.r_inverse is not None:
        inv = candidate.r_inverse
        if tensor_multiply(candidate.r, inv) == unit and tensor_multiply(inv, candidate.r) == unit:
            return inv
        raise NotInvertibleError("cached inverse fails to invert r")
    inv = tensor_invert(candidate.r)
    candidate.r_inverse = inv
    return inv


def check_oqa(candidate, on_verdict=None):
    """Run every OQA axiom; certify the candidate iff all of them hold."""
    algebra = candidate.algebra
    r = candidate.r
    report = CheckReport(f"oqa({algebra.name})")
    legs = (algebra, algebra)
    unit = TensorElement.unit(legs)

    r_inv = None
    try:
        r_inv = ensure_inverse(candidate)
        report.add(Verdict(AXIOM_INVERTIBLE, True), on_verdict)
    except NotInvertibleError as err:
        report.add(Verdict(AXIOM_INVERTIBLE, False, note=str(err)), on_verdict)

    maps_ok = (
        candidate.D.certified_automorphism
        and candidate.U.certified_automorphism
        and maps_commute(candidate.D, candidate.U)
    )
    report.add(
        Verdict(
            AXIOM_AUTOMORPHISMS,
            maps_ok,
            note=None if maps_ok else "D, U must be certified commuting automorphisms",
        ),
        on_verdict,
    )

    if r_inv is None:
        skipped = "skipped: r is not invertible"
        report.add(Verdict(AXIOM_TWISTED_LEFT, False, note=skipped), on_verdict)
        report.add(Verdict(AXIOM_TWISTED_RIGHT, False, note=skipped), on_verdict)
    else:
        lhs = multi_product(
            [r_inv, r],
            legs,
            [[(0, 0, candidate.D), (1, 0)], [(1, 1, candidate.U), (0, 1)]],
        )
        report.add(_equation_verdict(AXIOM_TWISTED_LEFT, lhs, unit), on_verdict)
        rhs = multi_product(
            [r, r_inv],
            legs,
            [[(0, 0), (1, 0, candidate.D)], [(1, 1), (0, 1, candidate.U)]],
        )
        report.add(_equation_verdict(AXIOM_TWISTED_RIGHT, rhs, unit), on_verdict)

    report.add(
        _equation_verdict(
            AXIOM_D_INVARIANCE, apply_maps(r, (candidate.D, candidate.D)), r
        ),
        on_verdict,
    )
    report.add(
        _equation_verdict(
            AXIOM_U_INVARIANCE, apply_maps(r, (candidate.U, candidate.U)), r
        ),
        on_verdict,
    )

    triple = (algebra, algebra, algebra)
    r12 = embed(r, triple, (0, 1))
    r13 = embed(r, triple, (0, 2))
    r23 = embed(r, triple, (1, 2))
    lhs = tensor_multiply(tensor_multiply(r12, r13), r23)
    rhs = tensor_multiply(tensor_multiply(r23, r13), r12)
    report.add(_equation_verdict(AXIOM_YANG_BAXTER, lhs, rhs), on_verdict)

    candidate.certified = report.passed
    return report


def check_ybe_alt(candidate):
    """The inverse-conjugated form of the Yang-Baxter condition.

    For elements this reads r₁₃r₂₃ = r₁₂⁻¹ r₂₃ r₁₃ r₁₂; on a certified
    bundle its verdict must coincide with the plain Yang-Baxter verdict.
    """
    r = candidate.r
    r_inv = ensure_inverse(candidate)
    algebra = candidate.algebra
    triple = (algebra, algebra, algebra)
    lhs = tensor_multiply(embed(r, triple, (0, 2)), embed(r, triple, (1, 2)))
    rhs = tensor_multiply(
        tensor_multiply(
            tensor_multiply(embed(r_inv, triple, (0, 1)), embed(r, triple, (1, 2))),
            embed(r, triple, (0, 2)),
        ),
        embed(r, triple, (0, 1)),
    )
    return lhs == rhs


def certify(candidate):
    report = check_oqa(candidate)
    if not report.passed:
        raise CertificationError(report)
    return candidate


def swap_orientation(candidate):
    """Exchange the two automorphisms; the result is again an OQA."""
    candidate.require_certified()
    swapped = OqaCandidate(
        candidate.algebra, candidate.r, candidate.U, candidate.D, candidate.r_inverse
    )
    return certify(swapped)


def interleave(left, right):
    """Outer product with middle legs swapped, flattened to two legs."""
    four = permute_legs(outer(left, right), (0, 2, 1, 3))
    return flatten(four, [2, 2])


def tensor_oqa(c1, c2):
    """The tensor product of two OQAs on the tensor-product algebra."""
    c1.require_certified()
    c2.require_certified()
    carrier = tensor_algebra(c1.algebra, c2.algebra)
    rr = interleave(c1.r, c2.r)
    inverse = interleave(ensure_inverse(c1), ensure_inverse(c2))
    out = OqaCandidate(
        carrier,
        rr,
        tensor_map(c1.D, c2.D),
        tensor_map(c1.U, c2.U),
        inverse,
    )
    return certify(out)


def radford_double(candidate):
    """Tensor-square structure built from four independent copies of r, r⁻¹.

    The structure element on H⊗H reads, with r = r_i⊗rⁱ = r_j⊗rʲ and
    r⁻¹ = R_l⊗Rˡ = R_m⊗Rᵐ:

        Rˡ r_i ⊗ Rᵐ r_j ⊗ rⁱ rʲ ⊗ R_l R_m
    """
    candidate.require_certified()
    algebra = candidate.algebra
    r = candidate.r
    r_inv = ensure_inverse(candidate)
    four_legs = (algebra,) * 4
    alpha4 = multi_product(
        [r_inv, r_inv, r, r],
        four_legs,
        [
            [(0, 1), (2, 0)],
            [(1, 1), (3, 0)],
            [(2, 1), (3, 1)],
            [(0, 0), (1, 0)],
        ],
    )
    alpha = flatten(alpha4, [2, 2])
    out = OqaCandidate(
        tensor_algebra(algebra, algebra),
        alpha,
        tensor_map(candidate.D, candidate.D),
        tensor_map(candidate.U, candidate.U),
    )
    return certify(out)
