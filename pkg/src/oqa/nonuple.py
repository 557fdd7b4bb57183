"""Nine-component cross bundles and the pairing constructions built on them.

A cross bundle ("nonuple") couples two oriented quantum algebras (H, p, D, U)
and (H', p', D', U') through an invertible element r of H⊗H' satisfying

  * the twisted inverse law for r with respect to D and U',
  * (D⊗D')(r) = r = (U⊗U')(r),
  * the braiding compatibilities   p₁₂ r₁₃ r₂₃ = r₂₃ r₁₃ p₁₂   in H⊗H⊗H'
    and                            r₁₂ r₁₃ p'₂₃ = p'₂₃ r₁₃ r₁₂  in H⊗H'⊗H',
    written out componentwise with independent copies of each element.

Such a bundle yields an oriented quantum algebra on H⊗H' whose structure
element combines one copy each of r, p, p' and r⁻¹ (``build_thm36``); with a
second compatible coupling element q the same works with q in place of r in
two slots (``build_thm35``); specialising everything to one algebra gives the
tensor-square structure (``build_thm37``).  Four consequence identities of
the braiding laws serve as regression guards for certified bundles.
"""

from __future__ import annotations

from .algebra import ShapeMismatchError, tensor_algebra, tensor_map
from .oriented import (
    OqaCandidate,
    certify,
    check_oqa,
    ensure_inverse,
    _equation_verdict,
)
from .reports import CertificationError, CheckReport, UncertifiedInputError, Verdict
from .tensors import (
    TensorElement,
    apply_maps,
    flatten,
    multi_product,
    tensor_multiply,
    tensor_invert,
)


class ComponentMismatchError(ShapeMismatchError):
    """Two bundles that must share components do not."""


class Nonuple:
    """Bundle (H, H', p, p', r, D, U, D', U'); primes spelled as ``p`` suffix."""

    __slots__ = (
        "H", "Hp", "p", "pp", "r", "D", "U", "Dp", "Up",
        "left", "right", "r_inverse", "certified",
    )

    def __init__(self, H, Hp, p, pp, r, D, U, Dp, Up, *,
                 p_inverse=None, pp_inverse=None, r_inverse=None):
        if r.legs != (H, Hp):
            raise ShapeMismatchError("r must live in H⊗H'")
        self.H = H
        self.Hp = Hp
        self.p = p
        self.pp = pp
        self.r = r
        self.D = D
        self.U = U
        self.Dp = Dp
        self.Up = Up
        self.left = OqaCandidate(H, p, D, U, p_inverse)
        self.right = OqaCandidate(Hp, pp, Dp, Up, pp_inverse)
        self.r_inverse = r_inverse
        self.certified = False

    def require_certified(self):
        if not self.certified:
            raise UncertifiedInputError(
                f"bundle on ({self.H.name}, {self.Hp.name}) has not passed check_nonuple"
            )

    def ensure_r_inverse(self):
        unit = TensorElement.unit((self.H, self.Hp))
        if self.r_inverse is not None:
            two_sided = (
                tensor_multiply(self.r, self.r_inverse) == unit
                and tensor_multiply(self.r_inverse, self.r) == unit
            )
            if not two_sided:
                raise ShapeMismatchError("cached r inverse fails to invert r")
            return self.r_inverse
        self.r_inverse = tensor_invert(self.r)
        return self.r_inverse

    def substitute(self, assignment):
        return Nonuple(
            self.H.substitute(assignment),
            self.Hp.substitute(assignment),
            self.p.substitute(assignment),
            self.pp.substitute(assignment),
            self.r.substitute(assignment),
            self.D.substitute(assignment),
            self.U.substitute(assignment),
            self.Dp.substitute(assignment),
            self.Up.substitute(assignment),
            r_inverse=(
                self.r_inverse.substitute(assignment)
                if self.r_inverse is not None else None
            ),
        )

    def __repr__(self):
        state = "certified" if self.certified else "unchecked"
        return f"Nonuple({self.H.name}, {self.Hp.name}, {state})"


def diagonal_nonuple(candidate):
    """The bundle (H, H, p, p, p, D, U, D, U) of a certified OQA."""
    candidate.require_certified()
    inv = ensure_inverse(candidate)
    bundle = Nonuple(
        candidate.algebra, candidate.algebra,
        candidate.r, candidate.r, candidate.r,
        candidate.D, candidate.U, candidate.D, candidate.U,
        p_inverse=inv, pp_inverse=inv, r_inverse=inv,
    )
    return bundle


def check_nonuple(bundle, on_verdict=None):
    """Check both component OQAs and the four cross conditions."""
    report = CheckReport(f"nonuple({bundle.H.name}, {bundle.Hp.name})")
    left_report = check_oqa(bundle.left)
    report.extend_prefixed("H", left_report, on_verdict)
    right_report = check_oqa(bundle.right)
    report.extend_prefixed("H'", right_report, on_verdict)

    report.add(
        Verdict("p-invertible", bundle.left.r_inverse is not None), on_verdict
    )
    report.add(
        Verdict("p'-invertible", bundle.right.r_inverse is not None), on_verdict
    )
    r_inv = None
    try:
        r_inv = bundle.ensure_r_inverse()
        report.add(Verdict("r-invertible", True), on_verdict)
    except Exception as err:  # solver failure is a verdict, not an error
        report.add(Verdict("r-invertible", False, note=str(err)), on_verdict)

    pair = (bundle.H, bundle.Hp)
    unit = TensorElement.unit(pair)
    r = bundle.r
    if r_inv is None:
        skipped = "skipped: r is not invertible"
        report.add(Verdict("cross-twisted-inverse-left", False, note=skipped), on_verdict)
        report.add(Verdict("cross-twisted-inverse-right", False, note=skipped), on_verdict)
    else:
        lhs = multi_product(
            [r_inv, r], pair,
            [[(0, 0, bundle.D), (1, 0)], [(1, 1, bundle.Up), (0, 1)]],
        )
        report.add(_equation_verdict("cross-twisted-inverse-left", lhs, unit), on_verdict)
        rhs = multi_product(
            [r, r_inv], pair,
            [[(0, 0), (1, 0, bundle.D)], [(1, 1), (0, 1, bundle.Up)]],
        )
        report.add(_equation_verdict("cross-twisted-inverse-right", rhs, unit), on_verdict)

    report.add(
        _equation_verdict(
            "cross-D-invariance", apply_maps(r, (bundle.D, bundle.Dp)), r
        ),
        on_verdict,
    )
    report.add(
        _equation_verdict(
            "cross-U-invariance", apply_maps(r, (bundle.U, bundle.Up)), r
        ),
        on_verdict,
    )

    legs_hhp = (bundle.H, bundle.H, bundle.Hp)
    lhs = multi_product(
        [bundle.p, r, r], legs_hhp,
        [[(0, 0), (1, 0)], [(0, 1), (2, 0)], [(1, 1), (2, 1)]],
    )
    rhs = multi_product(
        [bundle.p, r, r], legs_hhp,
        [[(1, 0), (0, 0)], [(2, 0), (0, 1)], [(2, 1), (1, 1)]],
    )
    report.add(_equation_verdict("p-r-braiding", lhs, rhs), on_verdict)

    legs_hpp = (bundle.H, bundle.Hp, bundle.Hp)
    lhs = multi_product(
        [r, r, bundle.pp], legs_hpp,
        [[(0, 0), (1, 0)], [(0, 1), (2, 0)], [(1, 1), (2, 1)]],
    )
    rhs = multi_product(
        [r, r, bundle.pp], legs_hpp,
        [[(1, 0), (0, 0)], [(2, 0), (0, 1)], [(2, 1), (1, 1)]],
    )
    report.add(_equation_verdict("p'-r-braiding", lhs, rhs), on_verdict)

    bundle.certified = report.passed
    return report


def certify_nonuple(bundle):
    report = check_nonuple(bundle)
    if not report.passed:
        raise CertificationError(report)
    return bundle


def swap_nonuple_orientation(bundle):
    """Swap D with U and D' with U'; the result is again a valid bundle."""
    bundle.require_certified()
    swapped = Nonuple(
        bundle.H, bundle.Hp, bundle.p, bundle.pp, bundle.r,
        bundle.U, bundle.D, bundle.Up, bundle.Dp,
        p_inverse=bundle.left.r_inverse,
        pp_inverse=bundle.right.r_inverse,
        r_inverse=bundle.r_inverse,
    )
    return certify_nonuple(swapped)


def derived_identities(bundle, on_verdict=None):
    """Four consequences of the braiding laws; must hold on certified bundles."""
    bundle.require_certified()
    report = CheckReport(f"nonuple-consequences({bundle.H.name}, {bundle.Hp.name})")
    r = bundle.r
    big_r = bundle.ensure_r_inverse()
    p = bundle.p
    big_p = ensure_inverse(bundle.left)
    pp = bundle.pp
    big_pp = ensure_inverse(bundle.right)

    legs = (bundle.H, bundle.H, bundle.Hp)
    lhs = multi_product(
        [r, r], legs, [[(0, 0)], [(1, 0)], [(0, 1), (1, 1)]]
    )
    rhs = multi_product(
        [big_p, r, p, r], legs,
        [[(0, 0), (1, 0), (2, 0)], [(0, 1), (3, 0), (2, 1)], [(3, 1), (1, 1)]],
    )
    report.add(_equation_verdict("exchange-r-r", lhs, rhs), on_verdict)

    legs = (bundle.H, bundle.Hp, bundle.Hp)
    lhs = multi_product(
        [r, pp], legs, [[(0, 0)], [(1, 0)], [(0, 1), (1, 1)]]
    )
    rhs = multi_product(
        [big_r, r, r, pp], legs,
        [[(0, 0), (1, 0), (2, 0)], [(0, 1), (3, 0), (2, 1)], [(3, 1), (1, 1)]],
    )
    report.add(_equation_verdict("exchange-r-p'", lhs, rhs), on_verdict)

    legs = (bundle.Hp, bundle.H, bundle.H)
    lhs = multi_product(
        [big_r, p], legs, [[(0, 1)], [(1, 0)], [(0, 0), (1, 1)]]
    )
    rhs = multi_product(
        [r, big_r, big_r, p], legs,
        [[(0, 1), (1, 1), (2, 1)], [(0, 0), (3, 0), (2, 0)], [(3, 1), (1, 0)]],
    )
    report.add(_equation_verdict("exchange-inverse-p", lhs, rhs), on_verdict)

    legs = (bundle.Hp, bundle.Hp, bundle.H)
    lhs = multi_product(
        [big_r, big_r], legs, [[(0, 1)], [(1, 1)], [(0, 0), (1, 0)]]
    )
    rhs = multi_product(
        [big_pp, big_r, pp, big_r], legs,
        [[(0, 0), (1, 1), (2, 0)], [(0, 1), (3, 1), (2, 1)], [(3, 0), (1, 0)]],
    )
    report.add(_equation_verdict("exchange-inverse-inverse", lhs, rhs), on_verdict)
    return report


def _require_shared_components(n_r, n_q):
    n_r.require_certified()
    n_q.require_certified()
    shared = (
        n_r.H == n_q.H
        and n_r.Hp == n_q.Hp
        and n_r.p == n_q.p
        and n_r.pp == n_q.pp
        and n_r.D == n_q.D
        and n_r.U == n_q.U
        and n_r.Dp == n_q.Dp
        and n_r.Up == n_q.Up
    )
    if not shared:
        raise ComponentMismatchError(
            "the two bundles must share H, H', p, p' and all four maps"
        )


def check_pair_compat(n_r, n_q, on_verdict=None):
    """Compatibility of the two coupling elements r and q of sibling bundles.

    The two base conditions are checked always; the two consequence forms are
    verified additionally once the base conditions hold.
    """
    _require_shared_components(n_r, n_q)
    report = CheckReport(f"pair-compat({n_r.H.name}, {n_r.Hp.name})")
    r = n_r.r
    q = n_q.r
    big_q = n_q.ensure_r_inverse()
    big_r = n_r.ensure_r_inverse()
    p = n_r.p
    pp = n_r.pp

    legs = (n_r.Hp, n_r.H, n_r.Hp)
    lhs = multi_product(
        [big_q, pp, r], legs,
        [[(0, 1), (1, 0)], [(0, 0), (2, 0)], [(1, 1), (2, 1)]],
    )
    rhs = multi_product(
        [big_q, pp, r], legs,
        [[(1, 0), (0, 1)], [(2, 0), (0, 0)], [(2, 1), (1, 1)]],
    )
    first = report.add(_equation_verdict("q-braiding-p'", lhs, rhs), on_verdict)

    legs = (n_r.H, n_r.Hp, n_r.H)
    lhs = multi_product(
        [r, p, big_q], legs,
        [[(0, 0), (1, 0)], [(0, 1), (2, 1)], [(1, 1), (2, 0)]],
    )
    rhs = multi_product(
        [r, p, big_q], legs,
        [[(1, 0), (0, 0)], [(2, 1), (0, 1)], [(2, 0), (1, 1)]],
    )
    second = report.add(_equation_verdict("q-braiding-p", lhs, rhs), on_verdict)

    if first.passed and second.passed:
        legs = (n_r.Hp, n_r.H, n_r.Hp)
        lhs = multi_product(
            [pp, r], legs, [[(0, 0)], [(1, 0)], [(0, 1), (1, 1)]]
        )
        rhs = multi_product(
            [q, pp, big_q, r], legs,
            [[(0, 1), (1, 0), (2, 1)], [(0, 0), (3, 0), (2, 0)], [(3, 1), (1, 1)]],
        )
        report.add(_equation_verdict("q-consequence-p'", lhs, rhs), on_verdict)

        legs = (n_r.H, n_r.Hp, n_r.H)
        lhs = multi_product(
            [p, big_q], legs, [[(0, 0)], [(1, 1)], [(0, 1), (1, 0)]]
        )
        rhs = multi_product(
            [big_r, p, r, big_q], legs,
            [[(0, 0), (1, 0), (2, 0)], [(0, 1), (3, 1), (2, 1)], [(3, 0), (1, 1)]],
        )
        report.add(_equation_verdict("q-consequence-p", lhs, rhs), on_verdict)
    return report


def _paired_candidate(bundle, alpha4, inverse4):
    """Flatten a four-leg structure element to the pair algebra and certify."""
    carrier = tensor_algebra(bundle.H, bundle.Hp)
    alpha = flatten(alpha4, [2, 2])
    inverse = flatten(inverse4, [2, 2])
    candidate = OqaCandidate(
        carrier,
        alpha,
        tensor_map(bundle.D, bundle.Dp),
        tensor_map(bundle.U, bundle.Up),
        inverse,
    )
    return certify(candidate)


def build_thm35(n_r, n_q):
    """Pairing construction from two compatible coupling elements.

    Structure element  r_k p_i ⊗ p'_j Qᵗ ⊗ pⁱ Q_t ⊗ rᵏ p'ʲ  on H⊗H', with
    maps D⊗D' and U⊗U'; its stated inverse is verified, not assumed.
    """
    compat = check_pair_compat(n_r, n_q)
    if not compat.passed:
        raise CertificationError(compat)
    r = n_r.r
    q = n_q.r
    big_q = n_q.ensure_r_inverse()
    big_r = n_r.ensure_r_inverse()
    p = n_r.p
    pp = n_r.pp
    big_p = ensure_inverse(n_r.left)
    big_pp = ensure_inverse(n_r.right)
    four = (n_r.H, n_r.Hp, n_r.H, n_r.Hp)
    alpha4 = multi_product(
        [r, p, pp, big_q], four,
        [
            [(0, 0), (1, 0)],
            [(2, 0), (3, 1)],
            [(1, 1), (3, 0)],
            [(0, 1), (2, 1)],
        ],
    )
    inverse4 = multi_product(
        [big_p, big_r, q, big_pp], four,
        [
            [(0, 0), (1, 0)],
            [(2, 1), (3, 0)],
            [(2, 0), (0, 1)],
            [(3, 1), (1, 1)],
        ],
    )
    return _paired_candidate(n_r, alpha4, inverse4)


def build_thm36(bundle):
    """Pairing construction of a single bundle (the q = r specialisation).

    Structure element  r_k p_i ⊗ p'_j Rⁿ ⊗ pⁱ R_n ⊗ rᵏ p'ʲ  on H⊗H'.
    """
    bundle.require_certified()
    r = bundle.r
    big_r = bundle.ensure_r_inverse()
    p = bundle.p
    pp = bundle.pp
    big_p = ensure_inverse(bundle.left)
    big_pp = ensure_inverse(bundle.right)
    four = (bundle.H, bundle.Hp, bundle.H, bundle.Hp)
    alpha4 = multi_product(
        [r, p, pp, big_r], four,
        [
            [(0, 0), (1, 0)],
            [(2, 0), (3, 1)],
            [(1, 1), (3, 0)],
            [(0, 1), (2, 1)],
        ],
    )
    inverse4 = multi_product(
        [big_p, big_r, r, big_pp], four,
        [
            [(0, 0), (1, 0)],
            [(2, 1), (3, 0)],
            [(2, 0), (0, 1)],
            [(3, 1), (1, 1)],
        ],
    )
    return _paired_candidate(bundle, alpha4, inverse4)


def build_thm37(candidate):
    """Tensor-square pairing of an OQA with itself (p' = r = p).

    Structure element  p_i p_j ⊗ p_k Pˡ ⊗ pʲ P_l ⊗ pⁱ pᵏ  on H⊗H.
    """
    candidate.require_certified()
    p = candidate.r
    big_p = ensure_inverse(candidate)
    algebra = candidate.algebra
    four = (algebra,) * 4
    alpha4 = multi_product(
        [p, p, p, big_p], four,
        [
            [(0, 0), (1, 0)],
            [(2, 0), (3, 1)],
            [(1, 1), (3, 0)],
            [(0, 1), (2, 1)],
        ],
    )
    inverse4 = multi_product(
        [big_p, big_p, p, big_p], four,
        [
            [(0, 0), (1, 0)],
            [(2, 1), (3, 0)],
            [(2, 0), (0, 1)],
            [(3, 1), (1, 1)],
        ],
    )
    bundle = diagonal_nonuple(candidate)
    return _paired_candidate(bundle, alpha4, inverse4)
