"""Hopf algebras by basis data, and the couplings that turn them into OQAs.

Coalgebra structure is stored per basis element: the coproduct of a basis
element is a two-leg tensor element, the counit a scalar, the antipode a
(linear, not multiplicative) map.  The checker certifies coassociativity,
counit laws, the bialgebra compatibilities, the antipode law and antipode
bijectivity, all exactly and basis-elementwise (enough by linearity).

On certified Hopf algebras this module checks universal coupling elements of
two kinds: a quasitriangular structure p in H⊗H (coproduct splitting, almost
cocommutativity, counit normalisation) and a weak coupling element r in H⊗H'
between two Hopf algebras (the two coproduct splitting laws).  Both feed the
constructions: (H, p, id, S⁻²) is an OQA; a weak coupling twists the tensor
product coalgebra into the bicrossed-coproduct Hopf algebra on H⊗H', two
quasitriangular structures combine with it to a quasitriangular structure on
that twisted Hopf algebra, and the same data assembles a certified cross
bundle whose pairing construction recovers exactly that combined element.
"""

from __future__ import annotations

from . import linalg
from .algebra import (
    AlgebraMap,
    Element,
    ShapeMismatchError,
    _coerce_scalar,
    identity_map,
    make_map,
    tensor_algebra,
    tensor_map,
)
from .nonuple import Nonuple, certify_nonuple, build_thm36
from .oriented import OqaCandidate, certify, _equation_verdict
from .reports import CertificationError, CheckReport, UncertifiedInputError, Verdict, Witness
from .scalars import Scalar, scalar_eq
from .tensors import (
    TensorElement,
    apply_maps,
    first_difference,
    flatten,
    multi_product,
    outer,
    permute_legs,
    tensor_invert,
    tensor_multiply,
    to_element,
)


class HopfAlgebra:
    """Algebra plus per-basis coproduct, counit and antipode data."""

    __slots__ = ("algebra", "delta", "counit", "antipode", "antipode_inverse", "certified")

    def __init__(self, algebra, delta, counit, antipode, antipode_inverse=None):
        self.algebra = algebra
        self.delta = tuple(delta)
        self.counit = tuple(counit)
        self.antipode = antipode
        self.antipode_inverse = antipode_inverse
        self.certified = False
        if len(self.delta) != algebra.dim or len(self.counit) != algebra.dim:
            raise ShapeMismatchError("coproduct and counit need one entry per basis element")
        for t in self.delta:
            if t.legs != (algebra, algebra):
                raise ShapeMismatchError("coproduct values must live in H⊗H")

    def require_certified(self):
        if not self.certified:
            raise UncertifiedInputError(
                f"Hopf data on {self.algebra.name} has not passed check_hopf"
            )

    def coproduct(self, element):
        out = TensorElement.zero((self.algebra, self.algebra))
        for i, c in element.coeffs.items():
            out = out + self.delta[i].scale(c)
        return out

    def counit_of(self, element):
        total = Scalar.zero(self.algebra.params)
        for i, c in element.coeffs.items():
            total = total + c * self.counit[i]
        return total

    def substitute(self, assignment):
        algebra = self.algebra.substitute(assignment)
        delta = [t.substitute(assignment) for t in self.delta]
        counit = [c.substitute(assignment) for c in self.counit]
        antipode = self.antipode.substitute(assignment)
        inverse = (
            self.antipode_inverse.substitute(assignment)
            if self.antipode_inverse is not None else None
        )
        return HopfAlgebra(algebra, delta, counit, antipode, inverse)

    def __repr__(self):
        state = "certified" if self.certified else "unchecked"
        return f"HopfAlgebra({self.algebra.name}, {state})"


def make_hopf(algebra, delta, counit, antipode):
    """Assemble Hopf data from labelled dictionaries (not yet certified)."""
    delta_list = []
    for label in algebra.basis:
        value = delta[label]
        if isinstance(value, TensorElement):
            delta_list.append(value)
        else:
            delta_list.append(
                TensorElement.from_terms((algebra, algebra), value)
            )
    counit_list = [
        _coerce_scalar(counit[label], algebra.params) for label in algebra.basis
    ]
    if isinstance(antipode, AlgebraMap):
        smap = antipode
    else:
        smap = make_map(algebra, algebra, antipode)
    return HopfAlgebra(algebra, delta_list, counit_list, smap)


def _apply_delta_leg(h, t, leg):
    """Substitute the coproduct into one leg, increasing the arity by one."""
    legs = t.legs[:leg] + (h.algebra, h.algebra) + t.legs[leg + 1:]
    acc = {}
    for idx, c in t.coeffs.items():
        for didx, dc in h.delta[idx[leg]].coeffs.items():
            key = idx[:leg] + didx + idx[leg + 1:]
            value = c * dc
            acc[key] = acc[key] + value if key in acc else value
    return TensorElement(legs, acc)


def _counit_contract(h, t, leg):
    legs = t.legs[:leg] + t.legs[leg + 1:]
    acc = {}
    for idx, c in t.coeffs.items():
        factor = h.counit[idx[leg]]
        if factor.is_zero():
            continue
        key = idx[:leg] + idx[leg + 1:]
        value = c * factor
        acc[key] = acc[key] + value if key in acc else value
    return TensorElement(legs, acc)


def _basis_verdict(axiom, algebra, failures, on_verdict, report):
    if not failures:
        return report.add(Verdict(axiom, True), on_verdict)
    label, witness = failures[0]
    return report.add(
        Verdict(axiom, False, witness, note=f"fails on basis element {label!r}"),
        on_verdict,
    )


def check_hopf(h, on_verdict=None):
    """Certify the full Hopf axiom set, basis element by basis element."""
    algebra = h.algebra
    report = CheckReport(f"hopf({algebra.name})")
    one = Scalar.one(algebra.params)

    failures = []
    for i, label in enumerate(algebra.basis):
        lhs = _apply_delta_leg(h, h.delta[i], 0)
        rhs = _apply_delta_leg(h, h.delta[i], 1)
        diff = first_difference(lhs, rhs)
        if diff is not None:
            failures.append((label, Witness(lhs.labels(diff[0]), str(diff[1]), str(diff[2]))))
    _basis_verdict("coassociativity", algebra, failures, on_verdict, report)

    for axiom, leg in (("counit-left", 0), ("counit-right", 1)):
        failures = []
        for i, label in enumerate(algebra.basis):
            got = _counit_contract(h, h.delta[i], leg)
            want = TensorElement((algebra,), {(i,): one})
            diff = first_difference(got, want)
            if diff is not None:
                failures.append((label, Witness(got.labels(diff[0]), str(diff[1]), str(diff[2]))))
        _basis_verdict(axiom, algebra, failures, on_verdict, report)

    failures = []
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            product_vec = algebra.mul_basis(i, j)
            lhs = TensorElement.zero((algebra, algebra))
            for k, c in product_vec.items():
                lhs = lhs + h.delta[k].scale(c)
            rhs = tensor_multiply(h.delta[i], h.delta[j])
            diff = first_difference(lhs, rhs)
            if diff is not None:
                label = f"{algebra.basis[i]}*{algebra.basis[j]}"
                failures.append((label, Witness(lhs.labels(diff[0]), str(diff[1]), str(diff[2]))))
    _basis_verdict("coproduct-multiplicative", algebra, failures, on_verdict, report)

    unit_delta = h.coproduct(algebra.one())
    diff = first_difference(unit_delta, TensorElement.unit((algebra, algebra)))
    report.add(
        Verdict(
            "coproduct-unital",
            diff is None,
            None if diff is None else Witness(unit_delta.labels(diff[0]), str(diff[1]), str(diff[2])),
        ),
        on_verdict,
    )

    failures = []
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            lhs = Scalar.zero(algebra.params)
            for k, c in algebra.mul_basis(i, j).items():
                lhs = lhs + c * h.counit[k]
            rhs = h.counit[i] * h.counit[j]
            if not scalar_eq(lhs, rhs):
                label = f"{algebra.basis[i]}*{algebra.basis[j]}"
                failures.append((label, Witness((label,), str(lhs), str(rhs))))
    _basis_verdict("counit-multiplicative", algebra, failures, on_verdict, report)

    unit_counit = h.counit_of(algebra.one())
    report.add(
        Verdict(
            "counit-unital",
            scalar_eq(unit_counit, one),
            None if scalar_eq(unit_counit, one) else Witness(("1",), str(unit_counit), "1"),
        ),
        on_verdict,
    )

    for axiom, first_leg in (("antipode-left", True), ("antipode-right", False)):
        failures = []
        for i, label in enumerate(algebra.basis):
            acc = algebra.zero()
            for (k1, k2), c in h.delta[i].coeffs.items():
                if first_leg:
                    term = h.antipode.images[k1] * Element(algebra, {k2: c})
                else:
                    term = Element(algebra, {k1: c}) * h.antipode.images[k2]
                acc = acc + term
            want = algebra.one().scale(h.counit[i])
            if not acc == want:
                failures.append((label, Witness((label,), str(acc), str(want))))
        _basis_verdict(axiom, algebra, failures, on_verdict, report)

    bijective = True
    note = None
    if h.antipode_inverse is None:
        try:
            rows = h.antipode.coefficient_rows()
            inverse_rows = linalg.invert_sparse(rows, algebra.dim)
            images = []
            for j in range(algebra.dim):
                coeffs = {}
                for i, row in enumerate(inverse_rows):
                    value = row.get(j)
                    if value is not None and not value.is_zero():
                        coeffs[i] = value
                images.append(Element(algebra, coeffs))
            h.antipode_inverse = AlgebraMap(algebra, algebra, images)
        except linalg.SingularMatrixError as err:
            bijective = False
            note = str(err)
    if bijective:
        for i in range(algebra.dim):
            want = algebra.basis_element(algebra.basis[i])
            if not h.antipode_inverse.apply(h.antipode.images[i]) == want:
                bijective = False
                note = "stored inverse does not invert the antipode"
                break
    report.add(Verdict("antipode-bijective", bijective, note=note), on_verdict)

    h.certified = report.passed
    return report


def certify_hopf(h):
    report = check_hopf(h)
    if not report.passed:
        raise CertificationError(report)
    return h


def _split_left(h_left, coupling, legs):
    """Both sides of the first coproduct-splitting law."""
    lhs = _apply_delta_leg(h_left, coupling, 0)
    rhs = multi_product(
        [coupling, coupling], legs,
        [[(0, 0)], [(1, 0)], [(0, 1), (1, 1)]],
    )
    return lhs, rhs


def _split_right(h_right, coupling, legs):
    """Both sides of the second coproduct-splitting law."""
    lhs = _apply_delta_leg(h_right, coupling, 1)
    rhs = multi_product(
        [coupling, coupling], legs,
        [[(0, 0), (1, 0)], [(1, 1)], [(0, 1)]],
    )
    return lhs, rhs


def _invertibility_verdict(coupling):
    try:
        inverse = tensor_invert(coupling)
        return Verdict("invertible", True), inverse
    except Exception as err:
        return Verdict("invertible", False, note=str(err)), None


def check_quasitriangular(h, p, on_verdict=None):
    """Universal coupling checks for p in H⊗H over a certified Hopf algebra."""
    h.require_certified()
    algebra = h.algebra
    if p.legs != (algebra, algebra):
        raise ShapeMismatchError("the coupling element must live in H⊗H")
    report = CheckReport(f"quasitriangular({algebra.name})")

    verdict, _ = _invertibility_verdict(p)
    report.add(verdict, on_verdict)

    lhs, rhs = _split_left(h, p, (algebra, algebra, algebra))
    report.add(_equation_verdict("coproduct-splitting-left", lhs, rhs), on_verdict)
    lhs, rhs = _split_right(h, p, (algebra, algebra, algebra))
    report.add(_equation_verdict("coproduct-splitting-right", lhs, rhs), on_verdict)

    failures = []
    for i, label in enumerate(algebra.basis):
        cop = permute_legs(h.delta[i], (1, 0))
        lhs = tensor_multiply(cop, p)
        rhs = tensor_multiply(p, h.delta[i])
        diff = first_difference(lhs, rhs)
        if diff is not None:
            failures.append((label, Witness(lhs.labels(diff[0]), str(diff[1]), str(diff[2]))))
    _basis_verdict("almost-cocommutative", algebra, failures, on_verdict, report)

    one = TensorElement((algebra,), {(i,): c for i, c in algebra.unit.items()})
    left = _counit_contract(h, p, 0)
    right = _counit_contract(h, p, 1)
    ok = first_difference(left, one) is None and first_difference(right, one) is None
    report.add(
        Verdict(
            "counit-normalized",
            ok,
            note=None if ok else "counit applied to a coupling leg must give 1",
        ),
        on_verdict,
    )
    return report


def check_weak_rmatrix(h, h2, r, on_verdict=None):
    """Weak coupling checks for r in H⊗H', plus their antipode consequences.

    When the two splitting laws and invertibility hold, the inverse equals
    both (S⊗id)(r) and (id⊗S'⁻¹)(r), and (S⊗S')(r) = r; these are verified
    as regression guards rather than assumed.
    """
    h.require_certified()
    h2.require_certified()
    a, b = h.algebra, h2.algebra
    if r.legs != (a, b):
        raise ShapeMismatchError("the coupling element must live in H⊗H'")
    report = CheckReport(f"weak-coupling({a.name}, {b.name})")

    verdict, inverse = _invertibility_verdict(r)
    report.add(verdict, on_verdict)

    lhs, rhs = _split_left(h, r, (a, a, b))
    left_split = report.add(
        _equation_verdict("coproduct-splitting-left", lhs, rhs), on_verdict
    )
    lhs, rhs = _split_right(h2, r, (a, b, b))
    right_split = report.add(
        _equation_verdict("coproduct-splitting-right", lhs, rhs), on_verdict
    )

    if inverse is not None and left_split.passed and right_split.passed:
        via_antipode = apply_maps(r, (h.antipode, None))
        report.add(
            _equation_verdict("antipode-inverse-form-left", via_antipode, inverse),
            on_verdict,
        )
        via_inverse_antipode = apply_maps(r, (None, h2.antipode_inverse))
        report.add(
            _equation_verdict("antipode-inverse-form-right", via_inverse_antipode, inverse),
            on_verdict,
        )
        both = apply_maps(r, (h.antipode, h2.antipode))
        report.add(
            _equation_verdict("antipode-pair-invariance", both, r), on_verdict
        )
    return report


def antipode_square_inverse(h):
    """S⁻² as a certified automorphism of the underlying algebra."""
    h.require_certified()
    s_inv = h.antipode_inverse
    images = [s_inv.apply(s_inv.images[i]) for i in range(h.algebra.dim)]
    return make_map(h.algebra, h.algebra, images, require_automorphism=True)


def qt_to_oqa(h, p):
    """(H, p, id, S⁻²) as a certified OQA."""
    report = check_quasitriangular(h, p)
    if not report.passed:
        raise CertificationError(report)
    candidate = OqaCandidate(
        h.algebra, p, identity_map(h.algebra), antipode_square_inverse(h)
    )
    return certify(candidate)


def _pair_tensor(u, v):
    """Element pair (u, v) as a two-leg tensor element."""
    left = TensorElement((u.algebra,), {(i,): c for i, c in u.coeffs.items()})
    right = TensorElement((v.algebra,), {(i,): c for i, c in v.coeffs.items()})
    return outer(left, right)


def bicrossed_coproduct(h, h2, r):
    """Twist the tensor-product coalgebra of H and H' by a weak coupling.

    On the algebra H⊗H' the coproduct of a pair h⊗h' becomes
    h₁ ⊗ rⁱ h'₁ Rˡ ⊗ r_i h₂ R_l ⊗ h'₂ and the antipode conjugates the
    componentwise antipode by r.  The result is certified before returning.
    """
    weak = check_weak_rmatrix(h, h2, r)
    if not weak.passed:
        raise CertificationError(weak)
    a, b = h.algebra, h2.algebra
    carrier = tensor_algebra(a, b)
    inverse = tensor_invert(r)

    delta = []
    counit = []
    antipode_images = []
    for i in range(a.dim):
        for j in range(b.dim):
            four = multi_product(
                [h.delta[i], h2.delta[j], r, inverse],
                (a, b, a, b),
                [
                    [(0, 0)],
                    [(2, 1), (1, 0), (3, 1)],
                    [(2, 0), (0, 1), (3, 0)],
                    [(1, 1)],
                ],
            )
            delta.append(flatten(four, [2, 2]))
            counit.append(h.counit[i] * h2.counit[j])
            conjugated = tensor_multiply(
                tensor_multiply(
                    inverse,
                    _pair_tensor(h.antipode.images[i], h2.antipode.images[j]),
                ),
                r,
            )
            antipode_images.append(to_element(conjugated))
    antipode = AlgebraMap(carrier, carrier, antipode_images)
    out = HopfAlgebra(carrier, delta, counit, antipode)
    return certify_hopf(out)


def combined_coupling(p, p2, r, r_inverse=None):
    """The induced coupling  r_k p_i ⊗ p'_j Rˡ ⊗ pⁱ R_l ⊗ rᵏ p'ʲ, flattened."""
    a = p.legs[0]
    b = p2.legs[0]
    inverse = r_inverse if r_inverse is not None else tensor_invert(r)
    four = multi_product(
        [r, p, p2, inverse],
        (a, b, a, b),
        [
            [(0, 0), (1, 0)],
            [(2, 0), (3, 1)],
            [(1, 1), (3, 0)],
            [(0, 1), (2, 1)],
        ],
    )
    return flatten(four, [2, 2])


def qt_bicrossed(h, h2, p, p2, r):
    """Bicrossed-coproduct Hopf algebra plus its combined coupling element."""
    for hopf, coupling in ((h, p), (h2, p2)):
        report = check_quasitriangular(hopf, coupling)
        if not report.passed:
            raise CertificationError(report)
    twisted = bicrossed_coproduct(h, h2, r)
    bracket = combined_coupling(p, p2, r)
    report = check_quasitriangular(twisted, bracket)
    if not report.passed:
        raise CertificationError(report)
    return twisted, bracket


def cor39_oqa(h, h2, p, p2, r):
    """OQA on H⊗H' from two quasitriangular structures and a weak coupling.

    Assembles the cross bundle (H, H', p, p', r, id, S⁻², id, S'⁻²), certifies
    it, runs the pairing construction, and additionally verifies that the
    square of the twisted Hopf algebra's inverse antipode is the tensor
    product of the componentwise ones, on every basis element.
    """
    for hopf, coupling in ((h, p), (h2, p2)):
        report = check_quasitriangular(hopf, coupling)
        if not report.passed:
            raise CertificationError(report)
    weak = check_weak_rmatrix(h, h2, r)
    if not weak.passed:
        raise CertificationError(weak)

    bundle = Nonuple(
        h.algebra, h2.algebra, p, p2, r,
        identity_map(h.algebra), antipode_square_inverse(h),
        identity_map(h2.algebra), antipode_square_inverse(h2),
    )
    certify_nonuple(bundle)
    result = build_thm36(bundle)

    twisted = bicrossed_coproduct(h, h2, r)
    s_inv = twisted.antipode_inverse
    expected = tensor_map(
        antipode_square_inverse(h), antipode_square_inverse(h2)
    )
    report = CheckReport(f"antipode-square-splitting({twisted.algebra.name})")
    failures = []
    for i, label in enumerate(twisted.algebra.basis):
        got = s_inv.apply(s_inv.images[i])
        want = expected.images[i]
        if not got == want:
            failures.append((label, Witness((label,), str(got), str(want))))
    _basis_verdict("antipode-square-splitting", twisted.algebra, failures, None, report)
    if not report.passed:
        raise CertificationError(report)
    return result
