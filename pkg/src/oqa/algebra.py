"""Finite-dimensional unital associative algebras given by structure constants.

An algebra is a named basis plus a sparse multiplication table: ``mul[(i, j)]``
is the coefficient vector of the product of basis elements ``i`` and ``j``.
Validation checks associativity on every basis triple and the two-sided unit
law, so anything admitted by :func:`make_algebra` really is an algebra.
Elements, linear maps and certified automorphisms live here too, together with
opposite and tensor-product algebras and exact element inversion.

Everything is immutable after construction and safe to share.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .scalars import Scalar, parse_scalar, scalar_eq


class AlgebraError(Exception):
    """Base class for structural errors in this module."""


class NonAssociativeError(AlgebraError):
    def __init__(self, algebra, i, j, k, left, right):
        self.triple = (i, j, k)
        labels = tuple(algebra.basis[t] for t in (i, j, k))
        super().__init__(
            f"associativity fails on {labels}: "
            f"({labels[0]}*{labels[1]})*{labels[2]} = {left} but "
            f"{labels[0]}*({labels[1]}*{labels[2]}) = {right}"
        )


class BadUnitError(AlgebraError):
    def __init__(self, algebra, i):
        self.index = i
        super().__init__(f"unit law fails on basis element {algebra.basis[i]!r}")


class NotMultiplicativeError(AlgebraError):
    def __init__(self, source, i, j):
        self.pair = (i, j)
        super().__init__(
            f"map is not multiplicative on ({source.basis[i]!r}, {source.basis[j]!r})"
        )


class NotUnitalError(AlgebraError):
    pass


class SingularError(AlgebraError):
    pass


class NotInvertibleError(AlgebraError):
    pass


class ShapeMismatchError(AlgebraError):
    pass


def _coerce_scalar(value, params):
    if isinstance(value, Scalar):
        return value.extend(params) if value.params != tuple(params) else value
    if isinstance(value, (int, Fraction)):
        return Scalar.from_rational(value, params)
    if isinstance(value, str):
        return parse_scalar(value, params)
    raise TypeError(f"cannot interpret {value!r} as a scalar")


class Algebra:
    """Structure-constant algebra with a fixed ordered basis.

    Tensor-product algebras remember their two factors so that regrouping and
    parameter substitution compose; plain algebras have ``factors = None``.
    """

    __slots__ = (
        "name", "params", "basis", "dim", "mul", "unit", "factors",
        "_index", "_fingerprint",
    )

    def __init__(self, name, params, basis, mul, unit, factors=None):
        self.name = name
        self.params = tuple(params)
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        self.mul = mul
        self.unit = unit
        self.factors = factors
        self._index = {label: i for i, label in enumerate(self.basis)}
        self._fingerprint = None
        if len(self._index) != self.dim:
            raise AlgebraError(f"duplicate basis labels in {name!r}")

    def index(self, label):
        if isinstance(label, int):
            if not 0 <= label < self.dim:
                raise AlgebraError(f"basis index {label} out of range for {self.name}")
            return label
        try:
            return self._index[label]
        except KeyError:
            raise AlgebraError(f"unknown basis label {label!r} in {self.name}") from None

    def mul_basis(self, i, j):
        return self.mul.get((i, j), {})

    def one(self):
        return Element(self, dict(self.unit))

    def basis_element(self, label):
        return Element(self, {self.index(label): Scalar.one(self.params)})

    def element(self, coeffs):
        out = {}
        for label, value in coeffs.items():
            scalar = _coerce_scalar(value, self.params)
            if not scalar.is_zero():
                out[self.index(label)] = scalar
        return Element(self, out)

    def zero(self):
        return Element(self, {})

    def fingerprint(self):
        if self._fingerprint is None:
            table = []
            for (i, j), vec in sorted(self.mul.items()):
                for k in sorted(vec):
                    table.append(f"{i},{j},{k}:{vec[k]}")
            unit = ";".join(f"{k}:{self.unit[k]}" for k in sorted(self.unit))
            self._fingerprint = hash(
                (self.name, self.params, self.basis, unit, tuple(table))
            )
        return self._fingerprint

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Algebra):
            return NotImplemented
        return (
            self.name == other.name
            and self.basis == other.basis
            and self.params == other.params
            and self.fingerprint() == other.fingerprint()
        )

    def __hash__(self):
        return hash((self.name, self.basis, self.params))

    def same_table(self, other):
        """Structure-constant equality, ignoring names."""
        if self.basis != other.basis and self.dim != other.dim:
            return False
        keys = set(self.mul) | set(other.mul)
        for key in keys:
            if not _vec_eq(self.mul.get(key, {}), other.mul.get(key, {})):
                return False
        return _vec_eq(self.unit, other.unit)

    def substitute(self, assignment):
        relevant = {k: v for k, v in assignment.items() if k in self.params}
        if not relevant:
            return self
        if self.factors is not None:
            return tensor_algebra(
                self.factors[0].substitute(assignment),
                self.factors[1].substitute(assignment),
            )
        params = tuple(p for p in self.params if p not in relevant)
        tag = ",".join(f"{k}={relevant[k]}" for k in sorted(relevant))
        mul = {}
        for key, vec in self.mul.items():
            out = {}
            for k, c in vec.items():
                s = c.substitute(relevant)
                if not s.is_zero():
                    out[k] = s
            if out:
                mul[key] = out
        unit = {k: c.substitute(relevant) for k, c in self.unit.items()}
        unit = {k: c for k, c in unit.items() if not c.is_zero()}
        return Algebra(f"{self.name}|{tag}", params, self.basis, mul, unit)

    def __repr__(self):
        return f"Algebra({self.name}, dim={self.dim})"


def _vec_eq(u, v):
    for k in set(u) | set(v):
        a = u.get(k)
        b = v.get(k)
        if a is None:
            if not b.is_zero():
                return False
        elif b is None:
            if not a.is_zero():
                return False
        elif not scalar_eq(a, b):
            return False
    return True


def _vec_add(acc, vec, factor):
    for k, c in vec.items():
        value = factor * c
        if k in acc:
            acc[k] = acc[k] + value
        else:
            acc[k] = value


def _vec_clean(vec):
    return {k: c for k, c in vec.items() if not c.is_zero()}


def _mul_vec_basis(algebra, vec, j):
    acc = {}
    for i, c in vec.items():
        _vec_add(acc, algebra.mul_basis(i, j), c)
    return _vec_clean(acc)


def _mul_basis_vec(algebra, i, vec):
    acc = {}
    for j, c in vec.items():
        _vec_add(acc, algebra.mul_basis(i, j), c)
    return _vec_clean(acc)


def validate_algebra(algebra):
    """Check associativity on all basis triples and the two-sided unit law."""
    n = algebra.dim
    for i in range(n):
        left = {}
        for k, c in algebra.unit.items():
            _vec_add(left, algebra.mul_basis(k, i), c)
        right = {}
        for k, c in algebra.unit.items():
            _vec_add(right, algebra.mul_basis(i, k), c)
        expected = {i: Scalar.one(algebra.params)}
        if not (_vec_eq(_vec_clean(left), expected) and _vec_eq(_vec_clean(right), expected)):
            raise BadUnitError(algebra, i)
    for i in range(n):
        for j in range(n):
            ij = algebra.mul_basis(i, j)
            for k in range(n):
                left = _mul_vec_basis(algebra, ij, k)
                right = _mul_basis_vec(algebra, i, algebra.mul_basis(j, k))
                if not _vec_eq(left, right):
                    raise NonAssociativeError(
                        algebra, i, j, k,
                        _format_vec(algebra, left), _format_vec(algebra, right),
                    )
    return algebra


def _format_vec(algebra, vec):
    if not vec:
        return "0"
    return " + ".join(f"({vec[k]})*{algebra.basis[k]}" for k in sorted(vec))


def make_algebra(name, params, basis, mul, unit, validate=True):
    """Build an algebra from labelled structure constants.

    ``mul`` maps label pairs to coefficient mappings (absent pairs multiply to
    zero); ``unit`` is the coefficient mapping of the identity element.
    Coefficients may be scalar strings, integers, fractions or scalars.
    """
    params = tuple(params)
    basis = tuple(basis)
    index = {label: i for i, label in enumerate(basis)}
    table = {}
    for (left, right), vec in mul.items():
        out = {}
        for label, value in vec.items():
            scalar = _coerce_scalar(value, params)
            if not scalar.is_zero():
                out[index[label]] = scalar
        if out:
            table[(index[left], index[right])] = out
    unit_vec = {}
    for label, value in unit.items():
        scalar = _coerce_scalar(value, params)
        if not scalar.is_zero():
            unit_vec[index[label]] = scalar
    algebra = Algebra(name, params, basis, table, unit_vec)
    if validate:
        validate_algebra(algebra)
    return algebra


_MATRIX_CACHE = {}


def matrix_algebra(n, name=None, params=("a",)):
    """Full matrix algebra with basis ``Eij`` in row-major order."""
    if n < 1:
        raise AlgebraError("matrix algebra needs n >= 1")
    params = tuple(params)
    key = (n, name, params)
    if key in _MATRIX_CACHE:
        return _MATRIX_CACHE[key]
    # single-digit indices concatenate unambiguously; larger sizes need a separator
    fmt = "E{}{}" if n <= 9 else "E{}_{}"
    basis = [fmt.format(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    idx = lambda i, j: (i - 1) * n + (j - 1)
    one = Scalar.one(params)
    mul = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for m in range(1, n + 1):
                mul[(idx(i, j), idx(j, m))] = {idx(i, m): one}
    unit = {idx(i, i): one for i in range(1, n + 1)}
    algebra = Algebra(name or f"M{n}", params, tuple(basis), mul, unit)
    _MATRIX_CACHE[key] = algebra
    return algebra


def opposite(algebra):
    """Same space, reversed multiplication."""
    mul = {(j, i): dict(vec) for (i, j), vec in algebra.mul.items()}
    out = Algebra(
        f"{algebra.name}^op", algebra.params, algebra.basis, mul, dict(algebra.unit)
    )
    return validate_algebra(out)


_TENSOR_CACHE = {}


def _compound_name(name):
    return f"({name})" if "⊗" in name else name


def tensor_algebra(left, right):
    """Tensor product algebra; basis is lexicographically ordered pairs."""
    key = (left.fingerprint(), right.fingerprint(), left.name, right.name)
    cached = _TENSOR_CACHE.get(key)
    if cached is not None:
        return cached
    if left.params != right.params:
        raise ShapeMismatchError(
            f"parameter mismatch: {left.params} vs {right.params}"
        )
    dim_b = right.dim
    basis = tuple(
        f"{la}⊗{lb}" for la in left.basis for lb in right.basis
    )
    mul = {}
    for (i1, j1), vec_a in left.mul.items():
        for (i2, j2), vec_b in right.mul.items():
            out = {}
            for k1, c1 in vec_a.items():
                for k2, c2 in vec_b.items():
                    out[k1 * dim_b + k2] = c1 * c2
            mul[(i1 * dim_b + i2, j1 * dim_b + j2)] = out
    unit = {}
    for k1, c1 in left.unit.items():
        for k2, c2 in right.unit.items():
            unit[k1 * dim_b + k2] = c1 * c2
    name = f"{_compound_name(left.name)}⊗{_compound_name(right.name)}"
    algebra = Algebra(name, left.params, basis, mul, unit, factors=(left, right))
    _TENSOR_CACHE[key] = algebra
    return algebra


class Element:
    """Sparse element of an algebra: basis index -> nonzero scalar."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = {i: c for i, c in coeffs.items() if not c.is_zero()}

    def is_zero(self):
        return not self.coeffs

    def _check_same(self, other):
        if self.algebra != other.algebra:
            raise ShapeMismatchError(
                f"elements of different algebras: {self.algebra.name} vs {other.algebra.name}"
            )

    def __add__(self, other):
        self._check_same(other)
        acc = dict(self.coeffs)
        _vec_add(acc, other.coeffs, Scalar.one(self.algebra.params))
        return Element(self.algebra, acc)

    def __neg__(self):
        return Element(self.algebra, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        factor = _coerce_scalar(factor, self.algebra.params)
        return Element(self.algebra, {i: c * factor for i, c in self.coeffs.items()})

    def __rmul__(self, factor):
        if isinstance(factor, (int, Fraction, Scalar)):
            return self.scale(factor)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        self._check_same(other)
        acc = {}
        for i, ci in self.coeffs.items():
            for j, cj in other.coeffs.items():
                vec = self.algebra.mul_basis(i, j)
                if vec:
                    _vec_add(acc, vec, ci * cj)
        return Element(self.algebra, acc)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check_same(other)
        return _vec_eq(self.coeffs, other.coeffs)

    __hash__ = None

    def substitute(self, assignment):
        algebra = self.algebra.substitute(assignment)
        coeffs = {i: c.substitute(assignment) for i, c in self.coeffs.items()}
        return Element(algebra, coeffs)

    def __str__(self):
        return _format_vec(self.algebra, self.coeffs)

    def __repr__(self):
        return f"Element({self.algebra.name}: {self})"


def invert_element(u):
    """Two-sided inverse by exact linear solve, verified on both sides."""
    algebra = u.algebra
    n = algebra.dim
    rows = [dict() for _ in range(n)]
    # left-multiplication matrix: column j holds coordinates of u * e_j
    for j in range(n):
        acc = {}
        for i, c in u.coeffs.items():
            _vec_add(acc, algebra.mul_basis(i, j), c)
        for k, c in _vec_clean(acc).items():
            rows[k][j] = c
    rhs = dict(algebra.unit)
    try:
        solution = linalg.solve_sparse(rows, rhs, n)
    except linalg.SingularMatrixError as err:
        raise NotInvertibleError(f"{u!r} has no inverse: {err}") from err
    v = Element(algebra, solution)
    one = algebra.one()
    if not (u * v == one and v * u == one):
        raise NotInvertibleError(f"solve result is not a two-sided inverse of {u!r}")
    return v


class AlgebraMap:
    """Linear map given by images of basis elements.

    When ``certified_automorphism`` is set the map has been checked to be a
    unital multiplicative bijection and carries its inverse images.
    """

    __slots__ = ("source", "target", "images", "certified_automorphism", "_inverse_images")

    def __init__(self, source, target, images, certified_automorphism=False,
                 inverse_images=None):
        self.source = source
        self.target = target
        self.images = tuple(images)
        self.certified_automorphism = certified_automorphism
        self._inverse_images = tuple(inverse_images) if inverse_images else None
        if len(self.images) != source.dim:
            raise ShapeMismatchError("one image per source basis element required")

    def apply(self, element):
        if element.algebra != self.source:
            raise ShapeMismatchError(
                f"map on {self.source.name} applied to element of {element.algebra.name}"
            )
        acc = {}
        for i, c in element.coeffs.items():
            _vec_add(acc, self.images[i].coeffs, c)
        return Element(self.target, acc)

    __call__ = apply

    def apply_basis(self, i):
        return self.images[i]

    def compose(self, other):
        """self after other."""
        if other.target != self.source:
            raise ShapeMismatchError("composition shape mismatch")
        images = [self.apply(img) for img in other.images]
        return AlgebraMap(other.source, self.target, images)

    def inverse(self):
        if self._inverse_images is None:
            raise SingularError(f"map on {self.source.name} has no stored inverse")
        return AlgebraMap(
            self.target, self.source, self._inverse_images,
            certified_automorphism=self.certified_automorphism,
            inverse_images=self.images,
        )

    def coefficient_rows(self):
        """Sparse matrix rows: row i holds coefficient of e_i in each image."""
        rows = [dict() for _ in range(self.target.dim)]
        for j, image in enumerate(self.images):
            for i, c in image.coeffs.items():
                rows[i][j] = c
        return rows

    def __eq__(self, other):
        if not isinstance(other, AlgebraMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and all(a == b for a, b in zip(self.images, other.images))
        )

    __hash__ = None

    def substitute(self, assignment):
        source = self.source.substitute(assignment)
        target = self.target.substitute(assignment)
        images = [
            Element(target, {i: c.substitute(assignment) for i, c in img.coeffs.items()})
            for img in self.images
        ]
        inverse = None
        if self._inverse_images is not None:
            inverse = [
                Element(source, {i: c.substitute(assignment) for i, c in img.coeffs.items()})
                for img in self._inverse_images
            ]
        return AlgebraMap(source, target, images, self.certified_automorphism, inverse)

    def __repr__(self):
        kind = "automorphism" if self.certified_automorphism else "linear map"
        return f"AlgebraMap({kind} {self.source.name} -> {self.target.name})"


def make_map(source, target, images, require_automorphism=False, known_inverse=None):
    """Build a linear map from basis images; optionally certify it.

    Certification checks multiplicativity on every basis pair, unitality, and
    invertibility (via an exact solve, or by verifying ``known_inverse`` when
    one is supplied).  The inverse is stored eagerly.
    """
    if isinstance(images, dict):
        images = [images[label] for label in source.basis]
    resolved = []
    for img in images:
        if isinstance(img, Element):
            if img.algebra != target:
                raise ShapeMismatchError("image lies in the wrong algebra")
            resolved.append(img)
        else:
            resolved.append(target.element(img))
    fmap = AlgebraMap(source, target, resolved)
    if not require_automorphism:
        return fmap
    if source.dim != target.dim:
        raise SingularError("automorphism requires equal dimensions")
    one_t = target.one()
    unit_image = fmap.apply(source.one())
    if not unit_image == one_t:
        raise NotUnitalError(f"map sends 1 to {unit_image}")
    for i in range(source.dim):
        for j in range(source.dim):
            lhs_vec = {}
            for k, c in source.mul_basis(i, j).items():
                _vec_add(lhs_vec, resolved[k].coeffs, c)
            lhs = Element(target, lhs_vec)
            rhs = resolved[i] * resolved[j]
            if not lhs == rhs:
                raise NotMultiplicativeError(source, i, j)
    if known_inverse is not None:
        inverse_images = list(known_inverse)
        back = AlgebraMap(target, source, inverse_images)
        for i in range(source.dim):
            if not back.apply(resolved[i]) == source.basis_element(source.basis[i]):
                raise SingularError("supplied inverse does not invert the map")
            if not fmap.apply(inverse_images[i]) == target.basis_element(target.basis[i]):
                raise SingularError("supplied inverse does not invert the map")
    else:
        try:
            inverse_rows = linalg.invert_sparse(fmap.coefficient_rows(), source.dim)
        except linalg.SingularMatrixError as err:
            raise SingularError(f"map is singular: {err}") from err
        inverse_images = [
            Element(source, inverse_rows and _column(inverse_rows, j))
            for j in range(source.dim)
        ]
    return AlgebraMap(source, target, resolved, True, inverse_images)


def _column(rows, j):
    out = {}
    for i, row in enumerate(rows):
        value = row.get(j)
        if value is not None and not value.is_zero():
            out[i] = value
    return out


def identity_map(algebra):
    images = [algebra.basis_element(label) for label in algebra.basis]
    return AlgebraMap(algebra, algebra, images, True, images)


def maps_commute(f, g):
    """True iff f and g agree under composition in both orders, on the basis."""
    if not (f.source == g.source == f.target == g.target):
        raise ShapeMismatchError("maps_commute needs endomaps of one algebra")
    for i in range(f.source.dim):
        if not f.apply(g.images[i]) == g.apply(f.images[i]):
            return False
    return True


def tensor_map(f, g):
    """Componentwise tensor product of two maps, certified when both are."""
    source = tensor_algebra(f.source, g.source)
    target = tensor_algebra(f.target, g.target)
    dim_g = g.source.dim

    def outer(img_a, img_b, algebra, dim_b):
        coeffs = {}
        for i, ci in img_a.coeffs.items():
            for j, cj in img_b.coeffs.items():
                coeffs[i * dim_b + j] = ci * cj
        return Element(algebra, coeffs)

    images = [
        outer(f.images[i], g.images[j], target, g.target.dim)
        for i in range(f.source.dim)
        for j in range(dim_g)
    ]
    if f.certified_automorphism and g.certified_automorphism:
        f_inv = f.inverse()
        g_inv = g.inverse()
        inverse_images = [
            outer(f_inv.images[i], g_inv.images[j], source, g.source.dim)
            for i in range(f.target.dim)
            for j in range(g.target.dim)
        ]
        return make_map(source, target, images, True, known_inverse=inverse_images)
    return AlgebraMap(source, target, images)
