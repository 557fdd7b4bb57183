"""Built-in validated instances of the library's worked examples.

Every fixture is constructed from its defining formula and re-certified by
the owning checker the first time it is requested; a certification failure is
a fatal error because it means the library itself is broken.  Expected-output
fixtures (two coefficient matrices and one eight-term tensor) ship as JSON
data files; they are transcriptions of published displays and are treated as
claims under test, with known discrepancies recorded next to the data rather
than silently corrected.

Registry names accepted by :func:`catalog_get`:

    mn_oqa(2), mn_oqa(3), trivial_oqa(<algebra>),
    ex34_nonuple_case1, ex34_nonuple_case2,
    ex45_H_oqa, ex45_Hprime_oqa, ex45_nonuple,
    sweedler4_hopf, kz2_hopf, ex45_weak_r,
    expected_ex41_alpha, expected_ex43_alpha, expected_ex45_alpha

plus the raw algebra names M2, M3, SW4, KZ2, K.  A trailing parenthesised
argument selects the size (mn_oqa) or the carrier (trivial_oqa); a
parenthesised parameter name on the symbolic fixtures is accepted and
ignored, as in ``ex45_nonuple(nu)``.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .algebra import identity_map, make_algebra, make_map, matrix_algebra
from .hopf import certify_hopf, check_weak_rmatrix, make_hopf
from .nonuple import Nonuple, certify_nonuple
from .oriented import OqaCandidate, certify
from .reports import CertificationError
from .scalars import Scalar, parse_scalar, scalar_eq
from .tensors import TensorElement, flatten

MATRIX_PARAMS = ("a",)
EX45_PARAMS = ("nu",)


class CatalogError(Exception):
    """Unknown fixture name or a fixture that failed its own certification."""


@dataclass
class Fixture:
    name: str
    kind: str
    object: object
    provenance: str
    expected: object = None
    aux: dict = field(default_factory=dict)
    excluded_values: dict = field(default_factory=dict)


def data_dir():
    override = os.environ.get("OQA_CATALOG_DIR")
    if override:
        return Path(override)
    return Path(__file__).parent / "data"


# ---------------------------------------------------------------------------
# algebras and maps
# ---------------------------------------------------------------------------

def algebra_m(n):
    return matrix_algebra(n, params=MATRIX_PARAMS)


def algebra_k():
    return make_algebra("K", MATRIX_PARAMS, ("1",), {("1", "1"): {"1": 1}}, {"1": 1})


def algebra_kz2():
    return make_algebra(
        "KZ2",
        EX45_PARAMS,
        ("1", "t"),
        {
            ("1", "1"): {"1": 1},
            ("1", "t"): {"t": 1},
            ("t", "1"): {"t": 1},
            ("t", "t"): {"1": 1},
        },
        {"1": 1},
    )


def algebra_sw4():
    """Generated by g, x with g² = 1, x² = 0, gx = -xg; basis 1, g, x, gx."""
    return make_algebra(
        "SW4",
        EX45_PARAMS,
        ("1", "g", "x", "gx"),
        {
            ("1", "1"): {"1": 1},
            ("1", "g"): {"g": 1},
            ("1", "x"): {"x": 1},
            ("1", "gx"): {"gx": 1},
            ("g", "1"): {"g": 1},
            ("x", "1"): {"x": 1},
            ("gx", "1"): {"gx": 1},
            ("g", "g"): {"1": 1},
            ("g", "x"): {"gx": 1},
            ("g", "gx"): {"x": 1},
            ("x", "g"): {"gx": -1},
            ("gx", "g"): {"x": -1},
        },
        {"1": 1},
    )


_ALGEBRAS = {
    "M2": lambda: algebra_m(2),
    "M3": lambda: algebra_m(3),
    "K": algebra_k,
    "KZ2": algebra_kz2,
    "SW4": algebra_sw4,
}


def diagonal_power_map(n):
    """The automorphism Eij -> a^(i-j) Eij of the n-by-n matrix algebra."""
    algebra = algebra_m(n)
    images = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            images[f"E{i}{j}"] = algebra.element({f"E{i}{j}": f"a^{i - j}"})
    return make_map(algebra, algebra, images, require_automorphism=True)


# ---------------------------------------------------------------------------
# coupling elements
# ---------------------------------------------------------------------------

def braid_coupling(n):
    """sum_{i<j} (a - a^-1) Eij⊗Eji + sum_i a Eii⊗Eii + sum_{i<j} (Eii⊗Ejj + Ejj⊗Eii)."""
    algebra = algebra_m(n)
    terms = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            terms.append((f"E{i}{j}", f"E{j}{i}", "a - a^-1"))
    for i in range(1, n + 1):
        terms.append((f"E{i}{i}", f"E{i}{i}", "a"))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            terms.append((f"E{i}{i}", f"E{j}{j}", 1))
            terms.append((f"E{j}{j}", f"E{i}{i}", 1))
    return TensorElement.from_terms((algebra, algebra), terms)


def case1_coupling():
    legs = (algebra_m(2), algebra_m(3))
    return TensorElement.from_terms(
        legs,
        [
            ("E11", "E11", 1),
            ("E22", "E22", 1),
            ("E22", "E33", -1),
            ("E22", "E11", -1),
            ("E11", "E22", -1),
            ("E11", "E33", -1),
        ],
    )


def case2_coupling():
    legs = (algebra_m(2), algebra_m(3))
    return TensorElement.from_terms(
        legs,
        [
            ("E11", "E11", "a"),
            ("E22", "E22", "a"),
            ("E22", "E33", 1),
            ("E22", "E11", 1),
            ("E11", "E22", 1),
            ("E11", "E33", 1),
            ("E12", "E21", "a - a^-1"),
        ],
    )


def case2_coupling_inverse():
    legs = (algebra_m(2), algebra_m(3))
    return TensorElement.from_terms(
        legs,
        [
            ("E11", "E11", "a^-1"),
            ("E22", "E22", "a^-1"),
            ("E22", "E33", 1),
            ("E22", "E11", 1),
            ("E11", "E22", 1),
            ("E11", "E33", 1),
            ("E12", "E21", "a^-1 - a"),
        ],
    )


def sw4_coupling():
    algebra = algebra_sw4()
    return TensorElement.from_terms(
        (algebra, algebra),
        [
            ("1", "1", "1/2"),
            ("1", "g", "1/2"),
            ("g", "1", "1/2"),
            ("g", "g", "-1/2"),
            ("x", "x", "1/2*nu"),
            ("x", "gx", "1/2*nu"),
            ("gx", "gx", "1/2*nu"),
            ("gx", "x", "-1/2*nu"),
        ],
    )


def kz2_coupling():
    algebra = algebra_kz2()
    return TensorElement.from_terms(
        (algebra, algebra),
        [
            ("1", "1", "1/2"),
            ("1", "t", "1/2"),
            ("t", "1", "1/2"),
            ("t", "t", "-1/2"),
        ],
    )


def ex45_weak_coupling():
    return TensorElement.from_terms(
        (algebra_sw4(), algebra_kz2()),
        [
            ("1", "1", "1/2"),
            ("1", "t", "1/2"),
            ("g", "1", "1/2"),
            ("g", "t", "-1/2"),
        ],
    )


def sw4_orientation_map():
    """Fixes 1 and g, negates x and gx; the square of the inverse antipode."""
    algebra = algebra_sw4()
    return make_map(
        algebra,
        algebra,
        {
            "1": {"1": 1},
            "g": {"g": 1},
            "x": {"x": -1},
            "gx": {"gx": -1},
        },
        require_automorphism=True,
    )


# ---------------------------------------------------------------------------
# Hopf structures
# ---------------------------------------------------------------------------

def hopf_kz2():
    algebra = algebra_kz2()
    return make_hopf(
        algebra,
        delta={"1": [("1", "1", 1)], "t": [("t", "t", 1)]},
        counit={"1": 1, "t": 1},
        antipode={"1": {"1": 1}, "t": {"t": 1}},
    )


def hopf_sw4():
    """The 4-dimensional Hopf structure whose coupling family is sw4_coupling.

    Coproduct: g group-like, x skew-primitive with Δ(x) = x⊗g + 1⊗x; this is
    the convention under which the nu-family satisfies the coupling laws (the
    other skew-primitive convention gives a Hopf algebra too, but not one
    compatible with that family).
    """
    algebra = algebra_sw4()
    return make_hopf(
        algebra,
        delta={
            "1": [("1", "1", 1)],
            "g": [("g", "g", 1)],
            "x": [("x", "g", 1), ("1", "x", 1)],
            "gx": [("gx", "1", 1), ("g", "gx", 1)],
        },
        counit={"1": 1, "g": 1, "x": 0, "gx": 0},
        antipode={"1": {"1": 1}, "g": {"g": 1}, "x": {"gx": 1}, "gx": {"x": -1}},
    )


# ---------------------------------------------------------------------------
# fixture builders (each certifies its object)
# ---------------------------------------------------------------------------

_MATRIX_EXCLUSIONS = {"a": (Fraction(0), Fraction(1), Fraction(-1))}


def _fixture_mn_oqa(n):
    if n not in (2, 3):
        raise CatalogError(f"mn_oqa is registered for sizes 2 and 3, not {n}")
    f = diagonal_power_map(n)
    candidate = certify(OqaCandidate(algebra_m(n), braid_coupling(n), f, f))
    return Fixture(
        name=f"mn_oqa({n})",
        kind="oqa",
        object=candidate,
        provenance=f"braiding structure on the {n}x{n} matrix algebra with the diagonal power automorphism",
        excluded_values=dict(_MATRIX_EXCLUSIONS),
    )


def _fixture_trivial_oqa(algebra_name):
    try:
        algebra = _ALGEBRAS[algebra_name]()
    except KeyError:
        raise CatalogError(f"unknown algebra {algebra_name!r} for trivial_oqa") from None
    ident = identity_map(algebra)
    candidate = certify(
        OqaCandidate(algebra, TensorElement.unit((algebra, algebra)), ident, ident)
    )
    return Fixture(
        name=f"trivial_oqa({algebra_name})",
        kind="oqa",
        object=candidate,
        provenance="unit coupling with identity orientation maps",
    )


def _case_bundle(r, r_inverse=None):
    f2 = diagonal_power_map(2)
    f3 = diagonal_power_map(3)
    return Nonuple(
        algebra_m(2), algebra_m(3),
        braid_coupling(2), braid_coupling(3), r,
        f2, f2, f3, f3,
        r_inverse=r_inverse,
    )


def _fixture_case1():
    bundle = certify_nonuple(_case_bundle(case1_coupling(), case1_coupling()))
    return Fixture(
        name="ex34_nonuple_case1",
        kind="nonuple",
        object=bundle,
        provenance="matrix-algebra cross bundle, involutive (case I) coupling",
        excluded_values=dict(_MATRIX_EXCLUSIONS),
    )


def _fixture_case2():
    bundle = certify_nonuple(_case_bundle(case2_coupling(), case2_coupling_inverse()))
    return Fixture(
        name="ex34_nonuple_case2",
        kind="nonuple",
        object=bundle,
        provenance="matrix-algebra cross bundle, braiding-type (case II) coupling",
        excluded_values=dict(_MATRIX_EXCLUSIONS),
    )


def _fixture_ex45_H_oqa():
    algebra = algebra_sw4()
    candidate = certify(
        OqaCandidate(algebra, sw4_coupling(), identity_map(algebra), sw4_orientation_map())
    )
    return Fixture(
        name="ex45_H_oqa",
        kind="oqa",
        object=candidate,
        provenance="nu-family coupling on the 4-dimensional algebra",
    )


def _fixture_ex45_Hprime_oqa():
    algebra = algebra_kz2()
    candidate = certify(
        OqaCandidate(algebra, kz2_coupling(), identity_map(algebra), identity_map(algebra))
    )
    return Fixture(
        name="ex45_Hprime_oqa",
        kind="oqa",
        object=candidate,
        provenance="sign coupling on the group algebra of order two",
    )


def _fixture_ex45_nonuple():
    sw4 = algebra_sw4()
    kz2 = algebra_kz2()
    bundle = certify_nonuple(
        Nonuple(
            sw4, kz2, sw4_coupling(), kz2_coupling(), ex45_weak_coupling(),
            identity_map(sw4), sw4_orientation_map(),
            identity_map(kz2), identity_map(kz2),
        )
    )
    return Fixture(
        name="ex45_nonuple",
        kind="nonuple",
        object=bundle,
        provenance="cross bundle coupling the 4-dimensional algebra with the group algebra",
    )


def _fixture_sweedler4_hopf():
    hopf = certify_hopf(hopf_sw4())
    return Fixture(
        name="sweedler4_hopf",
        kind="hopf",
        object=hopf,
        provenance="4-dimensional Hopf algebra, skew-primitive convention matching the nu coupling family",
        aux={"coupling": sw4_coupling()},
    )


def _fixture_kz2_hopf():
    hopf = certify_hopf(hopf_kz2())
    return Fixture(
        name="kz2_hopf",
        kind="hopf",
        object=hopf,
        provenance="group algebra of the order-two group",
        aux={"coupling": kz2_coupling()},
    )


def _fixture_ex45_weak_r():
    left = certify_hopf(hopf_sw4())
    right = certify_hopf(hopf_kz2())
    r = ex45_weak_coupling()
    report = check_weak_rmatrix(left, right, r)
    if not report.passed:
        raise CatalogError(f"weak coupling fixture failed certification:\n{report}")
    return Fixture(
        name="ex45_weak_r",
        kind="weak-r",
        object=r,
        provenance="weak coupling element between the 4-dimensional Hopf algebra and the group algebra",
        aux={"left": left, "right": right},
    )


def _fixture_algebra(name):
    return Fixture(
        name=name,
        kind="algebra",
        object=_ALGEBRAS[name](),
        provenance="catalog base algebra",
    )


def _load_expected(name):
    path = data_dir() / f"{name}.json"
    if not path.exists():
        raise CatalogError(f"expected-data file {path} is missing")
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    if data.get("kind") == "tensor":
        legs = tuple(_ALGEBRAS[n]() for n in data["legs"])
        element = TensorElement.from_terms(
            legs, [tuple(term["idx"]) + (term["c"],) for term in data["terms"]]
        )
        return Fixture(
            name=name,
            kind="tensor",
            object=element,
            provenance=data.get("provenance", ""),
            expected=data,
        )
    return Fixture(
        name=name,
        kind="matrix",
        object=data,
        provenance=data.get("provenance", ""),
        expected=data,
    )


_BUILDERS = {
    "mn_oqa": lambda arg: _fixture_mn_oqa(int(arg)),
    "trivial_oqa": lambda arg: _fixture_trivial_oqa(arg or "K"),
    "ex34_nonuple_case1": lambda arg: _fixture_case1(),
    "ex34_nonuple_case2": lambda arg: _fixture_case2(),
    "ex45_H_oqa": lambda arg: _fixture_ex45_H_oqa(),
    "ex45_Hprime_oqa": lambda arg: _fixture_ex45_Hprime_oqa(),
    "ex45_nonuple": lambda arg: _fixture_ex45_nonuple(),
    "sweedler4_hopf": lambda arg: _fixture_sweedler4_hopf(),
    "kz2_hopf": lambda arg: _fixture_kz2_hopf(),
    "ex45_weak_r": lambda arg: _fixture_ex45_weak_r(),
    "expected_ex41_alpha": lambda arg: _load_expected("expected_ex41_alpha"),
    "expected_ex43_alpha": lambda arg: _load_expected("expected_ex43_alpha"),
    "expected_ex45_alpha": lambda arg: _load_expected("expected_ex45_alpha"),
}
for _name in _ALGEBRAS:
    _BUILDERS[_name] = lambda arg, _n=_name: _fixture_algebra(_n)

_NAME_RE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\(\s*([^)]*?)\s*\))?\s*$")
_PARAM_ARGS = {"nu", "ν", "a", ""}
_CACHE = {}


def catalog_names():
    return sorted(_BUILDERS)


def catalog_get(name):
    """Look up, build and certify a fixture; results are cached."""
    match = _NAME_RE.match(name)
    if not match:
        raise CatalogError(f"malformed fixture name {name!r}")
    base, arg = match.group(1), match.group(2)
    if base not in _BUILDERS:
        raise CatalogError(f"unknown fixture {base!r}; see catalog_names()")
    if base not in ("mn_oqa", "trivial_oqa") and (arg or "") not in _PARAM_ARGS:
        raise CatalogError(f"fixture {base!r} takes no argument {arg!r}")
    if base in ("mn_oqa", "trivial_oqa") and not arg:
        raise CatalogError(f"fixture {base!r} needs an argument, e.g. {base}(2)")
    key = (base, arg if base in ("mn_oqa", "trivial_oqa") else None)
    if key not in _CACHE:
        try:
            _CACHE[key] = _BUILDERS[base](arg)
        except (CertificationError, CatalogError):
            raise
        except (ValueError, TypeError) as err:
            raise CatalogError(f"cannot build fixture {name!r}: {err}") from err
    return _CACHE[key]


# ---------------------------------------------------------------------------
# expected-matrix comparison
# ---------------------------------------------------------------------------

_UNIT_LABEL_RE = re.compile(r"^E(\d)(\d)$")


@dataclass(frozen=True)
class OrderingSpec:
    """Basis ordering for rendering a two-leg element as a square matrix.

    ``units`` orders matrix-unit bases row-major (E11, E12, ...) or
    column-major (E11, E21, ...); ``pairs`` makes the flattened pair index
    major in its first or second component.
    """

    units: str = "row-major"
    pairs: str = "first-major"

    def __post_init__(self):
        if self.units not in ("row-major", "column-major"):
            raise ValueError(f"bad unit order {self.units!r}")
        if self.pairs not in ("first-major", "second-major"):
            raise ValueError(f"bad pair order {self.pairs!r}")

    @classmethod
    def parse(cls, text):
        """Accepts forms like ``row-first``, ``col-second`` or the defaults."""
        if not text:
            return cls()
        parts = text.split("-")
        if len(parts) != 2:
            raise ValueError(f"cannot parse ordering {text!r}")
        units = {"row": "row-major", "col": "column-major"}[parts[0]]
        pairs = {"first": "first-major", "second": "second-major"}[parts[1]]
        return cls(units, pairs)

    def short(self):
        return f"{self.units.split('-')[0]}-{self.pairs.split('-')[0]}"


ORDERING_CANDIDATES = tuple(
    OrderingSpec(u, p)
    for u in ("row-major", "column-major")
    for p in ("first-major", "second-major")
)


def _unit_permutation(algebra, units):
    """Position of each basis element under the requested unit order."""
    if units == "row-major":
        return list(range(algebra.dim))
    order = []
    for pos, label in enumerate(algebra.basis):
        match = _UNIT_LABEL_RE.match(label)
        if match is None:
            return list(range(algebra.dim))
        i, j = int(match.group(1)), int(match.group(2))
        order.append((j, i, pos))
    return [pos for _, _, pos in sorted(order)]


def _pair_positions(left, right, ordering):
    """Map internal flat pair indices to matrix positions."""
    left_order = _unit_permutation(left, ordering.units)
    right_order = _unit_permutation(right, ordering.units)
    left_pos = {idx: pos for pos, idx in enumerate(left_order)}
    right_pos = {idx: pos for pos, idx in enumerate(right_order)}
    dim_l, dim_r = left.dim, right.dim
    positions = {}
    for i in range(dim_l):
        for j in range(dim_r):
            if ordering.pairs == "first-major":
                positions[i * dim_r + j] = left_pos[i] * dim_r + right_pos[j]
            else:
                positions[i * dim_r + j] = right_pos[j] * dim_l + left_pos[i]
    return positions


def _leg_positions(algebra, ordering):
    try:
        factors = _leg_factors(algebra)
        return _pair_positions(factors[0], factors[1], ordering)
    except (KeyError, ValueError):
        return {i: i for i in range(algebra.dim)}


def matrix_of(element, ordering=OrderingSpec()):
    """Coefficient matrix of a two-leg element: row = first leg, column = second.

    Returns (nrows, ncols, dict (row, col) -> Scalar) with zero entries
    omitted; indices are 0-based here, 1-based only in reports.  The requested
    ordering reorders pair-algebra legs whose factors are known.
    """
    if element.arity == 4:
        element = flatten(element, [2, 2])
    if element.arity != 2:
        raise ValueError("matrix export needs a two-leg (or four-leg) element")
    left, right = element.legs
    row_map = _leg_positions(left, ordering)
    col_map = row_map if right == left else _leg_positions(right, ordering)
    out = {}
    for (i, j), c in element.coeffs.items():
        out[(row_map[i], col_map[j])] = c
    return left.dim, right.dim, out


def _leg_factors(algebra):
    """Recover the two tensor factors of a pair algebra."""
    if algebra.factors is not None:
        return algebra.factors
    if "⊗" not in algebra.name:
        raise ValueError(f"{algebra.name} is not a pair algebra")
    left_name, right_name = algebra.name.split("⊗", 1)
    left = _ALGEBRAS[left_name.strip("()")]()
    right = _ALGEBRAS[right_name.strip("()")]()
    if left.dim * right.dim != algebra.dim:
        raise ValueError("factor dimensions do not multiply up")
    return left, right


@dataclass
class DiffReport:
    fixture: str
    ordering: OrderingSpec
    dim: int
    diffs: list
    checked: int

    @property
    def matches(self):
        return not self.diffs

    def to_json(self):
        return {
            "fixture": self.fixture,
            "ordering": self.ordering.short(),
            "dim": self.dim,
            "match": self.matches,
            "diffs": [
                {"row": row, "col": col, "computed": got, "expected": want}
                for row, col, got, want in self.diffs
            ],
        }

    def __str__(self):
        head = f"{self.fixture} under {self.ordering.short()}: "
        if self.matches:
            return head + f"all {self.checked} cells match"
        lines = [head + f"{len(self.diffs)} differing cells"]
        lines += [
            f"  ({row},{col}): computed {got} vs expected {want}"
            for row, col, got, want in self.diffs
        ]
        return "\n".join(lines)


def _expected_cells(data):
    """Dense map (row, col) -> scalar string from rows or blocks data."""
    dim = data["dim"]
    cells = {}
    if "rows" in data:
        for ri, row in enumerate(data["rows"]):
            if len(row) != dim:
                raise CatalogError(
                    f"expected row {ri + 1} has {len(row)} cells, want {dim}"
                )
            for ci, text in enumerate(row):
                if text.strip() != "0":
                    cells[(ri + 1, ci + 1)] = text
        return cells
    size = data["block_size"]
    for block_key, entries in data["blocks"].items():
        bi, bj = (int(part) for part in block_key.split(","))
        for cell_key, text in entries.items():
            i, j = (int(part) for part in cell_key.split(","))
            cells[((bi - 1) * size + i, (bj - 1) * size + j)] = text
    return cells


def _parse_expected_scalar(text, data):
    params = tuple(data.get("params", ["a"]))
    scalar = parse_scalar(text, params)
    substitution = data.get("substitution", {})
    if not substitution:
        return scalar
    target_params = tuple(p for p in params if p not in substitution)
    out = Scalar.zero(target_params)
    replacements = {
        name: parse_scalar(expr, target_params) for name, expr in substitution.items()
    }
    for exps, coeff in scalar.num.terms.items():
        term = Scalar.from_rational(coeff, target_params)
        for name, e in zip(params, exps):
            if e == 0:
                continue
            base = replacements.get(name) or Scalar.parameter(name, target_params)
            term = term * base**e
        out = out + term
    return out


def compare_to_expected(computed, fixture_name, ordering=None):
    """Entrywise exact comparison of a computed element with stored data.

    The stored cells are parsed over the data file's parameters and the
    recorded substitution (typically x -> a - a^-1) is applied before
    comparing.  Every differing cell is reported with both values.
    """
    fixture = catalog_get(fixture_name)
    if fixture.kind != "matrix":
        raise CatalogError(f"{fixture_name} holds no expected matrix")
    data = fixture.object
    if ordering is None:
        ordering = OrderingSpec(
            data["ordering"]["units"], data["ordering"]["pairs"]
        ) if "ordering" in data else OrderingSpec()
    nrows, ncols, got = matrix_of(computed, ordering)
    dim = data["dim"]
    if nrows != dim or ncols != dim:
        raise CatalogError(
            f"dimension mismatch: computed {nrows}x{ncols}, expected {dim}x{dim}"
        )
    cells = _expected_cells(data)
    params = computed.legs[0].params
    zero = Scalar.zero(params)
    diffs = []
    for row in range(1, dim + 1):
        for col in range(1, dim + 1):
            have = got.get((row - 1, col - 1), zero)
            text = cells.get((row, col), "0")
            want = _parse_expected_scalar(text, data)
            if not scalar_eq(have, want):
                diffs.append((row, col, str(have), text))
    return DiffReport(fixture_name, ordering, dim, diffs, dim * dim)


def known_discrepancies(fixture_name):
    """The frozen (row, col) set recorded next to the stored matrix."""
    data = catalog_get(fixture_name).object
    return {
        (entry["row"], entry["col"]): entry
        for entry in data.get("known_discrepancies", [])
    }
