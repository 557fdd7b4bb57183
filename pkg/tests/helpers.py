"""Hand-built copies of the worked examples, independent of the catalog."""

from oqa.algebra import make_algebra, make_map, matrix_algebra
from oqa.tensors import TensorElement


def frobenius_map(n):
    algebra = matrix_algebra(n)
    images = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            images[f"E{i}{j}"] = algebra.element({f"E{i}{j}": f"a^{i - j}"})
    return make_map(algebra, algebra, images, require_automorphism=True)


def braid_element(n):
    """The standard braiding element of the n-by-n matrix algebra pair:

    sum over i<j of (a - a^-1) Eij⊗Eji, plus a Eii⊗Eii, plus Eii⊗Ejj + Ejj⊗Eii.
    """
    m = matrix_algebra(n)
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
    return TensorElement.from_terms((m, m), terms)


def case1_r():
    legs = (matrix_algebra(2), matrix_algebra(3))
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


def case2_r():
    legs = (matrix_algebra(2), matrix_algebra(3))
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


def case2_r_inverse():
    legs = (matrix_algebra(2), matrix_algebra(3))
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


def kz2_algebra(params=("a",)):
    return make_algebra(
        "KZ2",
        params,
        ("1", "t"),
        {
            ("1", "1"): {"1": 1},
            ("1", "t"): {"t": 1},
            ("t", "1"): {"t": 1},
            ("t", "t"): {"1": 1},
        },
        {"1": 1},
    )


def sweedler4_algebra(params=("nu",)):
    """Four-dimensional algebra generated by g, x with g²=1, x²=0, gx=-xg."""
    return make_algebra(
        "SW4",
        params,
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


def sweedler4_hopf():
    from oqa.hopf import make_hopf

    algebra = sweedler4_algebra()
    return make_hopf(
        algebra,
        delta={
            "1": [("1", "1", 1)],
            "g": [("g", "g", 1)],
            "x": [("x", "g", 1), ("1", "x", 1)],
            "gx": [("gx", "1", 1), ("g", "gx", 1)],
        },
        counit={"1": 1, "g": 1, "x": 0, "gx": 0},
        antipode={
            "1": {"1": 1},
            "g": {"g": 1},
            "x": {"gx": 1},
            "gx": {"x": -1},
        },
    )


def kz2_hopf(params=("nu",)):
    from oqa.hopf import make_hopf

    algebra = kz2_algebra(params)
    return make_hopf(
        algebra,
        delta={"1": [("1", "1", 1)], "t": [("t", "t", 1)]},
        counit={"1": 1, "t": 1},
        antipode={"1": {"1": 1}, "t": {"t": 1}},
    )


def sweedler_coupling():
    """The nu-family of universal coupling elements of the 4-dim Hopf algebra."""
    algebra = sweedler4_algebra()
    legs = (algebra, algebra)
    return TensorElement.from_terms(
        legs,
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


def kz2_coupling(params=("nu",)):
    algebra = kz2_algebra(params)
    return TensorElement.from_terms(
        (algebra, algebra),
        [
            ("1", "1", "1/2"),
            ("1", "t", "1/2"),
            ("t", "1", "1/2"),
            ("t", "t", "-1/2"),
        ],
    )


def mixed_weak_coupling():
    """The weak coupling element between the 4-dim Hopf algebra and KZ2."""
    left = sweedler4_algebra()
    right = kz2_algebra(("nu",))
    return TensorElement.from_terms(
        (left, right),
        [
            ("1", "1", "1/2"),
            ("1", "t", "1/2"),
            ("g", "1", "1/2"),
            ("g", "t", "-1/2"),
        ],
    )
