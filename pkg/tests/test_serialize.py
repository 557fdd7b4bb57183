import pytest

from oqa.catalog import CatalogError, catalog_get
from oqa.nonuple import build_thm36
from oqa.serialize import (
    Resolver,
    algebra_from_json,
    algebra_to_json,
    detect_kind,
    dumps,
    from_json,
    hopf_from_json,
    hopf_to_json,
    map_from_json,
    map_to_json,
    nonuple_from_json,
    nonuple_to_json,
    oqa_from_json,
    oqa_to_json,
    tensor_from_json,
    tensor_to_json,
    to_json,
)
from oqa.tensors import first_difference


class TestAlgebraRoundTrip:
    def test_matrix_algebra(self):
        m2 = catalog_get("M2").object
        again = algebra_from_json(algebra_to_json(m2))
        assert again.basis == m2.basis
        assert again.same_table(m2)

    def test_sw4(self):
        sw4 = catalog_get("SW4").object
        again = algebra_from_json(algebra_to_json(sw4))
        assert again.same_table(sw4)

    def test_validation_on_load(self):
        from oqa.algebra import BadUnitError

        payload = algebra_to_json(catalog_get("KZ2").object)
        payload["unit"] = {"t": "1"}
        with pytest.raises(BadUnitError):
            algebra_from_json(payload)


class TestTensorRoundTrip:
    def test_coupling(self):
        bundle = catalog_get("ex34_nonuple_case2").object
        payload = tensor_to_json(bundle.r)
        assert payload["legs"] == ["M2", "M3"]
        again = tensor_from_json(payload, Resolver())
        assert first_difference(again, bundle.r) is None

    def test_tensor_name_resolution(self):
        built = build_thm36(catalog_get("ex34_nonuple_case1").object)
        payload = tensor_to_json(built.r)
        assert payload["legs"] == ["M2⊗M3", "M2⊗M3"]
        again = tensor_from_json(payload, Resolver())
        assert first_difference(again, built.r) is None

    def test_unknown_name(self):
        with pytest.raises(CatalogError):
            tensor_from_json({"legs": ["NOPE"], "terms": []}, Resolver())


class TestBundles:
    def test_oqa_round_trip(self):
        candidate = catalog_get("mn_oqa(2)").object
        payload = oqa_to_json(candidate)
        again = oqa_from_json(payload)
        assert first_difference(again.r, candidate.r) is None
        assert again.D == candidate.D
        assert again.r_inverse is not None
        assert detect_kind(payload) == "oqa"

    def test_nonuple_round_trip(self):
        bundle = catalog_get("ex45_nonuple").object
        payload = nonuple_to_json(bundle)
        assert set(payload) >= {"H", "H'", "p", "p'", "r", "D", "U", "D'", "U'"}
        again = nonuple_from_json(payload)
        assert first_difference(again.r, bundle.r) is None
        assert again.Up == bundle.Up
        assert detect_kind(payload) == "nonuple"

    def test_hopf_round_trip(self):
        hopf = catalog_get("sweedler4_hopf").object
        payload = hopf_to_json(hopf)
        again = hopf_from_json(payload)
        for i in range(hopf.algebra.dim):
            assert first_difference(again.delta[i], hopf.delta[i]) is None
        assert again.antipode == hopf.antipode
        assert detect_kind(payload) == "hopf"

    def test_map_upgrade_to_automorphism(self):
        m2 = catalog_get("M2").object
        candidate = catalog_get("mn_oqa(2)").object
        payload = map_to_json(candidate.D)
        again = map_from_json(m2, m2, payload)
        assert again.certified_automorphism

    def test_non_automorphism_still_loads(self):
        kz2 = catalog_get("KZ2").object
        payload = {"images": {"1": {"1": "1"}, "t": {}}}
        loaded = map_from_json(kz2, kz2, payload)
        assert not loaded.certified_automorphism

    def test_generic_from_json(self):
        candidate = catalog_get("mn_oqa(2)").object
        obj = from_json(oqa_to_json(candidate))
        assert first_difference(obj.r, candidate.r) is None


class TestDeterminism:
    def test_byte_identical_serialisation(self):
        candidate = catalog_get("mn_oqa(3)").object
        first = dumps(oqa_to_json(candidate))
        second = dumps(oqa_to_json(oqa_from_json(oqa_to_json(candidate))))
        assert first == second

    def test_stable_term_order(self):
        bundle = catalog_get("ex34_nonuple_case1").object
        one = dumps(to_json(bundle))
        two = dumps(to_json(nonuple_from_json(nonuple_to_json(bundle))))
        assert one == two
