import json
from fractions import Fraction as F

import pytest

import groupcut as gc
from groupcut.errors import ConstructionError
from groupcut.jsonio import (components_to_dict, dumps_function,
                             extremality_report_to_dict, face_to_dict,
                             function_from_dict, function_to_dict,
                             loads_function, minimality_report_to_dict)


class TestFunctionFormat:
    def test_piecewise_shape(self, equiv5):
        d = function_to_dict(equiv5)
        assert d["kind"] == "piecewise"
        assert d["f"] == "1/5"
        assert d["breakpoints"][0] == "0" and d["breakpoints"][-1] == "1"
        assert d["limits"][2] == ["2/5", "2/5", "0"]  # [value, right, left]

    def test_discrete_shape(self, gmic45):
        d = function_to_dict(gc.restrict_to_finite_group(gmic45))
        assert d["kind"] == "discrete"
        assert d["points"] == ["0", "1/5", "2/5", "3/5", "4/5", "1"]
        assert d["values"] == ["0", "1/4", "1/2", "3/4", "1", "0"]

    def test_round_trip_exact(self, equiv5, hildebrand, gmic45):
        for fn in (equiv5, hildebrand, gmic45):
            again = loads_function(dumps_function(fn))
            assert again.end_points() == fn.end_points()
            assert again.limits_at_end_points() == fn.limits_at_end_points()
            assert again.f == fn.f

    def test_round_trip_discrete(self, gmic45):
        dfn = gc.restrict_to_finite_group(gmic45)
        assert loads_function(dumps_function(dfn)) == dfn

    def test_unknown_kind(self):
        with pytest.raises(ConstructionError):
            function_from_dict({"kind": "spline"})

    def test_file_round_trip(self, tmp_path, hildebrand):
        from groupcut.jsonio import load_function, save_function

        path = tmp_path / "fn.json"
        save_function(hildebrand, path)
        assert load_function(path).limits_at_end_points() == \
            hildebrand.limits_at_end_points()


class TestFaceFormat:
    def test_face_dict(self):
        face = gc.face_from_triple(
            (F(1, 5), F(3, 10)), (F(3, 4), F(17, 20)), (1, F(6, 5)))
        d = face_to_dict(face)
        assert d["p1"] == ["1/5", "3/10"]
        assert d["p3"] == ["1", "23/20"]
        assert ["1/5", "4/5"] in d["vertices"]
        assert d["dimension"] == 2


class TestReportFormats:
    def test_minimality_report(self, equiv5):
        d = minimality_report_to_dict(gc.minimality_test(equiv5))
        assert d["is_minimal"] is False
        assert any(v["kind"] == "subadditivity" and v["face"] for v in d["violations"])
        json.dumps(d)  # serializable

    def test_extremality_report(self, gmic45):
        d = extremality_report_to_dict(gc.extremality_test(gmic45))
        assert d["is_extreme"] is True and d["kernel_dimension"] == 0
        assert d["system"]["rows"]
        assert len(d["system"]["rows"]) == len(d["system"]["provenance"])
        json.dumps(d)

    def test_components_dict(self, hildebrand):
        d = components_to_dict(gc.generate_covered_components(hildebrand))
        assert d["closed"] is False
        assert d["components"][0] == [["0", "1/8"], ["3/8", "1/2"]]
        assert d["moves"]
        json.dumps(d)


def test_extremality_report_includes_kernel_basis():
    fn = gc.random_piecewise_function(4, 4, F(1, 2), True, seed=227)
    d = extremality_report_to_dict(gc.extremality_test(fn))
    assert d["kernel"] and all(isinstance(e, str) for e in d["kernel"][0])
    assert extremality_report_to_dict(
        gc.extremality_test(gc.gmic(F(4, 5))))["kernel"] == []
