"""Smoke tests for the pybind11 module: a thin pass over each exposed surface."""

import json
import math

import _semialg as sa


def test_parse_and_eval():
    assert sa.parse_poly("(x+y)^2", ["x", "y"]) == "x^2 + 2*x*y + y^2"
    assert sa.eval_poly("x^2 - 2", ["x"], ["3/2"]) == "1/4"
    assert sa.derivative("x^2 - 2", ["x"], 0) == "2*x"


def test_sturm_and_roots():
    chain = sa.sturm_sequence("x^2 - 2")
    assert chain == ["x^2 - 2", "2*x", "2"]
    roots = sa.isolate_roots("x^2 - 2")
    assert len(roots) == 2
    assert abs(roots[0]["approx"] + math.sqrt(2)) < 1e-9
    assert abs(roots[1]["approx"] - math.sqrt(2)) < 1e-9
    assert roots[0]["multiplicity"] == 1


def test_thom_and_sign_conditions():
    encs = sa.thom_encodings("x^2 - 2")
    assert [e["signs"] for e in encs] == [[0, -1, 1], [0, 1, 1]]
    cells = sa.sign_conditions_1d(["x", "x^2 - 1"])
    assert len(cells) == 7
    assert cells[0]["signs"] == [-1, 1]


def test_resultant():
    assert sa.resultant("x2 - x1^2", "x2", ["x1", "x2"]) in ("x1^2", "-x1^2")


def test_cad():
    out = sa.cad2d_cells(["x2 - x1^2"], ["x1", "x2"])
    assert out["cell_count"] == 9
    assert out["stack_sizes"] == [3, 3, 3]


def test_bounds_are_exact_big_integers():
    assert sa.loja_bound(2, 1) == 18446744073709551616
    assert sa.belim_degree_bound(2, 1) == 313600
    assert sa.prop264_bound(2, 3) == sa.loja_bound(2, 1)
    comp = sa.comparator_bounds(2, 1, None, 1, 2, 1)
    assert comp["entries"]["kurdyka"] == 162


def test_residuals_and_distance():
    assert sa.residual_psi(["x"], ["x - 1"], ["x"], ["3"]) == "5"
    out = sa.residual_binary(["x - 2"], [], ["x"], ["3"])
    assert abs(out["value"] - 7.0) < 1e-12
    sdp = sa.residual_sdp([["0", "1"], ["1", "0"]])
    assert sdp["minor_part"] == "1"
    d = sa.dist_to_finite([["0", "0"], ["1", "0"]], ["1/2", "0"])
    assert d["squared"] == "1/4"


def test_rates_and_newton():
    assert abs(sa.sos_rate(1.0, 1.0, 1, 1, 1, 1024) - 0.0625) < 1e-12
    assert sa.descent_rate(2, 100) == 0.01
    assert sa.newton_min_exponent("y^2 - e^3", ["e", "y"]) == (3, 2)


def test_paper_example_estimate():
    est = sa.estimate_paper_example(2, 2)
    assert abs(est["exponent"] - 4.0) / 4.0 < 0.05


def test_run_cli_inprocess():
    code, out, err = sa.run_cli(["bounds", "--d", "2", "--n", "1"])
    assert code == 0
    report = json.loads(out)
    assert report["entries"]["loja_bound"] == "18446744073709551616"
