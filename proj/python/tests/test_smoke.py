import pytest

import qeuclid


def test_parse_round_trip():
    assert qeuclid.parse("star(x-, x+)") == "star(x-, x+)"
    tree = qeuclid.parse_tree("d[+] |> star(x+, x+)")
    assert tree["kind"] == "derive"


def test_parse_error():
    with pytest.raises(ValueError):
        qeuclid.parse("star(x-,")


def test_relation_through_star_product():
    x_minus = qeuclid.evaluate("x-")["value"]
    x_plus = qeuclid.evaluate("x+")["value"]
    product = qeuclid.star_product(x_minus, x_plus)
    assert product == qeuclid.evaluate("x- * x+")["value"]
    assert product == qeuclid.star_product_oracle(x_minus, x_plus)
    assert len(product["terms"]) == 2


def test_conventions_round_trip():
    f = qeuclid.evaluate("x3^2 * x+ + t*x-")["value"]
    g = qeuclid.convert_convention(f, "Wt")
    assert g["convention"] == "Wt"
    assert qeuclid.convert_convention(g, "W") == f
    assert qeuclid.conjugate(qeuclid.conjugate(f)) == f


def test_derivative():
    f = qeuclid.evaluate("x+^2")["value"]
    d = qeuclid.derivative(f, "+")
    assert d == qeuclid.evaluate("d[+] |> x+^2")["value"]


def test_exponential_and_powers():
    body = qeuclid.exponential("xp", 1)
    assert len(body["terms"]) == 4
    assert len(qeuclid.psq_power(2)["terms"]) == 3
    assert qeuclid.q_number(3, 4)["terms"] == [[0, "1/1", "0/1"], [4, "1/1", "0/1"], [8, "1/1", "0/1"]]


def test_propagator_identity():
    for family in ("KR", "KL", "KR*", "KL*"):
        for branch in ("retarded", "advanced"):
            assert qeuclid.propagator(family, branch, 4)["identity_holds"]


def test_verify_and_heine():
    report = qeuclid.verify("qarith", cases=5)
    assert report["failure_count"] == 0
    assert report["suite"] == "qarith"
    rows = qeuclid.heine_diagnostic(3)
    assert all(row["double_sum_is_star_power"] for row in rows)


def test_expectations():
    out = qeuclid.gaussian_expectations(1.5, 14, 1.0, [0.3, 0.2, -0.4], 0.7, [0.1, 0.0, 0.2], 6, t=0.5)
    assert out["norm_error"] < 1e-10
    for index in ("+", "3", "-"):
        upper = out["momentum_upper"][index]
        lower = out["momentum_lower"][index]
        assert abs(upper.conjugate() - lower) < 1e-10
