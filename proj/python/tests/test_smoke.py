import json

import pytest

import semiring_lab as sl


def test_catalogs():
    assert "gcd" in sl.semiring_catalog()
    assert "prufer" in sl.suite_catalog()


def test_ideal_arithmetic_on_naturals():
    N = sl.semiring("nat")
    two, three = sl.Ideal(N, [2]), sl.Ideal(N, [3])
    lhs = (two + three) * (two & three)
    assert lhs != two * three
    assert 6 in two * three
    assert 6 not in lhs
    assert 12 in lhs
    assert not sl.Ideal(N, [2, 3]).is_invertible()


def test_gcd_naturals():
    G = sl.semiring("gcd")
    I = sl.Ideal(G, [4, 6])
    assert I == sl.Ideal(G, [2])
    assert I.is_principal
    assert I.colon(sl.Ideal(G, [2])) == sl.Ideal(G, [1])
    assert I.is_invertible()


def test_min_plus_elements():
    M = sl.semiring("minplus(2)")
    assert M.add((1, 5), (3, 2)) == (1, 2)
    assert M.mul((1, 5), (3, 2)) == (4, 7)
    assert M.zero is None
    # The sum (1,0) + (0,2) = (0,0) is the identity, so the ideal is everything.
    I = sl.Ideal(M, [(1, 0), (0, 2)])
    assert I.basis == [(0, 0)]
    J = sl.Ideal(M, [(1, 3), (2, 1)])
    assert J.basis == [(1, 1)]
    assert (1, 1) in J and (0, 5) not in J


def test_eval_and_expressions():
    expr = "(<2> + <3>) * (<2> ^ <3>) == <2> * <3>"
    assert sl.eval(expr, sl.semiring("nat")) is False
    assert sl.eval(expr, sl.semiring("gcd")) is True
    G = sl.semiring("gcd")
    I = sl.eval("I + <9>", G, {"I": sl.Ideal(G, [6])})
    assert I == sl.Ideal(G, [3])
    assert sl.normalize_expr("((I : J)) * K") == "I : J * K"
    with pytest.raises(sl.ParseError):
        sl.eval("<2", G)
    with pytest.raises(sl.CarrierMismatch):
        sl.eval("<(1,2)>", G)


def test_suites_and_search():
    report = sl.check("prufer", sl.semiring("gcd"), seed=42, samples=50)
    assert report["schema"] == 1
    assert report["status"] == "pass"
    assert sl.check("prufer", sl.semiring("nat"), samples=50)["status"] == "fail"
    found = sl.search("gaussian", sl.semiring("nat"), max_deg=2, coeff_bound=9)
    assert found["found"]
    assert not sl.gaussian_pair(sl.semiring("nat"), [2, 3], [3, 2])
    assert sl.gaussian_pair(sl.semiring("gcd"), [2, 3], [3, 2])


def test_enumerate_and_falsify():
    assert len(sl.enumerate(3)) == 6
    records = sl.enumerate(3, classify=True)
    assert all(not r["violation"] for r in records)
    assert sl.verify_axioms(sl.enumerate(2)[0]) == []
    cx = sl.falsify("(I+J)*(I^J) == I*J", [sl.semiring("gcd"), sl.semiring("nat")])
    assert cx["semiring"] == "nat"
    assert cx["assignment"] == {"I": "<2>", "J": "<3>"}
    assert sl.falsify("(I+J)*(I^J) == I*J", [sl.semiring("gcd")]) is None


def test_cli_in_process():
    code, out, err = sl.run_cli(["eval", "--semiring", "nat", "<2> * <3> <= <2>"])
    assert code == 0
    assert json.loads(out)["value"] is True
    code, _, err = sl.run_cli(["check", "--suite", "prufer", "--semiring", "nope"])
    assert code == 2
    assert "catalog" in err
