"""Smoke test for the nctorus Python bindings.

Run after `pip install --no-build-isolation -e crates/nctorus-py`:

    python python/smoke_test.py
"""

import math

import nctorus


def main() -> None:
    # Rational functions and the residue integrals.
    k_power, f = nctorus.integral(3, 0, 1)
    assert (k_power, str(f)) == (-3, "1/16"), (k_power, f)
    k_power, f = nctorus.integral(1, 1, 1)
    assert abs(f.eval(2.0) * math.pi - nctorus.quadrature(1, 1, 1, 2.0)) < 1e-10
    s = nctorus.RatFun.s()
    assert (s * s.inverse_s()) == nctorus.RatFun.constant("1")
    assert nctorus.RatFun.constant("3/4").eval_exact("5") == "3/4"

    # Symbols: parsing, printing, derivations and the parametrix.
    x = nctorus.Symbol("2 u_1 \\xi_1^2")
    assert nctorus.Symbol(str(x)) == x
    assert x.dxi(1) == nctorus.Symbol("4 u_1 \\xi_1")
    b = nctorus.inverse_dirac(2)
    assert b.degrees() == [-2, -1], b.degrees()
    d = nctorus.dirac_symbol()
    identity = d.compose(b, -1)
    assert identity.lift_equal(nctorus.Symbol.one()), str(identity)

    # Functionals.
    u, v = nctorus.OneForm("sigma1"), nctorus.OneForm.symbolic("v")
    assert str(u).startswith("1")
    metric = nctorus.metric(normalization="raw")
    assert metric["schema_version"] == nctorus.SCHEMA_VERSION
    assert not metric["overall_zero"]
    assert nctorus.torsion()["overall_zero"]
    assert nctorus.closedness()["overall_zero"]
    einstein = nctorus.einstein()
    assert einstein["overall_zero"] and len(einstein["tables"]) == 6

    # Verification harness, cheap criteria only.
    results = nctorus.verify([1, 7])
    assert all(r["passed"] for r in results), results

    print("nctorus smoke test: OK")


if __name__ == "__main__":
    main()
