#!/usr/bin/env python3
"""Smoke test for the pycoinv extension module.

Build the extension first, then run this script from the repository root:

    cargo build -p pycoinv --release
    python3 python/smoke_test.py

The script locates the compiled cdylib, exposes it under the importable
name `pycoinv`, and exercises the main types and operations.
"""

import json
import pathlib
import shutil
import sys
import tempfile

REPO_ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        REPO_ROOT / "target" / "release" / "libpycoinv.so",
        REPO_ROOT / "target" / "debug" / "libpycoinv.so",
        REPO_ROOT / "target" / "release" / "libpycoinv.dylib",
        REPO_ROOT / "target" / "debug" / "libpycoinv.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("extension not built; run `cargo build -p pycoinv --release` first")
    stage = pathlib.Path(tempfile.mkdtemp(prefix="pycoinv-"))
    shutil.copy2(built, stage / "pycoinv.so")
    sys.path.insert(0, str(stage))
    import pycoinv

    return pycoinv


def main():
    m = load_module()

    # Exact polynomial arithmetic.
    f = m.Poly("x1 + x2")
    g = m.Poly("x1 - x2", n=2)
    assert str(f * g) == "x1^2 - x2^2"
    assert (f - f).is_zero()
    assert m.Poly("3*x1_1^2*x2_2 - 1/2*x3_1").lead_monomial("a") == ("x1_1^2*x2_2", "3")

    # Groups and operators.
    s2 = m.Group("S2")
    assert s2.order() == 2 and s2.degree() == 2
    assert str(s2.transfer(m.Poly("x1", n=2))) == "x1 + x2"
    assert str(s2.reynolds(m.Poly("x1", n=2))) == "1/2*x1 + 1/2*x2"
    assert str(s2.orbit_sum("x1^2*x2")) == "x1^2*x2 + x1*x2^2"
    assert [str(p) for p in s2.goebel_generators()] == ["x1 + x2", "x1*x2"]

    # Polarization: full family and the closed-form lead.
    family = dict((tuple(k), str(p)) for k, p in m.polarize(m.Poly("x1*x2"), 2))
    assert family[(1, 1)] == "x1_1*x2_2 + x1_2*x2_1"
    assert str(m.pol_k(m.Poly("x2^2", n=2), [1, 1])) == "2*x2_1*x2_2"
    assert m.fast_lead("x1^2*x2", [2, 1]) == ("x1_1^2*x2_2", "1")
    assert m.theorem_family(2, 2) == ["x2_2^2", "x2_1*x2_2", "x2_1^2", "x1_2", "x1_1"]

    # Gröbner pipeline.
    gb = m.groebner_basis([m.Poly("x1 + x2"), m.Poly("x1*x2", n=2)])
    assert gb.lead_ideal() == ["x2^2", "x1"]
    assert gb.contains(m.Poly("x1^2 + x1*x2", n=2))
    finite, top, dim = gb.staircase()
    assert (finite, top, dim) == (True, 1, 2)
    r = m.normal_form(m.Poly("x1^2", n=2), [m.Poly("x1 + x2", n=2)])
    assert str(r) == "x2^2"

    # beta and the degree bounds.
    beta, by_degree, bound, ok = s2.beta(2)
    assert (beta, bound, ok) == (2, 2, True)
    assert by_degree == {1: 2, 2: 3}

    # Experiment drivers return deterministic JSON.
    report = json.loads(m.snlead(4))
    assert report["pass"] and report["top_degree"] == 6
    check = json.loads(m.bound_check("S3", 2))
    assert check["pass"] and check["beta"] == 3
    sweep = json.loads(m.lemma_sweep(2, 2, 4, field="f5"))
    assert sweep["pass"]
    witness = json.loads(m.gb_polarize_test("S3", 2))
    assert witness["details"]["polarized_set_is_gb"] == "false"

    print("pycoinv smoke test: OK")


if __name__ == "__main__":
    main()
