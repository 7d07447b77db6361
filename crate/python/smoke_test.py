"""Smoke test for the poset_polytopes_py extension module.

Builds the extension in release mode (unless PPOLY_SKIP_BUILD is set),
loads it straight from target/release and exercises the main entry points.
"""

import importlib.util
import os
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load():
    if not os.environ.get("PPOLY_SKIP_BUILD"):
        subprocess.run(
            ["cargo", "build", "--release", "-p", "poset-polytopes-py"],
            cwd=ROOT,
            check=True,
        )
    lib = ROOT / "target" / "release" / "libposet_polytopes_py.so"
    spec = importlib.util.spec_from_file_location("poset_polytopes_py", lib)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def main():
    pp = load()

    chain = pp.Poset.chain(2)
    anti = pp.Poset.antichain(2)
    assert chain.size == 2
    assert chain.covers() == [(1, 2)]
    assert len(anti.ideals()) == 4
    assert anti.linear_extension_count() == 2
    assert pp.Poset.from_json(chain.to_json()) == chain
    assert chain.has_common_linear_extension(anti)

    try:
        pp.Poset(2, [(1, 2), (2, 1)])
    except ValueError:
        pass
    else:
        raise AssertionError("cyclic covers accepted")

    order = pp.order_polytope(chain)
    assert sorted(order.vertices) == [[0, 0], [1, 0], [1, 1]]
    assert order.f_vector() == [3, 3]

    om = pp.omega(pp.order_polytope(anti), pp.chain_polytope(anti))
    assert om.dim == 3
    assert om.is_reflexive()
    assert om.is_normal()["verdict"] == "normal"
    vol = pp.volume_omega_formula(anti, anti)
    assert Fraction(*vol) == 2

    ehr = [Fraction(n, d) for n, d in om.ehrhart()]
    assert ehr[0] == 1
    assert sum(ehr) == om.count_lattice_points(1)

    simplex = pp.Polytope([[0, 0], [1, 0], [0, 1]])
    moved = pp.Polytope([[2, 1], [3, 1], [3, 2]])
    assert simplex.unimodular_equivalent(moved)

    report = pp.groebner_verify("oc", chain, chain, 3)
    assert report["ok"] and report["variable_count"] == 7

    census = pp.classify_reflexive_2d()
    assert len(census["classes"]) == 16

    analysis = om.analyze()
    assert analysis["reflexive"] is True
    print("smoke test passed")


if __name__ == "__main__":
    sys.exit(main())
