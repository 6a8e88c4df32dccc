"""Quick check of the compiled bindings: python3 python/smoke_test.py"""

import json
import pathlib

import qgrass_py as qg

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def main():
    assert qg.gaussian_binomial(4, 2, 2) == 35
    rows, pivots = qg.rref([[1, 1], [2, 2]], 3)
    assert rows == [[1, 1]] and pivots == [0]

    # P^1 has q + 1 points
    assert len(qg.variety_points([], 1, 3)) == 4
    reports = qg.verify_realization([], 1, [2, 3])
    assert [r["variety_points"] for r in reports] == [3, 4]
    assert all(r["bijection"] for r in reports)

    a2 = qg.BoundAlgebra.from_json((DATA / "a2.json").read_text(), 2)
    assert a2.dim == 3
    p1 = qg.Representation.standard(a2, "projective", "1")
    assert p1.dims == [1, 1]
    assert len(p1.grassmannian([0, 1])) == 1
    assert len(p1.grassmannian([1, 0])) == 0
    again = qg.Representation.from_json(p1.to_json(a2), 2)
    assert again.dims == p1.dims

    rsz = qg.BoundAlgebra.local_rsz(3, 2)
    reg = qg.Representation.standard(rsz, "projective", "o")
    assert reg.dim == 4 and reg.socle_dim() == 3
    graph = reg.connectivity(1)
    assert graph["nodes"] == 7 and graph["connected"]

    rep = qg.verify_controlled(2, ([[0]], [[0]]), ([[1]], [[0]]))
    assert rep["hom_fx_fy"] == rep["hom_xy"] + rep["dim_x"] * rep["dim_y"]

    dual = qg.auslander([[("y", 1)], [("xx", 1)]], [[0]], [[0]], [1], 2)
    assert dual["auslander_count"] == dual["module_count"]

    try:
        qg.Representation.standard(rsz, "projective", "o").grassmannian([2], budget=1)
    except qg.BudgetExceededError:
        pass
    else:
        raise AssertionError("budget not enforced")

    print("smoke test ok:", json.dumps({"realization": reports[0]["variety_points"], "graph": graph["nodes"]}))


if __name__ == "__main__":
    main()
