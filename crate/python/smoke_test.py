"""Smoke test for the solvsph extension module.

Build and install first, e.g. `pip install --no-build-isolation -e crates/python`.
"""

import json

import solvsph


def main():
    rs = solvsph.RootSystem("A3")
    assert rs.rank == 3
    assert len(rs.positive_roots()) == 6
    assert rs.dual_weight([1, 0, 0]) == [0, 0, 1]
    assert rs.weyl_dimension([0, 1, 0]) == "6"

    h = solvsph.Subgroup.preset("sl4-sp4borel")
    assert h.is_spherical()
    assert h.axioms_clean()
    assert h.active_roots() == [[[1, 0, 0], [0, 0, 1]], [[1, 1, 0], [0, 1, 1]]]
    assert h.generators() == [
        ([0, 0, 1], [1, 0]),
        ([0, 1, 0], [1, 1]),
        ([1, 0, 0], [1, 0]),
        ([1, 0, 1], [1, 1]),
        ([0, 1, 0], [0, 0]),
    ]
    assert h.decompose([0, 1, 0], [0, 0]) == [0, 0, 0, 0, 1]
    assert h.decompose([0, 1, 0], [5, 5]) is None
    assert h.open_orbit(trials=50)

    same = solvsph.Subgroup(
        "A3",
        [[1, 1, 1], [0, 1, 0]],
        [[([1, 0, 0], "1"), ([0, 0, 1], "1")], [([1, 1, 0], "1"), ([0, 1, 1], "-1")]],
    )
    assert same.generators() == h.generators()

    report = json.loads(h.verify_json(height=2, trials=50))
    assert report["schema"] == 1
    failed = [c["name"] for c in report["criteria"] if not c["passed"]]
    assert not failed, failed

    t = solvsph.Subgroup.preset("sl2-torus")
    records = t.oracle_records(3)
    assert sorted((w, c) for w, c, _ in records) == sorted(
        ([k], [l]) for k in range(4) for l in range(-k, k + 1, 2)
    )

    trivial = solvsph.Subgroup.preset("sl2-trivial")
    assert not trivial.is_spherical()
    assert not trivial.open_orbit(trials=20)
    try:
        trivial.generators()
    except solvsph.SolvsphError as e:
        assert "not spherical" in str(e)
    else:
        raise AssertionError("expected an error")

    assert "tu-prime" in solvsph.preset_names()
    print("python smoke test passed")


if __name__ == "__main__":
    main()
