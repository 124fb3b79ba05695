"""Smoke tests for the python module: import, run the suites, spot-check values."""

import gkm21


def test_verify_all():
    reports = gkm21.verify_all()
    assert len(reports) == 7
    names = [r["suite"] for r in reports]
    assert names == ["gf2k", "ecurve", "quatorder", "nslattice", "abelian", "gkm", "models"]
    for r in reports:
        failing = [c["name"] for c in r["checks"] if not c["pass"]]
        assert r["passed"], f"{r['suite']} failed: {failing}"


def test_intersection_table():
    t = gkm21.intersection_table()
    entries = t["entries"]
    assert entries[1][5] == 3  # (F0, F0')
    assert entries[3][4] == 3  # (pi0, E0')
    assert all(entries[i][i] == 0 for i in range(8))
    assert len(t["transcription_discrepancies"]) == 8


def test_gram_data():
    d = gkm21.gram_data()
    assert d["rank"] == 22
    assert d["discriminant"] == -4
    assert d["span_index"] == 1
    assert d["artin_invariant"] == 1
    assert d["mordell_weil_order"] == 18


def test_graph_iso():
    iso = gkm21.graph_iso("derived", "pg24")
    assert iso is not None
    assert sorted(iso["part1_map"]) == list(range(21))


def test_curve_arithmetic():
    assert gkm21.ec_add("(0,0)", "(0,1)") == "O"
    assert gkm21.ec_add("(0,0)", "(1,w)") == "(w,w)"
    assert len(gkm21.ec_points(6)) == 81
    assert gkm21.quotient_map("(1,w)") == ("0", "0")


def test_relation_report():
    rows = gkm21.relation_report()
    surprises = [r for r in rows if r["holds"] != r["expected"]]
    assert surprises == []
    documented = [r for r in rows if not r["expected"]]
    assert len(documented) == 1


def test_torsion_tables():
    t = gkm21.torsion_tables()
    for row in t["rational"]:
        for cell in row:
            assert len(cell) == 8
    populated = [
        cell
        for r, row in enumerate(t["nonrational"])
        for c, cell in enumerate(row)
        if not (r >= 6 and c >= 6)
    ]
    assert len(populated) == 72
    assert all(len(cell) == 2 for cell in populated)
    assert len(t["rational_discrepancies"]) == 1
    assert len(t["nonrational_discrepancies"]) == 19


def test_config_graph_and_generators():
    g = gkm21.config_graph("derived")
    assert len(g["part1"]) == 21 and len(g["part2"]) == 21
    edges = sum(sum(row) for row in g["adjacency"])
    assert edges == 105
    sols = gkm21.generator_solutions()
    assert len(sols) == 24
    assert sols[0]["two_sigma_plus_one"].count("/2") == 0


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"[PASS] {name}")
            except AssertionError as exc:
                print(f"[FAIL] {name}: {exc}")
                failures += 1
    raise SystemExit(1 if failures else 0)
