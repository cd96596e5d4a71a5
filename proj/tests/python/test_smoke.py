import cicalc


def test_invariant_profile():
    p = cicalc.invariant_profile(5, [46, 36, 34, 21, 14, 13, 12, 11, 3, 2, 2])
    assert p["d"] == 340867118592
    assert p["p"] == [-5639, 19794330]
    assert p["e_over_d"] == -6401091783
    assert p["e"] == -6401091783 * 340867118592


def test_classify_pair():
    r = cicalc.classify(5, [66, 56, 45, 39, 16, 15, 8, 3], [64, 60, 42, 39, 20, 11, 9, 3])
    assert r["verdict"] == "diffeomorphic"
    r = cicalc.classify(5, [66, 56, 45, 39, 16, 15, 8], [64, 60, 42, 39, 20, 11, 9])
    assert r["verdict"] == "not-homeomorphic"
    assert r["witness"]["invariant"] == "e"


def test_traving_handles_huge_totals():
    r = cicalc.traving(5, 1136843237376**4)
    assert r["holds"]
    assert r["primes"][0]["exponent"] == 44


def test_moduli_dimension():
    assert cicalc.moduli_dimension(5, [88, 77, 72, 54, 48, 31, 29]) == 1382270197857128
    assert cicalc.moduli_dimension(5, [2]) == -21
    assert cicalc.moduli_dimension(5, [2], naive=True) == -21


def test_delta_and_family():
    d = cicalc.delta_closed_form(0, 1)
    assert d["closed_total"] == d["direct_total"] == 11576781275735
    f = cicalc.family(2)
    assert f["strictly_increasing"] and f["profiles_identical"] and f["traving_holds"]
    assert [row["lambda"] for row in f["rows"]] == [0, 1, 2]


def test_search_and_verify():
    lists = cicalc.enumerate_multidegrees(5, 1, 1, 4)
    assert lists == [[2], [3], [4]]
    result = cicalc.find_collisions(5, 1, 3, 12)
    assert result["collisions"] == []
    checks = cicalc.verify_paper()
    assert all(c["pass"] for c in checks)


def test_canonicalization_and_errors():
    assert cicalc.canonical_degrees(5, [3, 1, 2]) == [3, 2]
    try:
        cicalc.invariant_profile(5, [0])
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")
