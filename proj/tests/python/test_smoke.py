import grmw


def test_weights_record():
    rec = grmw.weights(4, 2, 3)
    assert (rec["w1"], rec["w2"]) == (4, 6)
    assert rec["w3"]["value"] == 7
    assert rec["w3"]["status"] == "Exact"


def test_n_points():
    # q^m - q^(m-k) * prod(q - d_i) for two blocks of 2 lines each at q=5.
    assert grmw.n_points(5, 2, [2, 2]) == 25 - 9


def test_spectrum_matches_weights():
    rec = grmw.weights(3, 2, 2)
    spec = grmw.spectrum(3, 2, 2)
    assert spec[0] == (0, 1)
    nonzero = [w for w, _ in spec[1:4]]
    assert nonzero == [rec["w1"], rec["w2"], rec["w3"]["value"]]


def test_construct_third_roundtrip():
    wit = grmw.construct_third(4, 2, 0, 3)
    assert wit["weight"] == grmw.weights(4, 2, 3)["w3"]["value"]
    assert grmw.poly_weight(wit["poly"]) == wit["weight"]


def test_top3_shape():
    rows = grmw.top3(5, 3, 4)
    assert [int(r["N"]) for r in rows] == [100, 85, 80]


def test_error_maps():
    try:
        grmw.weights(2, 2, 1)
    except grmw.GrmwError:
        pass
    else:
        raise AssertionError("q=2 should be rejected")
