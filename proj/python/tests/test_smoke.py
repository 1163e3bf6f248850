import _pcpg as pcpg


def test_snf():
    s = pcpg.smith_normal_form([[2, 4], [6, 8]])
    assert s["rank"] == 2
    assert s["d"] == [2, 4]


def test_nilpotent_quotient():
    g = pcpg.nilpotent_quotient(["a", "b"], [], 2)
    assert g.ngens == 3
    assert g.weights == [1, 1, 2]
    assert g.order() == 0
    assert g.normal_form("b a") == [1, 1, -1]
    assert g.is_identity("[[a,b],a]")

    g27 = pcpg.nilpotent_quotient(["a", "b"], ["a^3", "b^3"], 2)
    assert g27.order() == 27


def test_free_nilpotent():
    assert pcpg.free_nilpotent(2, 3).ngens == 5


def test_equalizer():
    z2 = pcpg.nilpotent_quotient(["a", "b"], [], 1)
    z = pcpg.nilpotent_quotient(["a"], [], 1)
    gens = pcpg.equalizer(z2, z, ["a^2", "a^3"], ["1", "1"])
    assert gens == ["a^3 b^-2"]


def test_pcp_decide_and_search():
    f22 = pcpg.nilpotent_quotient(["a", "b"], [], 2)
    r = pcpg.pcp_decide(f22, [("a", "a"), ("b", "b [a,b]")])
    assert r is not None
    witness, value = r
    assert not f22.is_identity(value)

    z = pcpg.nilpotent_quotient(["a"], [], 1)
    assert pcpg.pcp_decide(z, [("a^2", "a^3")]) is None

    found = pcpg.search([("b", "a b")], ["a", "1", "1", "1"], bound=2,
                        alphabet=["a", "b"])
    assert found == ("x1", "a b")
    assert pcpg.verify([("b", "a b")], ["a", "1", "1", "1"], "x1",
                       alphabet=["a", "b"])
    assert pcpg.search([("a", "b")], [], bound=3, alphabet=["a", "b"], pcp=True) is None


def test_encode_and_normalize():
    pairs, constants = pcpg.encode_hwp(["a"], ["a"], "a")
    assert len(pairs) == 4
    assert constants[0] == "a"
    found = pcpg.search(pairs, ["a", "1", "1", "1"], bound=1, alphabet=["a"])
    assert found is not None

    npairs, nconst = pcpg.normalize([("a", "b")], ["1", "1", "a", "1"], ["a", "b"])
    assert nconst[1:] == ("1", "1", "1")
