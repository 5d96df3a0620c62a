"""Smoke test for the pywhitten extension."""

import pywhitten as w


def main():
    assert [w.gamma_order(m) for m in range(1, 5)] == [4, 16, 96, 768]

    a = w.Element.parse("(1,-1,1,(12))")
    b = w.Element(-1, [1, -1], [1, 2])
    assert a.mu == 2 and a.perm == [2, 1]
    assert (a * b) * a.inverse() == a.compose(b).compose(a.inverse())
    assert (a * a.inverse()) == w.Element.identity(2)

    h = w.Subgroup.generate(2, [a, b])
    assert a in h and len(h) == h.order()
    assert w.Subgroup.full(2).order() == 16

    st = w.stabilizer([[0, 1, 1], [1, 0, -1], [1, -1, 0]])
    assert st.order() == 12, st
    assert st.isomorphism() == "D6"

    hopf = w.Diagram.from_pd("X[1,3,2,4], X[3,1,4,2]")
    assert hopf.mu == 2 and hopf.crossing_count() == 2
    assert abs(hopf.linking_matrix()[0][1]) == 1
    assert hopf.mirror().jones() != hopf.jones()
    assert w.Diagram.from_pd(hopf.to_pd()).jones() == hopf.jones()

    d = w.census_diagram("7^2_5")
    assert d.jones() == d.simplify().jones()
    s = w.sigma_prime(d)
    truth = w.census_sigma("7^2_5")
    assert s == truth and s.name() == "Sigma2,1"
    assert w.census_compare("7^2_5") == "equal"
    assert len(w.census_names()) == 48

    try:
        w.census_sigma("9^9_9")
    except KeyError:
        pass
    else:
        raise AssertionError("expected KeyError")

    try:
        w.Diagram.from_pd("X[1,2")
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")

    print("smoke test ok")


if __name__ == "__main__":
    main()
