import math

import pytest

import covenergy as ce


def test_two_ray_star_energy_and_polynomial():
    g = ce.gen_star_rays(2, 2)
    assert g.n == 5
    assert g.edges == [(0, 1), (0, 2), (1, 3), (2, 4)]
    assert ce.min_3_covering_exact(g) == [0]
    assert ce.char_poly(g, [0]) == [1, -1, -4, 2, 3, -1]
    report = ce.covering_energy(g, [0])
    assert report.method == "numeric"
    assert report.energy == pytest.approx(5.9623886081840312, abs=1e-10)
    assert report.energy == pytest.approx(ce.star3_energy_closed(2), abs=1e-10)


def test_k1m_closed_form():
    for m in range(3, 10):
        g = ce.gen_star_rays(m, 1)
        assert ce.covering_energy(g, [0]).energy == pytest.approx(
            math.sqrt(4 * m + 1), abs=1e-8
        )


def test_characterization_matches_covering():
    g = ce.gen_path(5)
    assert ce.is_3_covering(g, [1, 3])
    assert not ce.is_3_covering(g, [0])
    for q in ([], [2], [1, 3], [0, 2, 4]):
        assert ce.characterization_holds(g, q) == ce.is_3_covering(g, q)


def test_classifications_and_reports():
    g = ce.gen_star_rays(2, 2)
    kinds = {c["edge"]: c["classes"] for c in ce.classify_noncovered_edges(g, [0])}
    assert kinds[(1, 3)] == "Pendant2"
    assert ce.classify_vertex(g, [0], 3) == ["PendantOf2Path"]
    assert ce.check_distance_theorems(g, [0])["pass"] is True
    assert ce.distance_to_set(g, [], 0) is None
    r = ce.radicand_discrepancy_report(2)
    assert (r.direct_expansion, r.simplified, r.agree) == (-3996, 992, False)


def test_errors_are_value_errors():
    with pytest.raises(ce.CoverError):
        ce.Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        ce.star1_energy_closed(2)
