import itertools
import random

import pytest

from pachner.simplicial import (
    Triangulation,
    apply_move,
    boundary_face,
    compose_maps,
    distinguished_splitting,
    face_map,
    find_move_sites,
    pachner_sides,
    simplex_boundary,
)


def induced_boundary(t):
    """Map from boundary facet tuple to its induced orientation sign."""
    out = {}
    for e in range(len(t.simplexes)):
        for i in range(t.dim + 1):
            if (e, i) not in t.gluing:
                face = t.facet(e, i)
                assert face not in out, "boundary facet seen twice"
                out[face] = t.simplexes[e][1] * (-1) ** i
    return out


def all_splittings(n):
    for p in range(1, n + 1):
        for I in itertools.combinations(range(n + 1), p):
            J = tuple(k for k in range(n + 1) if k not in I)
            yield I, J


# -- face and boundary maps -------------------------------------------------


def test_face_map_basics():
    assert face_map(0, 1) == (1,)
    assert face_map(1, 3) == (0, 2, 3)
    with pytest.raises(ValueError):
        face_map(4, 3)


def test_face_map_corner_example():
    # both composites [0] -> [2] send 0 to 0 and miss {1, 2}
    lhs = compose_maps(face_map(2, 2), face_map(1, 1))
    rhs = compose_maps(face_map(1, 2), face_map(1, 1))
    assert lhs == rhs == (0,)


def test_face_map_relation_exhaustive():
    for n in range(1, 7):
        for j in range(n):
            for i in range(j + 1):
                lhs = compose_maps(face_map(i, n), face_map(j, n - 1))
                rhs = compose_maps(face_map(j + 1, n), face_map(i, n - 1))
                assert lhs == rhs, (n, i, j)


def test_boundary_face_basics():
    assert boundary_face((0, 1, 2), 1) == (0, 2)
    assert boundary_face((0, 1, 2), 0) == (1, 2)
    with pytest.raises(ValueError):
        boundary_face((3,), 0)
    with pytest.raises(ValueError):
        boundary_face((0, 1), 2)


def test_boundary_relation_instance():
    s = (0, 1, 2)
    assert boundary_face(boundary_face(s, 0), 0) == (2,)
    assert boundary_face(boundary_face(s, 1), 0) == (2,)


def test_boundary_relation_exhaustive():
    for k in range(3, 8):
        s = tuple(range(0, 2 * k, 2))  # non-contiguous labels
        for j in range(k - 2):
            for i in range(j + 1):
                lhs = boundary_face(boundary_face(s, i), j)
                rhs = boundary_face(boundary_face(s, j + 1), i)
                assert lhs == rhs, (k, i, j)


def test_distinguished_splitting_table():
    expected = {
        1: (1, 1),
        2: (2, 1),
        3: (2, 2),
        4: (3, 2),
        5: (3, 3),
        6: (4, 3),
        7: (4, 4),
    }
    for n, (p, q) in expected.items():
        I, J = distinguished_splitting(n)
        assert (len(I), len(J)) == (p, q)
        assert sorted(I + J) == list(range(n + 1))
    assert distinguished_splitting(5) == ((0, 2, 4), (1, 3, 5))


# -- pachner sides -----------------------------------------------------------


def test_pachner_sides_distinguished():
    before, after = pachner_sides(5, (0, 2, 4), (1, 3, 5))
    assert [s for s, _ in before.simplexes] == [
        (1, 2, 3, 4, 5),
        (0, 1, 3, 4, 5),
        (0, 1, 2, 3, 5),
    ]
    assert all(sign == 1 for _, sign in before.simplexes)
    assert all(sign == 1 for _, sign in after.simplexes)
    assert [s for s, _ in after.simplexes] == [
        (0, 2, 3, 4, 5),
        (0, 1, 2, 4, 5),
        (0, 1, 2, 3, 4),
    ]


def test_pachner_sides_single_facet():
    before, after = pachner_sides(2, (0,), (1, 2))
    assert [s for s, _ in before.simplexes] == [(1, 2)]


def test_pachner_sides_share_boundary_all_splittings():
    for n in range(2, 7):
        for I, J in all_splittings(n):
            before, after = pachner_sides(n, I, J)
            assert induced_boundary(before) == induced_boundary(after), (n, I, J)


def test_pachner_sides_custom_labels():
    before, _ = pachner_sides(2, (0, 1), (2,), labels=(3, 7, 9))
    assert [s for s, _ in before.simplexes] == [(7, 9), (3, 9)]
    with pytest.raises(ValueError):
        pachner_sides(2, (0, 1), (2,), labels=(3, 3, 9))


# -- triangulation structure -------------------------------------------------


def test_sphere_closed_and_coherent():
    for n in (3, 4, 5):
        t = simplex_boundary(n)
        assert t.is_closed()
        assert t.orientation_witness() is None


def test_euler_characteristics():
    assert simplex_boundary(3).euler_characteristic() == 2
    assert simplex_boundary(4).euler_characteristic() == 0
    assert simplex_boundary(5).euler_characteristic() == 2
    ball, _ = pachner_sides(5, (0, 2, 4), (1, 3, 5))
    assert ball.euler_characteristic() == 1


def test_orientation_witness_detects_flip():
    t = simplex_boundary(5)
    bad = Triangulation(
        4,
        [(v, (-s if e == 0 else s)) for e, (v, s) in enumerate(t.simplexes)],
        dict(t.gluing),
    )
    assert bad.orientation_witness() is not None


def test_derived_gluing_rejects_triple_facet():
    with pytest.raises(ValueError, match="occurs 3 times"):
        Triangulation(
            1,
            [((0, 1), 1), ((0, 1), -1), ((0, 1), 1)],
        )


def test_explicit_gluing_validation():
    simp = [((0, 1, 2), 1), ((0, 1, 2), -1)]
    ok = {
        ((0, i), (1, i))[0]: ((0, i), (1, i))[1]
        for i in range(3)
    }
    ok.update({v: k for k, v in ok.items()})
    t = Triangulation(2, simp, ok)
    assert t.is_closed()
    with pytest.raises(ValueError, match="involution"):
        Triangulation(2, simp, {(0, 0): (1, 0)})
    with pytest.raises(ValueError, match="different vertices"):
        Triangulation(2, simp, {(0, 0): (1, 1), (1, 1): (0, 0)})


def test_relabel():
    t = simplex_boundary(3)
    r = t.relabel(lambda v: 2 * v + 1)
    assert r.labels() == [1, 3, 5, 7]
    assert r.gluing == t.gluing
    assert r.euler_characteristic() == 2
    with pytest.raises(ValueError, match="increasing"):
        t.relabel(lambda v: -v)


# -- move sites ---------------------------------------------------------------


def test_defining_configuration_has_one_site():
    I0, J0 = distinguished_splitting(5)
    ball, _ = pachner_sides(5, I0, J0)
    sites = find_move_sites(ball, I0, J0)
    assert len(sites) == 1
    site = sites[0]
    assert site.phi == (0, 1, 2, 3, 4, 5)
    assert site.epsilon == 1
    assert site.entries == (0, 1, 2)


def test_sphere_has_even_half_site():
    I0, J0 = distinguished_splitting(5)
    t = simplex_boundary(5)
    sites = find_move_sites(t, I0, J0)
    assert len(sites) >= 1
    assert any(s.phi == (0, 1, 2, 3, 4, 5) and s.epsilon == 1 for s in sites)
    # the odd half matches the reversed splitting
    odd_sites = find_move_sites(t, J0, I0)
    assert any(s.phi == (0, 1, 2, 3, 4, 5) for s in odd_sites)


def test_single_pentachoron_has_no_33_site():
    t = Triangulation(4, [((0, 1, 2, 3, 4), 1)])
    I0, J0 = distinguished_splitting(5)
    assert find_move_sites(t, I0, J0) == []


def test_fresh_vertex_site_only_at_last_position():
    t = Triangulation(2, [((0, 1, 2), 1)])
    assert find_move_sites(t, (0,), (1, 2, 3)) == []
    sites = find_move_sites(t, (3,), (0, 1, 2))
    assert len(sites) == 1
    assert sites[0].phi == (0, 1, 2, 3)


# -- applying moves -----------------------------------------------------------


def test_apply_33_to_defining_ball():
    I0, J0 = distinguished_splitting(5)
    before, after = pachner_sides(5, I0, J0)
    site = find_move_sites(before, I0, J0)[0]
    moved = apply_move(before, site)
    assert sorted(moved.simplexes) == sorted(after.simplexes)
    assert induced_boundary(moved) == induced_boundary(before)


def test_apply_is_stale_after_change():
    I0, J0 = distinguished_splitting(5)
    before, _ = pachner_sides(5, I0, J0)
    site = find_move_sites(before, I0, J0)[0]
    moved = apply_move(before, site)
    with pytest.raises(ValueError, match="stale"):
        apply_move(moved, site)


def test_move_involution_on_sphere():
    I0, J0 = distinguished_splitting(5)
    t = simplex_boundary(5)
    site = next(
        s for s in find_move_sites(t, I0, J0) if s.phi == (0, 1, 2, 3, 4, 5)
    )
    t1 = apply_move(t, site)
    assert t1.is_closed()
    assert t1.orientation_witness() is None
    assert t1.euler_characteristic() == 2
    # six entries now carry odd-facet vertex tuples, each twice
    tuples = sorted(v for v, _ in t1.simplexes)
    assert tuples == sorted(
        [t.simplexes[j][0] for j in (1, 3, 5)] * 2
    )
    # the inserted trio sits at the new indices and supports the inverse
    back_sites = [
        s
        for s in find_move_sites(t1, J0, I0)
        if s.phi == (0, 1, 2, 3, 4, 5) and s.entries == (3, 4, 5)
    ]
    assert len(back_sites) == 1
    t2 = apply_move(t1, back_sites[0])
    assert sorted(t2.simplexes) == sorted(t.simplexes)


def test_one_three_move_in_dim_two():
    t = Triangulation(2, [((0, 1, 2), 1)])
    site = find_move_sites(t, (3,), (0, 1, 2))[0]
    moved = apply_move(t, site)
    assert sorted(v for v, _ in moved.simplexes) == [
        (0, 1, 3),
        (0, 2, 3),
        (1, 2, 3),
    ]
    assert moved.orientation_witness() is None
    assert moved.euler_characteristic() == 1
    assert induced_boundary(moved) == induced_boundary(t)
    # inverse (3,1) move removes the fresh vertex again
    back = find_move_sites(moved, (0, 1, 2), (3,))
    assert len(back) == 1
    restored = apply_move(moved, back[0])
    assert sorted(restored.simplexes) == sorted(t.simplexes)


def test_two_two_move_keeps_count():
    t = simplex_boundary(3)
    sites = find_move_sites(t, (0, 2), (1, 3))
    assert sites
    moved = apply_move(t, sites[0])
    assert len(moved.simplexes) == len(t.simplexes)
    assert moved.euler_characteristic() == 2
    assert moved.orientation_witness() is None


def test_random_walks_preserve_invariants():
    rng = random.Random(11)
    for dim in (2, 3):
        t = simplex_boundary(dim + 1)
        chi = t.euler_characteristic()
        for _ in range(12):
            splittings = list(all_splittings(dim + 1))
            rng.shuffle(splittings)
            applied = False
            for I, J in splittings:
                sites = find_move_sites(t, I, J)
                if sites:
                    t = apply_move(t, rng.choice(sites))
                    applied = True
                    break
            assert applied
            assert t.is_closed()
            assert t.orientation_witness() is None
            assert t.euler_characteristic() == chi


# -- files --------------------------------------------------------------------


def test_file_round_trip(tmp_path):
    t = simplex_boundary(5)
    path = tmp_path / "sphere.tri"
    t.save(path)
    text = path.read_text()
    assert text.startswith("dim 4\n")
    assert "pent 1 2 3 4 5 +" in text
    loaded = Triangulation.load(path)
    assert loaded.simplexes == t.simplexes
    assert loaded.gluing == t.gluing


def test_file_round_trip_with_explicit_gluing(tmp_path):
    I0, J0 = distinguished_splitting(5)
    t = simplex_boundary(5)
    site = next(
        s for s in find_move_sites(t, I0, J0) if s.phi == (0, 1, 2, 3, 4, 5)
    )
    doubled = apply_move(t, site)
    path = tmp_path / "doubled.tri"
    doubled.save(path)
    assert "glue" in path.read_text()
    loaded = Triangulation.load(path)
    assert loaded.simplexes == doubled.simplexes
    assert loaded.gluing == doubled.gluing


def test_file_parsing_errors_and_comments():
    t = Triangulation.from_lines(
        ["# a sphere", "dim 2", "simp 0 1 2 +", "simp 0 1 2 - # mirror"]
    )
    assert len(t.simplexes) == 2
    with pytest.raises(ValueError, match="dim header"):
        Triangulation.from_lines(["simp 0 1 2 +"])
    with pytest.raises(ValueError, match="pent lines need dim 4"):
        Triangulation.from_lines(["dim 2", "pent 0 1 2 +"])
    with pytest.raises(ValueError, match="unknown keyword"):
        Triangulation.from_lines(["dim 2", "tet 0 1 2 +"])
    with pytest.raises(ValueError, match="sign"):
        Triangulation.from_lines(["dim 2", "simp 0 1 2 1"])
