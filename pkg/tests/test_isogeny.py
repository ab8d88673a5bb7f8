import random

import pytest

from higgsflow.curves import Curve, curve_from_j
from higgsflow.errors import UnsupportedLevel
from higgsflow.fields import make_field
from higgsflow.isogeny import (
    build_isogeny_graph,
    modular_polynomial,
    velu_isogenous_j,
    verify_clump,
)


def test_only_small_levels_supported():
    with pytest.raises(UnsupportedLevel):
        modular_polynomial(5)
    with pytest.raises(UnsupportedLevel):
        velu_isogenous_j(Curve.weierstrass(make_field(7), make_field(7).el(1), make_field(7).el(1)), 5)


def test_phi_tables_are_symmetric_and_right_degree():
    for l in (2, 3):
        phi = modular_polynomial(l)
        assert phi.is_symmetric()
        assert phi.degree == l + 1
        fld = make_field(101)
        assert phi.partial(fld.el(7)).degree == l + 1


def test_velu_codomain_count():
    # the oracle reports the isogenies whose kernel x-coordinate is rational
    # over the search field: between 0 and l+1 codomains, and nonempty for a
    # decent fraction of random curves
    fld = make_field(101)
    rng = random.Random(31)
    for l in (2, 3):
        nonempty = 0
        for _ in range(30):
            try:
                E = Curve.weierstrass(fld, fld.el(rng.randrange(101)), fld.el(rng.randrange(101)))
            except ValueError:
                continue
            js = velu_isogenous_j(E, l)
            assert len(js) <= l + 1
            if js:
                nonempty += 1
        assert nonempty >= 5


def test_velu_pairs_satisfy_phi():
    rng = random.Random(32)
    for p in (101, 103):
        fld = make_field(p)
        for l in (2, 3):
            phi = modular_polynomial(l)
            done = 0
            while done < 5:
                try:
                    E = Curve.weierstrass(
                        fld, fld.el(rng.randrange(p)), fld.el(rng.randrange(p))
                    )
                except ValueError:
                    continue
                js = velu_isogenous_j(E, l)
                if not js:
                    continue
                ext = js[0].field
                jE = ext.el(E.j_invariant().coeffs[0])
                for j2 in js:
                    assert phi.evaluate(jE, j2).is_zero()
                done += 1


def test_phi_roots_of_supersingular_j_are_supersingular():
    from higgsflow.curves import hasse_invariant
    from higgsflow.polys import roots_in_fq
    from higgsflow.sslocus import enumerate_supersingular

    p = 31
    for l in (2, 3):
        phi = modular_polynomial(l)
        for j in enumerate_supersingular(p).j_values:
            for j2, _ in roots_in_fq(phi.partial(j)):
                assert hasse_invariant(curve_from_j(j2)).is_zero()


def test_graph_small_example():
    # p = 13 has a single supersingular j = 5; all l+1 edges are loops
    g = build_isogeny_graph(13, 2)
    assert len(g.vertices) == 1
    (j,) = g.vertices
    assert sum(m for _, m in g.adjacency[j]) == 3


def test_clump_reports():
    for p in (11, 13, 31, 37):
        for l in (2, 3):
            r = verify_clump(p, l)
            assert r.closed and r.regular
            assert r.edge_count == (l + 1) * r.vertex_count
            assert r.connected


def test_ordinary_vertex_leaves_its_stratum():
    # observation, not a theorem: an ordinary j can have correspondence
    # neighbors outside its own stratum (non-rational or supersingular),
    # so the ordinary locus over F_p is not a clump candidate
    from higgsflow.curves import hasse_invariant
    from higgsflow.polys import roots_in_fq

    p = 31
    ext = make_field(p, 2)
    phi = modular_polynomial(2)
    found = False
    for jv in range(p):
        j = ext.el(jv)
        if jv in (0, 1728 % p):
            continue
        if hasse_invariant(curve_from_j(j)).is_zero():
            continue
        for j2, _ in roots_in_fq(phi.partial(j)):
            if j2.coeffs[1] != 0 or hasse_invariant(curve_from_j(j2)).is_zero():
                found = True
    assert found
