"""End-to-end acceptance checks, one test per criterion.

Tabulated values are asserted as printed. Where a printed value is a
misprint the test fails and the message names the computed value.
"""
import itertools

import numpy as np
import pytest

from conftest import run_cli
from cubicacm import acm, catalog, census, cohomology, patterns, tables, weyl
from cubicacm.lattice import H, K, DivisorClass, degree, dot, gram_matrix
from cubicacm.parser import ParseError, parse_class


def criterion(n, title):
    return pytest.mark.criterion(n, title)


def _assert_passed(report, *ids):
    bad = {i: report[i]["detail"] for i in ids if report[i]["status"] != "PASS"}
    assert not bad, bad


@criterion(1, "enumeration counts")
def test_enumeration_counts():
    got = {kind: len(catalog.enumerate_classes(kind))
           for kind in ("line", "conic", "cubic", "root", "exceptional", "sixer")}
    assert got == {"line": 27, "conic": 27, "cubic": 72, "root": 72,
                   "exceptional": 27, "sixer": 72}


@criterion(2, "Weyl group order, orbits and invariance")
def test_weyl_group():
    group = weyl.generate_group()
    assert len(group) == 51840
    g = gram_matrix()
    mats = group.matrices
    assert np.all(np.einsum("nji,jk,nkl->nil", mats, g, mats) == g)
    assert np.all(group.act(K) == np.array(K))
    assert len(weyl.orbit(catalog.lines()[0])) == 27
    assert len(weyl.orbit(catalog.roots()[0])) == 72
    assert len(weyl.set_orbit(catalog.sixers()[0])) == 72


@criterion(3, "nine intersection distribution tables")
def test_distribution_tables():
    mismatches = []
    for table_id, dist in tables.DISTRIBUTIONS.items():
        for row, found in census.distribution_rows(table_id):
            if dict(found) != {row.value: row.count}:
                mismatches.append((table_id, row, dict(found)))
        fixed = catalog.named_class(dist.fixed)
        computed = census.intersection_distribution(fixed, dist.target)
        from_rows = {}
        for row in dist.rows:
            from_rows[row.value] = from_rows.get(row.value, 0) + row.count
        if computed != from_rows:
            mismatches.append((table_id, "totals", computed, from_rows))
        # the printed total line should be the column sum of the printed rows
        typos = {v for v in dist.totals if dist.totals[v] != from_rows.get(v)}
        assert typos == {v for (t, v) in tables.DISTRIBUTION_TOTAL_FIXES if t == table_id}
    assert not mismatches
    tt = census.intersection_distribution(catalog.named_class(catalog.Label("T_0", ())), "cubic")
    assert tt == {1: 1, 2: 20, 3: 30, 4: 20, 5: 1}


@criterion(4, "twelve fibered maps")
def test_maps():
    got = {}
    for spec in tables.MAPS:
        rep = census.fiber_check(spec.map_id)
        assert rep.outside is None and rep.is_surjective and rep.is_constant_fiber, spec.map_id
        got[spec.map_id] = rep.fiber_sizes[0]
    printed = {spec.map_id: spec.fiber for spec in tables.MAPS}
    assert [printed[m] for m in census.MAP_IDS] == [16, 16, 10, 10, 6, 5, 1, 10, 4, 16, 5, 8]
    assert got == printed, {m: (printed[m], got[m]) for m in got if got[m] != printed[m]}


@criterion(5, "line bundle cohomology")
def test_cohomology():
    for row in tables.LOW_DEGREE_CURVES:
        classes = patterns.realizations(row.pattern, disjoint=True)
        assert classes
        for d in classes:
            assert (degree(d), cohomology.h0(d), cohomology.genus(d)) == \
                (row.degree, row.h0, row.genus), (row, d)
    for ln in catalog.lines():
        assert cohomology.h1(2 * ln) == 1 and cohomology.h1(3 * ln) == 3
        for m in range(1, 6):
            assert cohomology.h1(-m * ln) == (m * m + m) // 2 - 1
    box = cohomology.box(4, 3)
    assert len(box) == 9 * 7 ** 6
    hv = cohomology.h_vectors_array(box)
    a0, rest = box[:, 0], box[:, 1:]
    square = a0 * a0 - (rest * rest).sum(axis=1)
    deg = 3 * a0 + rest.sum(axis=1)
    assert np.all(hv[:, 0] - hv[:, 1] + hv[:, 2] == (square + deg) // 2 + 1)
    assert np.all(hv >= 0)
    # h^i(D) = h^(2-i)(K - D)
    assert np.array_equal(hv, cohomology.h_vectors_array(np.array(K) - box)[:, ::-1])


def _difference_mismatches():
    """h1 profiles, squares and patterns of M - N + H and M + N - H for all pairs."""
    hvec = np.array(H, dtype=np.int64)
    h1_bad, shape_bad = [], set()
    for m_kind, n_kind in itertools.product("TCL", repeat=2):
        rows = [r for r in tables.DIFFERENCE_H1 if (r.m_kind, r.n_kind) == (m_kind, n_kind)]
        ms = np.array(census.pool(m_kind), dtype=np.int64)
        ns = np.array(census.pool(n_kind), dtype=np.int64)
        mm, nn = np.repeat(ms, len(ns), axis=0), np.tile(ns, (len(ms), 1))
        prods = np.einsum("ni,ij,nj->n", mm, gram_matrix(), nn)
        h1 = np.stack([cohomology.h_vectors_array(mm - nn + t * hvec)[:, 1]
                       for t in range(-8, 9)], axis=1)
        for k in range(len(mm)):
            row = next((r for r in rows if r.product == prods[k]), None)
            want = dict(zip(row.twists, row.h1)) if row else {}
            got = {t - 8: int(v) for t, v in enumerate(h1[k]) if v}
            if got != want:
                h1_bad.append((m_kind, n_kind, tuple(mm[k]), tuple(nn[k]), got, want))
            if row is None:
                continue
            m, n = DivisorClass(mm[k]), DivisorClass(nn[k])
            ctx = {"M": m, "N": n, "rhoN": H - n}
            delta, sigma = m - n + H, m + n - H
            key = (m_kind, n_kind, row.product)
            if dot(delta, delta) != row.delta_square:
                shape_bad.add(key + ("delta square", row.delta_square, dot(delta, delta)))
            if dot(sigma, sigma) != row.sigma_square:
                shape_bad.add(key + ("sigma square", row.sigma_square, dot(sigma, sigma)))
            if not patterns.matches(delta, row.delta_pattern, ctx):
                shape_bad.add(key + ("delta pattern", row.delta_pattern))
            if not patterns.matches(sigma, row.sigma_pattern, ctx):
                shape_bad.add(key + ("sigma pattern", row.sigma_pattern))
    return h1_bad, sorted(shape_bad)


@criterion(6, "h1 of differences over all pairs, with delta and sigma")
def test_difference_boxes():
    h1_bad, shape_bad = _difference_mismatches()
    assert not h1_bad, h1_bad[:5]
    assert not shape_bad, shape_bad


@criterion(7, "resolution types: degree sequences, Hilbert polynomials, duality")
def test_resolution_types(report):
    _assert_passed(report, "resolution-degree-sequence", "resolution-hilbert",
                   "resolution-duality")
    for rt in acm.RESOLUTION_TYPES.values():
        assert census.hilbert_from_twists(rt) == rt.hilbert
        dual = acm.RESOLUTION_TYPES[rt.dual_label]
        for t in range(-5, 6):
            assert dual.hilbert_at(t) == rt.hilbert_at(-t - 1 + rt.dual_shift)


@criterion(8, "Chern class classifier")
def test_classifier(report):
    triples = [rt.triple for rt in acm.RESOLUTION_TYPES.values()]
    assert len(set(triples)) == 12
    _assert_passed(report, "resolution-triples-distinct",
                   *[f"chern-{label.lower()}" for label in acm.RESOLUTION_TYPES])
    assert acm.rank2_type(2 * H, 5).label == "A1"
    c1, c2 = acm.twist_chern(2 * H, 5, 3)
    t, n1, n2, rt = acm.normalize_chern(c1, c2)
    assert (t, n1, n2, rt.label) == (-3, 2 * H, 5, "A1")


@criterion(9, "summary extension tables")
def test_summary_tables(report):
    _assert_passed(report, "summary-normalized", "summary-twisted")
    for row in tables.SUMMARY_NORMALIZED + tables.SUMMARY_TWISTED:
        m, n = census.pairs_with(row.m_pool, row.n_pool, row.product)[0]
        rec = acm.extension_profile(m, n)
        assert (rec.type, rec.c1, rec.c2) == (row.type_label, m + n, dot(m, n))
        assert rec.unobstructed and rec.hilbert_matches
    for group, cases in tables.EXTENSION_CASES.items():
        for case in cases:
            if case.simple:
                m, n = census.case_pairs(case)[0]
                assert acm.extension_profile(m, n, case.t).simple_sufficient, (group, case)


@criterion(10, "family census")
def test_family_census():
    records = {r.type_label: r for r in census.family_census()}
    assert [records[k].family_count for k in acm.RESOLUTION_TYPES] == \
        [1, 72, 270, 27, 216, 27, 216, 27, 1, 27, 1, 72]
    for rec in records.values():
        for row in rec.printed_rows:
            if "st" in row.tags:
                assert row.dim == rec.family_dim, rec.type_label
    assert records["A1"].family_dim == 5 == 2 * 5 - 5
    g = records["G"]
    assert [r.dim for r in g.printed_rows if r.tags] == [2]
    assert g.family_dim == 1
    mismatches = []
    for row in tables.CENSUS_EXTENSIONS:
        ext = census.count_extensions(row)
        assert ext.ext_dims == (row.h1,), row
        if ext.pair_count != row.count:
            mismatches.append((row.type_label, row.m_pool, row.n_pool, row.product,
                               f"printed {row.count}", f"computed {ext.pair_counts}"))
    assert not mismatches, mismatches


@criterion(11, "aCM line bundle catalog")
def test_acm_catalog():
    cat = acm.acm_line_catalog()
    assert len(cat) == 127
    assert sorted(set(cat.values())) == ["OO", "conic", "cubic", "line"]
    by_kind = {"OO": 1, "line": 27, "conic": 27, "cubic": 72}
    assert {k: sum(v == k for v in cat.values()) for k in by_kind} == by_kind


@criterion(12, "negative controls")
def test_negative_controls(verify_output, corrupted_gram):
    code, payload, _ = verify_output
    assert code == 0 and payload["failed"] == 0
    bad_code, out, _ = run_cli("verify")
    assert bad_code == 1
    assert '"status": "FAIL"' in out
    for text, pos in (("b7", 1), ("L[1,1]", 4), ("H +", 3), ("[1,2]", 4), ("L[0]", 2)):
        with pytest.raises(ParseError) as info:
            parse_class(text)
        assert info.value.position == pos, text
