"""Exhaustive recounts of the finite tables.

Every count is obtained by enumerating the relevant classes, never by
sampling. ``verify_all`` runs one check per table (or per table row where
rows are independent) and reports PASS or FAIL with a counterexample.
"""
from __future__ import annotations

import itertools
import traceback
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import acm, catalog, cohomology, patterns, tables, weyl
from ._cache import cached
from .lattice import H, ZERO, DivisorClass, degree, dot, gram_matrix

KIND_SIZES = {"line": 27, "conic": 27, "cubic": 72}

# -- class pools --------------------------------------------------------------------

_BASE = {"L": catalog.lines, "C": catalog.conics, "T": catalog.cubics}


def pool(name: str) -> Tuple[DivisorClass, ...]:
    """Classes named by ``L``, ``C``, ``T``, ``-L`` or ``X-H``."""
    if name.startswith("-"):
        return tuple(-x for x in pool(name[1:]))
    if name.endswith("-H"):
        return tuple(x - H for x in pool(name[:-2]))
    if name in _BASE:
        return tuple(_BASE[name]())
    raise ValueError(f"unknown class pool {name!r}")


def pairs_with(m_pool: str, n_pool: str, product: int) -> List[Tuple[DivisorClass, DivisorClass]]:
    ms, ns = pool(m_pool), pool(n_pool)
    prods = np.array(ms, dtype=np.int64) @ gram_matrix() @ np.array(ns, dtype=np.int64).T
    return [(ms[i], ns[j]) for i, j in zip(*np.nonzero(prods == product))]


# -- intersection distributions ---------------------------------------------------------

def _kind_of(d) -> str:
    kind = catalog.classify_membership(d)
    if kind not in KIND_SIZES:
        raise weyl.DomainError(f"{tuple(d)} is not a line, conic or cubic")
    return kind


def intersection_distribution(fixed, kind: str) -> Dict[int, int]:
    """How many classes of ``kind`` meet ``fixed`` with each intersection."""
    _kind_of(fixed)
    if kind not in KIND_SIZES:
        raise weyl.DomainError(f"unknown kind {kind!r}")
    counts = Counter(dot(fixed, x) for x in catalog.enumerate_classes(kind))
    return dict(sorted(counts.items()))


def _condition(cond: str, idx: Tuple[int, ...]) -> bool:
    if cond == "all":
        return True
    if cond == "with1":
        return 1 in idx
    if cond == "without1":
        return 1 not in idx
    if cond == "first1":
        return idx[0] == 1
    if cond == "second1":
        return idx[1] == 1
    raise ValueError(f"unknown index condition {cond!r}")


def distribution_rows(table_id: str) -> List[Tuple[tables.DistributionRow, Counter]]:
    """For each printed row, the intersection values found on its classes."""
    dist = tables.DISTRIBUTIONS[table_id]
    fixed = catalog.named_class(dist.fixed)
    out = []
    for row in dist.rows:
        found = Counter(
            dot(fixed, catalog.named_class(lab))
            for lab in catalog.all_labels(dist.target)
            if lab.family == row.family and _condition(row.condition, lab.indices)
        )
        out.append((row, found))
    return out


# -- fibered maps -----------------------------------------------------------------------

@dataclass(frozen=True)
class FiberReport:
    map_id: str
    domain_size: int
    codomain_size: int
    fiber_sizes: Tuple[int, ...]
    expected_fiber: int
    is_constant_fiber: bool
    is_surjective: bool
    outside: Optional[Tuple] = None   # a domain element mapping outside the codomain
    missed: int = 0                   # codomain elements with an empty fiber

    @property
    def ok(self) -> bool:
        return (self.outside is None and self.is_surjective and self.is_constant_fiber
                and self.fiber_sizes == (self.expected_fiber,))


def _ordered(a: str, b: str, product: int):
    return pairs_with(a, b, product)


def _unordered(a: str, product: int):
    return [p for p in pairs_with(a, a, product) if p[0] < p[1]]


def _disjoint_lines(k: int):
    ls = sorted(catalog.lines())
    return [c for c in itertools.combinations(ls, k)
            if all(dot(x, y) == 0 for x, y in itertools.combinations(c, 2))]


def _by_sum(items: Iterable[Sequence[DivisorClass]]) -> Dict[DivisorClass, Tuple]:
    """Index a codomain of tuples by the sum of their classes."""
    out: Dict[DivisorClass, Tuple] = {}
    for it in items:
        key = sum(it, ZERO)
        if key in out:
            raise AssertionError(f"codomain elements share the sum {tuple(key)}")
        out[key] = tuple(it)
    return out


def _singletons(classes) -> Dict[DivisorClass, Tuple]:
    return {x: (x,) for x in classes}


def _map_data(map_id: str):
    """(domain, image function, codomain keyed by class) for a registered map."""
    if map_id == "cubic-minus-conic":
        return _ordered("T", "C", 1), lambda p: p[0] - p[1], _singletons(catalog.lines())
    if map_id == "cubic-minus-line":
        return _ordered("T", "L", 0), lambda p: p[0] - p[1], _singletons(catalog.conics())
    if map_id == "conic-minus-line":
        return _ordered("C", "L", 0), lambda p: p[0] - p[1], _singletons(catalog.lines())
    if map_id == "line-plus-line":
        return _ordered("L", "L", 1), lambda p: p[0] + p[1], _singletons(catalog.conics())
    if map_id == "hyperplane-minus-line-plus-line":
        return (_ordered("L", "L", 0), lambda p: H - p[0] + p[1],
                _singletons(catalog.cubics()))
    if map_id == "cubic-minus-line-disjoint":
        return _ordered("T", "L", 1), lambda p: p[0] - p[1], _by_sum(_unordered("L", 0))
    if map_id == "three-lines":
        return _disjoint_lines(3), lambda p: H + sum(p, ZERO), _by_sum(_unordered("T", 2))
    if map_id == "cubic-pairs-4":
        return (_unordered("T", 4), lambda p: p[0] + p[1] - H,
                _singletons(catalog.cubics()))
    if map_id == "cubic-pairs-3":
        return _unordered("T", 3), lambda p: p[0] + p[1] - H, _by_sum(_ordered("L", "C", 0))
    if map_id == "cubic-conic-3":
        return _ordered("T", "C", 3), lambda p: p[0] + p[1] - H, _singletons(catalog.conics())
    if map_id == "cubic-conic-2":
        return _ordered("T", "C", 2), lambda p: p[0] + p[1] - H, _by_sum(_unordered("L", 0))
    if map_id == "conic-pairs-2":
        return (_unordered("C", 2), lambda p: p[0] + p[1] - H,
                _singletons(catalog.lines()))
    raise KeyError(f"unknown map {map_id!r}")


MAP_IDS = tuple(m.map_id for m in tables.MAPS)


def fiber_check(map_id: str) -> FiberReport:
    """Evaluate a registered map on its whole domain and measure the fibers."""
    spec = {m.map_id: m for m in tables.MAPS}[map_id]
    domain, image, codomain = _map_data(map_id)
    fibers = Counter()
    outside = None
    for x in domain:
        y = image(x)
        if y not in codomain:
            outside = outside or tuple(tuple(c) for c in x)
            continue
        fibers[y] += 1
    sizes = tuple(sorted(set(fibers.values())))
    return FiberReport(
        map_id=map_id, domain_size=len(domain), codomain_size=len(codomain),
        fiber_sizes=sizes, expected_fiber=spec.fiber,
        is_constant_fiber=len(sizes) == 1,
        is_surjective=len(fibers) == len(codomain), outside=outside,
        missed=len(codomain) - len(fibers),
    )


# -- census of families -------------------------------------------------------------

def stability_of(m, n) -> str:
    """Tabulated stability of the extension of N by M, or ``n/a``."""
    pm, pn = acm.pattern_of(m), acm.pattern_of(n)
    prod = dot(m, n)
    for row in tables.CENSUS_EXTENSIONS:
        if (row.m_pool, row.n_pool, row.product) == (pm, pn, prod):
            return row.stability
    return "n/a"


@dataclass(frozen=True)
class ExtensionCount:
    m_pool: str
    n_pool: str
    product: int
    ext_dims: Tuple[int, ...]        # distinct h1(M - N) over the pairs
    pair_counts: Tuple[int, ...]     # distinct ordered-pair counts per c1
    printed_count: int
    printed_h1: int
    stability: str

    @property
    def pair_count(self) -> Optional[int]:
        return self.pair_counts[0] if len(self.pair_counts) == 1 else None


@dataclass(frozen=True)
class FamilyRecord:
    type_label: str
    c1_pattern: str
    c2: int
    family_count: int
    family_dim: int
    stability_tags: Tuple[Tuple[str, ...], ...]
    printed_rows: Tuple[tables.FamilyRow, ...]
    extension_rows: Tuple[ExtensionCount, ...] = field(default=())


@cached
def type_c1_classes(label: str) -> frozenset:
    """Every normalized c1 of the given resolution type."""
    rt = acm.RESOLUTION_TYPES[label]
    return patterns.realizations(rt.c1_pattern, disjoint=rt.c1_disjoint)


def count_extensions(row: tables.CensusExtension) -> ExtensionCount:
    c1s = type_c1_classes(row.type_label)
    per_c1 = Counter()
    dims = set()
    found = [(m, n) for m, n in pairs_with(row.m_pool, row.n_pool, row.product)
             if m + n in c1s]
    if found:
        diffs = np.array([m - n for m, n in found], dtype=np.int64)
        dims = set(cohomology.h_vectors_array(diffs)[:, 1].tolist())
    for m, n in found:
        per_c1[m + n] += 1
    counts = {per_c1.get(c, 0) for c in c1s}
    return ExtensionCount(
        m_pool=row.m_pool, n_pool=row.n_pool, product=row.product,
        ext_dims=tuple(sorted(dims)), pair_counts=tuple(sorted(counts)),
        printed_count=row.count, printed_h1=row.h1, stability=row.stability,
    )


@cached
def family_census() -> Tuple[FamilyRecord, ...]:
    out = []
    for label, rt in acm.RESOLUTION_TYPES.items():
        c1s = type_c1_classes(label)
        rep = min(c1s)
        printed = tuple(r for r in tables.FAMILY_ROWS if r.type_label == label)
        ext = tuple(count_extensions(r) for r in tables.CENSUS_EXTENSIONS
                    if r.type_label == label)
        out.append(FamilyRecord(
            type_label=label, c1_pattern=rt.c1_pattern, c2=rt.c2,
            family_count=len(c1s), family_dim=acm.expected_moduli_dim(rep, rt.c2),
            stability_tags=tuple(r.tags for r in printed), printed_rows=printed,
            extension_rows=ext,
        ))
    return tuple(out)


# -- verification -------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    check_id: str
    passed: bool
    detail: str = ""
    counterexample: Optional[str] = None

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"


class CheckFailure(AssertionError):
    def __init__(self, message: str, counterexample=None) -> None:
        super().__init__(message)
        self.counterexample = counterexample


def _require(cond: bool, message: str, counterexample=None) -> None:
    if not cond:
        raise CheckFailure(message, counterexample)


_CHECKS: Dict[str, Callable[[], str]] = {}


def check(check_id: str):
    def register(fn: Callable[[], str]) -> Callable[[], str]:
        if check_id in _CHECKS:
            raise ValueError(f"duplicate check {check_id!r}")
        _CHECKS[check_id] = fn
        return fn
    return register


def _errata_note(*keys: str) -> str:
    return "; ".join(f"printed {tables.ERRATA[k].printed}, computed {tables.ERRATA[k].computed}"
                     f" ({tables.ERRATA[k].where})" for k in keys)


# enumeration counts

def _count_check(check_id: str, fn: Callable[[], Iterable], expected: int) -> None:
    @check(check_id)
    def run() -> str:
        n = len(tuple(fn()))
        _require(n == expected, f"found {n}, expected {expected}")
        return f"{n} classes"


for _name, _fn, _n in (("lines", catalog.lines, 27), ("conics", catalog.conics, 27),
                       ("cubics", catalog.cubics, 72), ("roots", catalog.roots, 72),
                       ("exceptional", catalog.exceptional, 27),
                       ("sixers", catalog.sixers, 72)):
    _count_check(f"count-{_name}-{_n}", _fn, _n)


@check("acm-catalog-127")
def _acm_catalog() -> str:
    cat = acm.acm_line_catalog()
    expected = {ZERO} | set(catalog.lines()) | set(catalog.conics()) | set(catalog.cubics())
    _require(len(cat) == 127, f"{len(cat)} normalized aCM classes")
    extra = set(cat) ^ expected
    _require(not extra, "catalog differs from 0, lines, conics, cubics",
             sorted(extra)[:1])
    return "127 classes"


@check("acm-line-shapes")
def _acm_shapes() -> str:
    want = {"line": "line", "conic": "conic", "cubic": "cubic", "none": "OO"}
    for d, shape in acm.acm_line_catalog().items():
        kind = "none" if d.is_zero() else catalog.classify_membership(d)
        _require(shape == want[kind], f"shape {shape} for a {kind}", tuple(d))
    return "shapes OO, line, conic, cubic"


# Weyl group

@check("weyl-order-51840")
def _weyl_order() -> str:
    n = len(weyl.generate_group())
    _require(n == weyl.ORDER, f"closure has {n} elements")
    return f"{n} elements"


@check("weyl-preserves-form")
def _weyl_form() -> str:
    g = gram_matrix()
    mats = weyl.generate_group().matrices
    gram_ok = np.all(np.einsum("nji,jk,nkl->nil", mats, g, mats) == g, axis=(1, 2))
    fixes_k = np.all(mats @ np.array(H) == np.array(H), axis=1)
    bad = np.nonzero(~(gram_ok & fixes_k))[0]
    _require(not len(bad), "element does not preserve the form and K",
             mats[bad[0]].tolist() if len(bad) else None)
    return f"{len(mats)} isometries fixing K"


def _orbit_check(check_id: str, start: Callable[[], object], size: int, sets: bool = False):
    @check(check_id)
    def run() -> str:
        orb = weyl.set_orbit(start()) if sets else weyl.orbit(start())
        _require(len(orb) == size, f"orbit of size {len(orb)}")
        return f"orbit of size {size}"


_orbit_check("orbit-lines-27", lambda: catalog.lines()[0], 27)
_orbit_check("orbit-roots-72", lambda: weyl.SIMPLE_ROOTS[1], 72)
_orbit_check("orbit-sixers-72", lambda: catalog.sixers()[0], 72, sets=True)


@check("sixer-root-bijection")
def _sixer_roots() -> str:
    images = {}
    for s in catalog.sixers():
        images[weyl.sixer_root(s)] = s
    _require(len(images) == 72 and set(images) == set(catalog.roots()),
             f"{len(images)} distinct roots from 72 sixers")
    return "72 sixers onto 72 roots; " + _errata_note("sixer-sign")


# intersection tables

def _distribution_check(table_id: str) -> None:
    @check(f"appendix-{table_id}")
    def run() -> str:
        dist = tables.DISTRIBUTIONS[table_id]
        fixed = catalog.named_class(dist.fixed)
        for row, found in distribution_rows(table_id):
            _require(dict(found) == {row.value: row.count},
                     f"row {row.family}/{row.condition}: found {dict(found)}, "
                     f"printed {row.count} at {row.value}")
        totals = intersection_distribution(fixed, dist.target)
        printed = {v: tables.DISTRIBUTION_TOTAL_FIXES.get((table_id, v), c)
                   for v, c in dist.totals.items()}
        _require(totals == printed, f"totals {totals} vs {printed}")
        _require(sum(r.count for r in dist.rows) == KIND_SIZES[dist.target],
                 "rows do not partition the target family")
        notes = [k for k in tables.ERRATA if k.startswith(table_id + "/")]
        return f"totals {totals}" + ("; " + _errata_note(*notes) if notes else "")


for _tid in tables.DISTRIBUTIONS:
    _distribution_check(_tid)


# low-degree curves

def _curve_check(i: int, row: tables.CurveRow) -> None:
    @check(f"low-degree-curve-{i}-{row.pattern.replace('+', '-').lower()}")
    def run() -> str:
        classes = patterns.realizations(row.pattern, disjoint=True)
        _require(bool(classes), "no classes of this form")
        for d in classes:
            got = (degree(d), cohomology.h0(d), cohomology.genus(d))
            _require(got == (row.degree, row.h0, row.genus),
                     f"degree, h0, genus = {got}", tuple(d))
        return f"{len(classes)} classes with h0 {row.h0}, genus {row.genus}"


for _i, _row in enumerate(tables.LOW_DEGREE_CURVES, 1):
    _curve_check(_i, _row)


@check("cohomology-multiple-lines")
def _multiple_lines() -> str:
    for ln in catalog.lines():
        _require(cohomology.h1(2 * ln) == 1, "h1(2L) != 1", tuple(ln))
        _require(cohomology.h1(3 * ln) == 3, "h1(3L) != 3", tuple(ln))
        for m in range(1, 6):
            _require(cohomology.h1(-m * ln) == (m * m + m) // 2 - 1,
                     f"h1(-{m}L) wrong", tuple(ln))
    return "h1(2L)=1, h1(3L)=3, h1(-mL)=(m^2+m)/2-1"


# h1 of differences

TWIST_RANGE = range(-8, 9)


def _difference_check(m_kind: str) -> None:
    @check(f"extensions-box-{m_kind.lower()}")
    def run() -> str:
        rows = [r for r in tables.DIFFERENCE_H1 if r.m_kind == m_kind]
        hvec = np.array(H, dtype=np.int64)
        n_checked = 0
        notes = set()
        for n_kind in ("T", "C", "L"):
            ms = np.array(pool(m_kind), dtype=np.int64)
            ns = np.array(pool(n_kind), dtype=np.int64)
            mm = np.repeat(ms, len(ns), axis=0)
            nn = np.tile(ns, (len(ms), 1))
            prods = np.einsum("ni,ij,nj->n", mm, gram_matrix(), nn)
            table = {}
            for t in TWIST_RANGE:
                table[t] = cohomology.h_vectors_array(mm - nn + t * hvec)[:, 1]
            for k in range(len(mm)):
                prod = int(prods[k])
                row = next((r for r in rows if r.n_kind == n_kind and r.product == prod), None)
                want = dict(zip(row.twists, row.h1)) if row else {}
                got = {t: int(table[t][k]) for t in TWIST_RANGE if table[t][k]}
                _require(got == want, f"h1 profile {got}, expected {want}",
                         (tuple(mm[k]), tuple(nn[k])))
                n_checked += 1
                if row is None:
                    continue
                m, n = DivisorClass(mm[k]), DivisorClass(nn[k])
                ctx = {"M": m, "N": n, "rhoN": H - n}
                key = (row.m_kind, row.n_kind, row.product)
                pattern, delta_sq = tables.DIFFERENCE_FIXES.get(
                    key, (row.delta_pattern, row.delta_square))
                if key in tables.DIFFERENCE_FIXES:
                    notes.add(_errata_note("difference/" + "-".join(map(str, key))))
                delta, sigma = m - n + H, m + n - H
                _require(dot(delta, delta) == delta_sq, "delta square", (m, n))
                _require(dot(sigma, sigma) == row.sigma_square, "sigma square", (m, n))
                _require(patterns.matches(delta, pattern, ctx),
                         f"M-N+H not of the form {pattern}", (m, n))
                _require(patterns.matches(sigma, row.sigma_pattern, ctx),
                         f"M+N-H not of the form {row.sigma_pattern}", (m, n))
        text = f"{n_checked} pairs, twists {TWIST_RANGE.start}..{TWIST_RANGE.stop - 1}"
        return "; ".join([text] + sorted(notes))


for _k in ("T", "C", "L"):
    _difference_check(_k)


@check("difference-euler-characteristics")
def _difference_chi() -> str:
    classes = list(catalog.lines()) + list(catalog.conics()) + list(catalog.cubics())
    for m, n in itertools.product(classes, repeat=2):
        mn = dot(m, n)
        _require(cohomology.euler_char(m + n - H) == mn - 1, "chi(M+N-H)", (m, n))
        _require(cohomology.euler_char(m - n + H) == 2 * degree(m) - degree(n) + 2 - mn,
                 "chi(M-N+H)", (m, n))
    return f"{len(classes) ** 2} ordered pairs"


# resolution types

def _binom3(x: int) -> Tuple[int, int, int, int]:
    """Coefficients (t^3, t^2, t, 1) of C(t + x + 3, 3) times 6."""
    a = x + 1
    b_, c = x + 2, x + 3
    return (1, a + b_ + c, a * b_ + a * c + b_ * c, a * b_ * c)


def hilbert_from_twists(rt: acm.ResolutionType) -> Tuple[int, ...]:
    """Hilbert polynomial of coker(Syz -> Gen) over projective 3-space."""
    total = [0, 0, 0, 0]
    for sign, twists in ((1, rt.gen_twists), (-1, rt.syz_twists)):
        for x in twists:
            total = [s + sign * v for s, v in zip(total, _binom3(x))]
    if total[0] != 0 or any(v % 6 for v in total):
        raise CheckFailure("non-integral or cubic Hilbert polynomial", rt.label)
    return tuple(v // 6 for v in total[1:])


@check("resolution-degree-sequence")
def _degree_sequences() -> str:
    for rt in acm.RESOLUTION_TYPES.values():
        a = sorted(-s for s in rt.syz_twists)
        b_ = sorted(-g for g in rt.gen_twists)
        _require(len(a) == len(b_) and len(a) in (3, 4, 5, 6), "ranks", rt.label)
        _require(sum(a) - sum(b_) == 6, "twist sums", rt.label)
        _require(all(x <= y - 1 for x, y in zip(b_, a)), "elementwise bound", rt.label)
    return "12 types"


@check("resolution-hilbert")
def _hilbert() -> str:
    for rt in acm.RESOLUTION_TYPES.values():
        got = hilbert_from_twists(rt)
        _require(got == rt.hilbert, f"{got} from the twists, table {rt.hilbert}", rt.label)
    return "Hilbert polynomials agree with the twists"


@check("resolution-duality")
def _duality() -> str:
    for rt in acm.RESOLUTION_TYPES.values():
        dual = acm.RESOLUTION_TYPES[rt.dual_label]
        for t in range(-6, 7):
            _require(dual.hilbert_at(t) == rt.hilbert_at(-t - 1 + rt.dual_shift),
                     f"dual polynomial mismatch at t={t}", rt.label)
        _require(dual.dual_label == rt.label, "duality is not an involution", rt.label)
    return "P_dual(t) = P(-t-1+shift) for 12 types"


@check("resolution-triples-distinct")
def _triples() -> str:
    triples = [rt.triple for rt in acm.RESOLUTION_TYPES.values()]
    _require(len(set(triples)) == len(triples), "repeated (c1.H, c1^2, c2)")
    return "12 distinct invariant triples"


def _chern_check(label: str) -> None:
    @check(f"chern-{label.lower()}")
    def run() -> str:
        rt = acm.RESOLUTION_TYPES[label]
        c1s = type_c1_classes(label)
        for c1 in c1s:
            got = acm.rank2_type(c1, rt.c2)
            _require(got is not None and got.label == label,
                     f"classified as {got.label if got else None}", tuple(c1))
            for t in (-2, -1, 1, 2):
                tc1, tc2 = acm.twist_chern(c1, rt.c2, t)
                s, n1, n2, back = acm.normalize_chern(tc1, tc2)
                _require(back is not None and back.label == label and n1 == c1,
                         f"twist {t} does not normalize back", tuple(c1))
        text = f"{len(c1s)} first Chern classes"
        if label == "C2":
            # the same classes are also written C - L with C.L = 1
            alt = {c - ln for c in catalog.conics() for ln in catalog.lines() if dot(c, ln) == 1}
            _require(alt == set(c1s), "H-L1-L2 and C-L describe different sets")
            text += "; H-L1-L2 (L1.L2=0) and C-L (C.L=1) are the same 216 classes"
        return text


for _label in acm.RESOLUTION_TYPES:
    _chern_check(_label)


# extensions

def _summary_check(check_id: str, rows: Sequence[tables.SummaryRow]) -> None:
    @check(check_id)
    def run() -> str:
        n = 0
        for row in rows:
            for m, n_ in pairs_with(row.m_pool, row.n_pool, row.product):
                rec = acm.extension_profile(m, n_)
                _require(rec.type == row.type_label,
                         f"type {rec.type}, expected {row.type_label}", (m, n_))
                _require(rec.c1 == m + n_ and rec.c2 == dot(m, n_), "Chern classes", (m, n_))
                _require(rec.hilbert_matches is True, "Hilbert polynomial", (m, n_))
                _require(rec.unobstructed, "obstructed", (m, n_))
                n += 1
        return f"{n} pairs"


_summary_check("summary-normalized", tables.SUMMARY_NORMALIZED)
_summary_check("summary-twisted", tables.SUMMARY_TWISTED)


def case_pairs(case: tables.ExtensionCase):
    return pairs_with(case.m_kind, case.n_kind, case.product)


def _case_check(group: str) -> None:
    @check(f"extension-cases-{group}")
    def run() -> str:
        n = 0
        notes = []
        for i, case in enumerate(tables.EXTENSION_CASES[group]):
            c2 = tables.CASE_C2_FIXES.get((group, i), case.c2)
            if c2 != case.c2:
                notes.append(_errata_note(f"{group}/C-L-1"))
            for m, n_ in case_pairs(case):
                rec = acm.extension_profile(m, n_, case.t)
                where = (m, n_, case.t)
                _require(rec.ext_dim == case.h1, f"h1 {rec.ext_dim}", where)
                c1, cc2 = (rec.normal_c1, rec.normal_c2) if case.normalized else (rec.c1, rec.c2)
                _require(cc2 == c2, f"c2 {cc2}, expected {c2}", where)
                _require(patterns.matches(c1, case.c1_pattern),
                         f"c1 not of the form {case.c1_pattern}", where)
                _require(rec.type == case.outcome, f"type {rec.type}", where)
                if case.outcome == "split":
                    _require(rec.split is not None, "no splitting found", where)
                if case.simple:
                    _require(rec.simple_sufficient, "simplicity criterion fails", where)
                uncertified = tables.UNCERTIFIED_CASES.get((group, i))
                if uncertified is None:
                    _require(rec.unobstructed, "obstructed", where)
                else:
                    _require(case.outcome == "split" and not rec.unobstructed,
                             "known uncertified case changed", where)
                    notes.append(_errata_note(uncertified))
                n += 1
        return "; ".join([f"{n} extensions"] + sorted(set(notes)))


for _group in tables.EXTENSION_CASES:
    _case_check(_group)


# census

@check("census-family-counts")
def _family_counts() -> str:
    for rec in family_census():
        for row in rec.printed_rows:
            _require(row.count == rec.family_count,
                     f"{rec.family_count} classes, printed {row.count}", rec.type_label)
    return ", ".join(f"{r.type_label}:{r.family_count}" for r in family_census())


@check("census-dimensions")
def _dimensions() -> str:
    for rec in family_census():
        for row in rec.printed_rows:
            if "st" in row.tags:
                _require(row.dim == rec.family_dim,
                         f"dim {rec.family_dim}, printed {row.dim}", rec.type_label)
            elif rec.type_label in tables.KNOWN_DIM_EXCEPTIONS and row.tags:
                printed, formula = tables.KNOWN_DIM_EXCEPTIONS[rec.type_label]
                _require((row.dim, rec.family_dim) == (printed, formula),
                         "known exception changed", rec.type_label)
    return "stable rows agree; " + _errata_note("census/G-dim")


@check("census-extension-counts")
def _extension_counts() -> str:
    notes = []
    for rec in family_census():
        for ext, row in zip(rec.extension_rows,
                            [r for r in tables.CENSUS_EXTENSIONS if r.type_label == rec.type_label]):
            want = tables.census_count_fix(row) or row.count
            where = (rec.type_label, ext.m_pool, ext.n_pool, ext.product)
            _require(ext.pair_count == want,
                     f"per-c1 counts {ext.pair_counts}, expected {want}", where)
            _require(ext.ext_dims == (row.h1,), f"h1 values {ext.ext_dims}", where)
            if want != row.count:
                notes.append(f"{rec.type_label} {ext.m_pool},{ext.n_pool}: printed {row.count}, "
                             f"computed {want}")
    return "ordered pairs per fixed c1; " + "; ".join(notes) + "; " + _errata_note("census/H3")


@check("census-stability-lookup")
def _stability() -> str:
    for row in tables.CENSUS_EXTENSIONS:
        m, n = next(iter(pairs_with(row.m_pool, row.n_pool, row.product)))
        _require(stability_of(m, n) == row.stability, "lookup mismatch", (m, n))
    return f"{len(tables.CENSUS_EXTENSIONS)} rows"


def _map_check(map_id: str) -> None:
    @check(f"map-{map_id}")
    def run() -> str:
        rep = fiber_check(map_id)
        expected = tables.MAP_FIBER_FIXES.get(map_id, rep.expected_fiber)
        _require(rep.outside is None, "image outside the codomain", rep.outside)
        _require(rep.is_surjective, f"image misses {rep.missed} targets")
        _require(rep.fiber_sizes == (expected,), f"fiber sizes {rep.fiber_sizes}")
        text = f"{rep.domain_size} -> {rep.codomain_size}, fibers {expected}"
        if expected != rep.expected_fiber:
            text += "; " + _errata_note(f"map/{map_id}")
        return text


for _m in MAP_IDS:
    _map_check(_m)


# -- running the checks ------------------------------------------------------------

def check_ids() -> List[str]:
    return sorted(_CHECKS)


def run_check(check_id: str) -> CheckResult:
    if check_id not in _CHECKS:
        raise KeyError(check_id)
    try:
        detail = _CHECKS[check_id]()
        return CheckResult(check_id, True, detail or "")
    except CheckFailure as exc:
        ce = exc.counterexample
        return CheckResult(check_id, False, str(exc), None if ce is None else repr(ce))
    except Exception as exc:  # a crash is reported, not raised
        last = traceback.format_exception_only(type(exc), exc)[-1].strip()
        return CheckResult(check_id, False, f"raised {last}")


def verify_all(only: Optional[Sequence[str]] = None) -> List[CheckResult]:
    """Run the registered checks (all of them by default), sorted by id."""
    ids = check_ids() if only is None else sorted(only)
    return [run_check(i) for i in ids]
