"""The polytope P_G of a Dyck path: facets, vertices, faces and normal fan.

Points live in x-space R^{n+1} (coordinates x_0..x_n) on the hyperplane
sum x = |G|.  The same polytope in y-space R^n is the Minkowski sum of the
Newton polytopes of the F-polynomials below the path; ``to_y`` converts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

from . import _exact
from .errors import DegenerateVertex, UnknownLabel
from .grid import DyckPath, bottom_path, upper_covers
from .indexset import Diamond, Down, Label, Up, compatible, index_set
from .report import Report
from .uspace import g_vector

Interval = tuple[int, int]


# --- interval families and facets -------------------------------------------


@dataclass(frozen=True)
class IntervalFamily:
    n: int
    intervals: tuple[Interval, ...]

    def __contains__(self, iv: Interval) -> bool:
        return tuple(iv) in set(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def count_inside(self, f: Interval) -> int:
        a, b = f
        return sum(1 for (c, d) in self.intervals if a <= c and d <= b)


def interval_family(path: DyckPath) -> IntervalFamily:
    n = path.n
    ivs = [(i - 1, j) for i in range(1, n + 1) for j in range(i, n + 1) if path.below(i, j)]
    return IntervalFamily(n, tuple(sorted(ivs)))


def facet_label(n: int, f: Interval) -> Label:
    a, b = f
    if b == n and a > 0:
        return Down(a)
    if a == 0 and b < n:
        return Up(b + 1)
    if 0 < a <= b < n:
        return Diamond(a, b + 1)
    raise UnknownLabel(f"{f} is not a facet interval")


def label_interval(n: int, x: Label) -> Interval:
    if x.kind == "down":
        return (x.i, n)
    if x.kind == "up":
        return (0, x.i - 1)
    return (x.i, x.j - 1)


@dataclass(frozen=True)
class Facet:
    interval: Interval
    rhs: int
    label: Label

    def normal(self, n: int) -> tuple[int, ...]:
        a, b = self.interval
        return tuple(1 if a <= m <= b else 0 for m in range(n + 1))


@dataclass(frozen=True)
class HRep:
    path: DyckPath
    family: IntervalFamily
    facets: tuple[Facet, ...]

    @property
    def n(self) -> int:
        return self.path.n

    @property
    def total(self) -> int:
        """Right-hand side of the equality sum x = |G|."""
        return len(self.family)

    def value(self, f: Facet, x) -> Fraction:
        a, b = f.interval
        return sum(x[a:b + 1], Fraction(0))

    def contains(self, x) -> bool:
        return sum(x) == self.total and all(self.value(f, x) >= f.rhs for f in self.facets)

    def tight(self, x) -> frozenset[int]:
        return frozenset(k for k, f in enumerate(self.facets) if self.value(f, x) == f.rhs)

    def index_of(self, iv: Interval) -> int:
        for k, f in enumerate(self.facets):
            if f.interval == tuple(iv):
                return k
        raise KeyError(iv)


def facet_intervals(path: DyckPath) -> list[Interval]:
    n = path.n
    out = [(0, i) for i in range(n)] + [(i, n) for i in range(1, n + 1)]
    out += [(a, b) for a in range(1, n) for b in range(a, n) if path.below(a, b + 1)]
    return sorted(out)


@lru_cache(maxsize=512)
def facets(path: DyckPath) -> HRep:
    fam = interval_family(path)
    fs = tuple(
        Facet(iv, fam.count_inside(iv), facet_label(path.n, iv)) for iv in facet_intervals(path)
    )
    return HRep(path, fam, fs)


# --- vertices ------------------------------------------------------------------


@dataclass
class VRep:
    hrep: HRep
    vertices: list[tuple[int, ...]]
    incidence: list[frozenset[int]]
    degenerate: list[tuple[int, ...]] = field(default_factory=list)


def _solve_tree(n: int, total: int, chosen: list[Facet]):
    """Solve the prefix-sum system of n facet equalities, or None if singular.

    With s_b = x_0 + ... + x_b, facet [a, b] reads s_b - s_{a-1} = rhs, with
    s_{-1} = 0 and s_n = total known.  Identifying the two known nodes, the
    system is nonsingular exactly when the chosen edges form a spanning tree.
    """
    root = -1
    node = lambda v: root if v in (-1, n) else v  # noqa: E731
    adj: dict[int, list[tuple[int, int, int, int]]] = {}
    parent = list(range(n + 1))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for f in chosen:
        a, b = f.interval
        u, v = node(a - 1), node(b)
        ru, rv = find(u + 1), find(v + 1)
        if ru == rv:
            return None
        parent[ru] = rv
        adj.setdefault(u, []).append((v, a - 1, b, f.rhs))
        adj.setdefault(v, []).append((u, a - 1, b, f.rhs))
    s = {-1: 0, n: total}
    seen = {root}
    stack = [root]
    while stack:
        u = stack.pop()
        for v, lo, hi, rhs in adj.get(u, []):
            if v in seen:
                continue
            seen.add(v)
            # v is the unknown end of the edge lo -> hi
            if v == hi:
                s[hi] = s[lo] + rhs
            else:
                s[lo] = s[hi] - rhs
            stack.append(v)
    prefix = [s[b] for b in range(-1, n + 1)]
    return tuple(prefix[m + 1] - prefix[m] for m in range(n + 1))


def vertices(h: HRep, strict: bool = False) -> VRep:
    """All vertices by solving every n-subset of facet equalities exactly."""
    v = _vertices(h)
    if strict and v.degenerate:
        raise DegenerateVertex(f"vertex {v.degenerate[0]} lies on more than {h.n} facets")
    return v


@lru_cache(maxsize=512)
def _vertices(h: HRep) -> VRep:
    n = h.n
    found: dict[tuple[int, ...], frozenset[int]] = {}
    if n == 0:
        x = (h.total,)
        return VRep(h, [x], [frozenset()])
    for combo in combinations(h.facets, n):
        x = _solve_tree(n, h.total, list(combo))
        if x is None or x in found:
            continue
        if all(h.value(f, x) >= f.rhs for f in h.facets):
            found[x] = h.tight(x)
    verts = sorted(found)
    inc = [found[v] for v in verts]
    degenerate = [v for v in verts if len(found[v]) != n]
    return VRep(h, verts, inc, degenerate)


def is_simple(path: DyckPath) -> bool:
    v = vertices(facets(path))
    return not v.degenerate


def to_y(h: HRep, x) -> tuple[int, ...]:
    """y_k = sum_{m >= k} x_m - #{[a, b] in G : a >= k}."""
    n = h.n
    return tuple(
        sum(x[k:]) - sum(1 for (a, _) in h.family.intervals if a >= k) for k in range(1, n + 1)
    )


def normal_to_y(c) -> tuple[int, ...]:
    """Push an x-space normal to y-space: drop the sum direction, then difference."""
    d = [v - c[0] for v in c[1:]]
    return tuple(d[k] - (d[k - 1] if k else 0) for k in range(len(d)))


# --- face lattice --------------------------------------------------------------


@dataclass(frozen=True)
class Face:
    vertices: frozenset[int]
    facets: frozenset[int]
    dim: int


@dataclass
class FaceLattice:
    faces: list[Face]
    covers: list[tuple[int, int]]  # (smaller face, larger face)
    n: int

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.n + 1)
        for f in self.faces:
            if f.dim >= 0:
                counts[f.dim] += 1
        return tuple(counts)

    def is_graded(self) -> bool:
        dims = [f.dim for f in self.faces]
        return all(dims[b] == dims[a] + 1 for a, b in self.covers)


def _affine_dim(points) -> int:
    if not points:
        return -1
    base = points[0]
    return _exact.rank([[p - q for p, q in zip(pt, base)] for pt in points[1:]])


def face_lattice(h: HRep, v: VRep) -> FaceLattice:
    nf = len(h.facets)
    vsets = [frozenset(k for k, inc in enumerate(v.incidence) if f in inc) for f in range(nf)]
    everything = frozenset(range(len(v.vertices)))
    seen = {everything}
    frontier = [everything]
    while frontier:
        nxt = []
        for face in frontier:
            for fs in vsets:
                g = face & fs
                if g not in seen:
                    seen.add(g)
                    nxt.append(g)
        frontier = nxt
    faces = []
    for vs in seen:
        fs = frozenset(f for f in range(nf) if vs <= vsets[f]) if vs else frozenset(range(nf))
        dim = _affine_dim([v.vertices[k] for k in sorted(vs)])
        faces.append(Face(vs, fs, dim))
    faces.sort(key=lambda f: (f.dim, sorted(f.vertices)))
    index = {f.vertices: k for k, f in enumerate(faces)}
    covers = []
    for k, f in enumerate(faces):
        below = [g for g in seen if g < f.vertices]
        maximal = [g for g in below if not any(g < o for o in below)]
        covers.extend((index[g], k) for g in maximal)
    covers.sort()
    return FaceLattice(faces, covers, h.n)


def f_vector(path: DyckPath) -> tuple[int, ...]:
    h = facets(path)
    lat = face_lattice(h, vertices(h))
    fv = lat.f_vector()
    return fv[:-1] + (1,) if path.n else (1,)


def verify_hv(path: DyckPath) -> Report:
    """H- and V-representations agree and the polytope is simple."""
    h = facets(path)
    v = vertices(h)
    rep = Report(path.steps)
    n = path.n
    rep.add("facets", "facet-count", len(h.facets) == len(index_set(path)),
            {"facets": len(h.facets), "labels": len(index_set(path))})
    for x, inc in zip(v.vertices, v.incidence):
        ok = h.contains(x) and h.tight(x) == inc
        rep.add(str(list(x)), "vertex", ok, None)
        rep.add(str(list(x)), "simple", len(inc) == n, len(inc))
    for k, f in enumerate(h.facets):
        pts = [x for x, inc in zip(v.vertices, v.incidence) if k in inc]
        rep.add(f.label.text, "facet-dim", _affine_dim(pts) == n - 1, len(pts))
    rep.add("polytope", "dim", _affine_dim(v.vertices) == n, None)
    lat = face_lattice(h, v)
    rep.add("lattice", "graded", lat.is_graded(), None)
    return rep


# --- facet intersections and cliques -----------------------------------------


def g_compatible(fam: IntervalFamily, f: Interval, g: Interval) -> bool:
    """Combinatorial intersection rule for two facet intervals."""
    (a, b), (c, d) = f, g
    for lo, hi in fam.intervals:
        inside_union = all((a <= m <= b) or (c <= m <= d) for m in range(lo, hi + 1))
        if inside_union and not (a <= lo and hi <= b) and not (c <= lo and hi <= d):
            return False
    return True


def facets_intersect(path: DyckPath, f: Interval, g: Interval) -> bool:
    fam = interval_family(path)
    valid = set(facet_intervals(path))
    for iv in (f, g):
        if tuple(iv) not in valid:
            raise UnknownLabel(f"{iv} is not a facet of {path}")
    return g_compatible(fam, tuple(f), tuple(g))


def verify_facet_intersection(path: DyckPath) -> Report:
    h = facets(path)
    v = vertices(h)
    iset = index_set(path)
    rep = Report(path.steps)
    for p, q in combinations(range(len(h.facets)), 2):
        fp, fq = h.facets[p], h.facets[q]
        rule = g_compatible(h.family, fp.interval, fq.interval)
        geom = any(p in inc and q in inc for inc in v.incidence)
        labels = compatible(iset, fp.label, fq.label)
        rep.add(f"{fp.label.text}|{fq.label.text}", "intersect", rule == geom == labels,
                None if rule == geom == labels else {"rule": rule, "geometry": geom, "labels": labels})
    return rep


def clique_face_correspondence(path: DyckPath) -> Report:
    """Pairwise compatible facet sets are exactly the facet sets of faces."""
    h = facets(path)
    v = vertices(h)
    lat = face_lattice(h, v)
    nf = len(h.facets)
    ok = [[g_compatible(h.family, h.facets[p].interval, h.facets[q].interval) for q in range(nf)]
          for p in range(nf)]
    cliques: set[frozenset[int]] = set()

    def grow(current: list[int], start: int):
        cliques.add(frozenset(current))
        for q in range(start, nf):
            if all(ok[p][q] for p in current):
                current.append(q)
                grow(current, q + 1)
                current.pop()

    grow([], 0)
    face_sets = {f.facets for f in lat.faces if f.vertices}
    rep = Report(path.steps)
    missing = sorted(sorted(c) for c in cliques - face_sets)
    extra = sorted(sorted(c) for c in face_sets - cliques)
    rep.add("cliques", "clique-face", not missing and not extra,
            None if not (missing or extra) else {"cliques_without_face": missing[:5],
                                                  "faces_without_clique": extra[:5]})
    # inclusion reversing: bigger face, smaller facet set
    rev = all(
        lat.faces[a].facets >= lat.faces[b].facets for a, b in lat.covers if lat.faces[a].vertices
    )
    rep.add("cliques", "inclusion-reversing", rev, None)
    return rep


# --- normal fan --------------------------------------------------------------


def normal_fan_rays(path: DyckPath) -> dict[Label, tuple[int, ...]]:
    """y-space ray of every facet, keyed by the facet's label."""
    h = facets(path)
    return {f.label: normal_to_y(f.normal(path.n)) for f in h.facets}


def minkowski_vertices_y(path: DyckPath) -> list[tuple[int, ...]]:
    """Vertices of the sum of Newt(F_{i,j}) over all grid points below the path.

    A generic functional w is encoded by the order of its partial sums
    S_0 = 0, S_1, ..., S_n.  On Newt(F_{i,j}) the minimum sits at the vertex
    e_i + ... + e_m where S_m is least among S_{i-1}, ..., S_j.  Running over
    all (n+1)! orders reaches every vertex.
    """
    n = path.n
    cells = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1) if path.below(i, j)]
    out = set()
    for order in permutations(range(n + 1)):
        s = order  # s[m] plays the role of S_m
        y = [0] * n
        for i, j in cells:
            m = min(range(i - 1, j + 1), key=lambda t: s[t])
            for t in range(i, m + 1):
                y[t - 1] += 1
        out.add(tuple(y))
    return sorted(out)


def _cofactor_normal(points) -> tuple[int, ...] | None:
    base = points[0]
    return _exact.cofactor_normal([[p - q for p, q in zip(pt, base)] for pt in points[1:]])


def hull_facet_normals(points: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    """Primitive inner facet normals of a full-dimensional point set (brute force)."""
    dim = len(points[0])
    if dim == 1:
        return {(1,), (-1,)}
    found: set[tuple[int, ...]] = set()
    tried: set[tuple[tuple[int, ...], int]] = set()
    for combo in combinations(points, dim):
        c = _cofactor_normal(list(combo))
        if c is None:
            continue
        off = sum(a * b for a, b in zip(c, combo[0]))
        if (c, off) in tried:
            continue
        tried.add((c, off))
        tried.add((tuple(-v for v in c), -off))
        vals = [sum(a * b for a, b in zip(c, p)) for p in points]
        if all(v >= off for v in vals):
            found.add(c)
        elif all(v <= off for v in vals):
            found.add(tuple(-v for v in c))
    return found


def verify_rays_are_gvectors(path: DyckPath, oracle: bool | None = None) -> Report:
    n = path.n
    rays = normal_fan_rays(path)
    gvecs = {x: g_vector(x, n) for x in index_set(path).labels}
    rep = Report(path.steps)
    for x, r in rays.items():
        rep.add(x.text, "ray", r == gvecs[x], {"ray": list(r), "g": list(gvecs[x])})
    rep.add("rays", "ray-set", set(rays.values()) == set(gvecs.values()), None)
    if oracle is None:
        oracle = n <= 4
    if oracle and n >= 1:
        h = facets(path)
        v = vertices(h)
        ys = minkowski_vertices_y(path)
        image = sorted(to_y(h, x) for x in v.vertices)
        rep.add("vertices", "minkowski", image == ys, None)
        normals = hull_facet_normals(ys)
        rep.add("rays", "hull-normals", normals == set(gvecs.values()),
                None if normals == set(gvecs.values()) else sorted(normals))
    return rep


def unimodular(path: DyckPath) -> bool:
    """Every maximal cone of the normal fan has determinant +-1."""
    h = facets(path)
    v = vertices(h)
    rays = [normal_to_y(f.normal(path.n)) for f in h.facets]
    for inc in v.incidence:
        if abs(_exact.det([rays[k] for k in sorted(inc)])) != 1:
            return False
    return True


# --- star subdivision --------------------------------------------------------


@dataclass
class StarSubdivisionWitness:
    added: Interval
    ray_interval: Interval
    ray: tuple[int, ...]
    cone: tuple[Label, Label]
    report: Report

    @property
    def passed(self) -> bool:
        return self.report.passed


def _in_open_cone(r, p, q) -> bool:
    """r = lam*p + mu*q with lam, mu > 0."""
    n = len(r)
    for a, b in combinations(range(n), 2):
        det = p[a] * q[b] - p[b] * q[a]
        if det:
            lam = Fraction(r[a] * q[b] - r[b] * q[a], det)
            mu = Fraction(p[a] * r[b] - p[b] * r[a], det)
            return lam > 0 and mu > 0 and all(lam * p[k] + mu * q[k] == r[k] for k in range(n))
    return False


def maximal_cones(path: DyckPath) -> set[frozenset[Interval]]:
    h = facets(path)
    v = vertices(h)
    return {frozenset(h.facets[k].interval for k in inc) for inc in v.incidence}


def star_rule(cones: set[frozenset[Interval]], p: Interval, q: Interval, r: Interval):
    """Star subdivision of maximal cones at a ray inside cone(p, q)."""
    out = set()
    for c in cones:
        if p in c and q in c:
            out.add((c - {p}) | {r})
            out.add((c - {q}) | {r})
        else:
            out.add(c)
    return out


def star_subdivision_check(path: DyckPath, cover: DyckPath) -> StarSubdivisionWitness:
    if cover not in upper_covers(path):
        raise ValueError(f"{cover} does not cover {path}")
    n = path.n
    old_fam = set(interval_family(path).intervals)
    new_fam = set(interval_family(cover).intervals)
    (i, j), = new_fam - old_fam
    r_iv = (i + 1, j - 1)
    p_iv, q_iv = (0, j - 1), (i + 1, n)
    rep = Report(f"{path.steps}->{cover.steps}")

    old_rays = {f.interval: normal_to_y(f.normal(n)) for f in facets(path).facets}
    new_rays = {f.interval: normal_to_y(f.normal(n)) for f in facets(cover).facets}
    r = new_rays.get(r_iv)
    rep.add("rays", "ray-diff", set(new_rays) - set(old_rays) == {r_iv}
            and set(old_rays) <= set(new_rays), None)
    if r is None:
        return StarSubdivisionWitness((i, j), r_iv, (), (Up(1), Up(1)), rep)

    old_h = facets(path)
    old_v = vertices(old_h)
    adjacent = [
        (old_h.facets[a].interval, old_h.facets[b].interval)
        for a, b in combinations(range(len(old_h.facets)), 2)
        if any(a in inc and b in inc for inc in old_v.incidence)
    ]
    hits = [(a, b) for a, b in adjacent if _in_open_cone(r, old_rays[a], old_rays[b])]
    rep.add("cone", "unique-2-cone", hits == [tuple(sorted((p_iv, q_iv)))] or
            hits == [(p_iv, q_iv)], [list(map(list, h)) for h in hits])

    new_cones = maximal_cones(cover)
    new_pairs = set()
    for c in new_cones:
        for a, b in combinations(sorted(c), 2):
            new_pairs.add((a, b))
    rep.add("cone", "new-2-cones",
            tuple(sorted((r_iv, p_iv))) in new_pairs and tuple(sorted((r_iv, q_iv))) in new_pairs,
            None)
    rep.add("cone", "old-2-cone-gone", tuple(sorted((p_iv, q_iv))) not in new_pairs, None)
    rep.add("fan", "star-rule", star_rule(maximal_cones(path), p_iv, q_iv, r_iv) == new_cones, None)
    return StarSubdivisionWitness(
        (i, j), r_iv, r, (facet_label(n, p_iv), facet_label(n, q_iv)), rep
    )


def star_chain(path: DyckPath) -> bool:
    """Rebuild the maximal cones of ``path`` by star subdivisions from the bottom path."""
    cur = bottom_path(path.n)
    cones = maximal_cones(cur)
    n = path.n
    while cur != path:
        step = next(
            c for c in upper_covers(cur) if all(a <= b for a, b in zip(c.k_heights, path.k_heights))
        )
        (i, j), = set(interval_family(step).intervals) - set(interval_family(cur).intervals)
        cones = star_rule(cones, (0, j - 1), (i + 1, n), (i + 1, j - 1))
        cur = step
    return cones == maximal_cones(path)


# --- auxiliary -----------------------------------------------------------------


def lattice_point_count(path: DyckPath) -> int:
    """Number of integer points of P_G."""
    h = facets(path)
    n, total = h.n, h.total

    def comps(parts: int, left: int):
        if parts == 1:
            yield (left,)
            return
        for first in range(left + 1):
            for rest in comps(parts - 1, left - first):
                yield (first,) + rest

    return sum(1 for x in comps(n + 1, total) if h.contains(x))


def polytope_json(path: DyckPath, y_coords: bool = False) -> dict:
    h = facets(path)
    v = vertices(h)
    out = {
        "facets": [
            {"interval": list(f.interval), "rhs": f.rhs, "label": f.label.text} for f in h.facets
        ],
        "vertices": [[str(Fraction(c)) for c in x] for x in v.vertices],
        "f_vector": list(f_vector(path)),
        "simple": not v.degenerate,
    }
    if y_coords:
        out["y_vertices"] = [[str(c) for c in y] for y in minkowski_vertices_y(path)]
    return out
