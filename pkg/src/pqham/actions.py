"""Transitive group actions at desk scale: PSL(2,p) matrix arithmetic,
generic spaces with suborbit decompositions and orbital graphs, the
character model of PSL(2,p) acting on cosets of a maximal dihedral
subgroup, and the quadric-point model of PSL(2,q^2) acting on cosets
of PGL(2,q)."""

from dataclasses import dataclass

from .field import (
    NONSQUARE,
    SQUARE,
    classify,
    is_prime,
    primitive_roots,
    sqrt_mod,
    squares,
)
from .graphs import Graph


# ---------------------------------------------------------------------------
# PSL(2, p) matrices as canonical 4-tuples (a, b, c, d), determinant 1.

def psl2_canon(m, p):
    """Canonical representative of {M, -M}: first nonzero entry in
    reading order lies in [1, (p-1)/2]."""
    a, b, c, d = (x % p for x in m)
    for x in (a, b, c, d):
        if x:
            if x > (p - 1) // 2:
                return ((-a) % p, (-b) % p, (-c) % p, (-d) % p)
            return (a, b, c, d)
    raise ValueError("zero matrix")


def psl2_mul(m, k, p):
    a, b, c, d = m
    e, f, g, h = k
    return psl2_canon((a * e + b * g, a * f + b * h,
                       c * e + d * g, c * f + d * h), p)


def psl2_inv(m, p):
    a, b, c, d = m
    return psl2_canon((d, -b, -c, a), p)


PSL2_ID = (1, 0, 0, 1)


def psl2_order(m, p):
    k, x = 1, psl2_canon(m, p)
    while x != PSL2_ID:
        x = psl2_mul(x, m, p)
        k += 1
    return k


def psl2_elements(p):
    """All p(p^2-1)/2 canonical matrices of PSL(2, p)."""
    elems = set()
    for b in range(p):
        for c in range(p):
            bc = b * c % p
            for a in range(1, p):
                d = (1 + bc) * pow(a, -1, p) % p
                elems.add(psl2_canon((a, b, c, d), p))
            if b:
                cc = (-pow(b, -1, p)) % p
                for d in range(p):
                    elems.add(psl2_canon((0, b, cc, d), p))
    assert len(elems) == p * (p * p - 1) // 2
    return sorted(elems)


def psl2_generate(gens, p):
    """Closure of the given matrices under multiplication."""
    seen = {PSL2_ID}
    frontier = [PSL2_ID]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = psl2_mul(x, g, p)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return sorted(seen)


def psl2_dihedral_subgroup(p):
    """The maximal dihedral subgroup of order p-1 (diagonal and
    antidiagonal matrices) with its two generators."""
    g = min(primitive_roots(p))
    gens = [psl2_canon((g, 0, 0, pow(g, -1, p)), p),
            psl2_canon((0, -1, 1, 0), p)]
    sub = psl2_generate(gens, p)
    assert len(sub) == p - 1
    return sub, gens


def psl2_subgroup_scan(p, order_a, order_b, order_ab, size):
    """First subgroup (in deterministic scan order) generated by an
    element of order order_a and one of order order_b whose product has
    order order_ab, of exactly the given size."""
    elems = psl2_elements(p)
    a = next(m for m in elems if psl2_order(m, p) == order_a)
    for b in elems:
        if psl2_order(b, p) != order_b:
            continue
        if psl2_order(psl2_mul(a, b, p), p) != order_ab:
            continue
        sub = _bounded_closure([a, b], p, size)
        if sub is not None:
            return sub, [a, b]
    raise ValueError("no subgroup of size %d found in PSL(2,%d)" % (size, p))


def _bounded_closure(gens, p, cap):
    seen = {PSL2_ID}
    frontier = [PSL2_ID]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = psl2_mul(x, g, p)
            if y not in seen:
                if len(seen) == cap:
                    return None
                seen.add(y)
                frontier.append(y)
    return sorted(seen) if len(seen) == cap else None


# ---------------------------------------------------------------------------
# Generic transitive action with suborbit decomposition.

@dataclass(frozen=True)
class Suborbit:
    index: int
    points: tuple
    paired: int  # index of the paired suborbit

    @property
    def size(self):
        return len(self.points)

    @property
    def self_paired(self):
        return self.paired == self.index


@dataclass(frozen=True)
class CosetSpace:
    """A transitive action: generator permutations, the base point's
    stabilizer generators, and the suborbit decomposition."""

    n: int
    base: int
    gens: tuple
    stab_gens: tuple
    suborbits: tuple
    labels: tuple = None

    def suborbit_of(self, point):
        return next(s for s in self.suborbits if point in s.points)


def _perm_orbits(n, perms):
    seen = [False] * n
    orbits = []
    for v in range(n):
        if seen[v]:
            continue
        orbit = [v]
        seen[v] = True
        stack = [v]
        while stack:
            x = stack.pop()
            for perm in perms:
                y = perm[x]
                if not seen[y]:
                    seen[y] = True
                    orbit.append(y)
                    stack.append(y)
        orbits.append(tuple(sorted(orbit)))
    return orbits


def _invert(perm):
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return inv


def action_space(n, base, gens, stab_gens, labels=None):
    """Build a CosetSpace: suborbits are the orbits of the stabilizer,
    pairing is found by transporting the base point backwards along a
    word taking base to the suborbit."""
    gens = tuple(tuple(g) for g in gens)
    stab_gens = tuple(tuple(g) for g in stab_gens)
    # breadth-first words from the base point
    prev = {base: None}
    queue = [base]
    while queue:
        x = queue.pop(0)
        for gi, g in enumerate(gens):
            y = g[x]
            if y not in prev:
                prev[y] = (x, gi)
                queue.append(y)
    if len(prev) != n:
        raise ValueError("generators do not act transitively")
    inv_gens = [_invert(g) for g in gens]

    def backward(point):
        word = []
        while prev[point] is not None:
            point, gi = prev[point]
            word.append(gi)
        x = base
        for gi in word:  # word is already innermost-first
            x = inv_gens[gi][x]
        return x

    orbits = sorted(_perm_orbits(n, stab_gens))
    where = {}
    for i, orbit in enumerate(orbits):
        for v in orbit:
            where[v] = i
    subs = []
    for i, orbit in enumerate(orbits):
        subs.append(Suborbit(i, orbit, where[backward(orbit[0])]))
    for s in subs:
        if subs[s.paired].paired != s.index or subs[s.paired].size != s.size:
            raise AssertionError("inconsistent suborbit pairing")
    return CosetSpace(n, base, gens, stab_gens, tuple(subs),
                      None if labels is None else tuple(labels))


def orbital_graph(space, union):
    """Graph whose edge set is the orbit of the edges joining the base
    point to the given suborbits; union must be closed under pairing and
    must not contain the trivial suborbit."""
    idx = sorted({s.index if isinstance(s, Suborbit) else s for s in union})
    subs = [space.suborbits[i] for i in idx]
    for s in subs:
        if s.points == (space.base,):
            raise ValueError("trivial suborbit gives loops, not edges")
        if s.paired not in idx:
            raise ValueError(
                "suborbit %d is not self-paired; include its partner %d"
                % (s.index, s.paired))
    edges = set()
    frontier = []
    for s in subs:
        e = (min(space.base, s.points[0]), max(space.base, s.points[0]))
        if e not in edges:
            edges.add(e)
            frontier.append(e)
    while frontier:
        u, v = frontier.pop()
        for g in space.gens:
            e = (min(g[u], g[v]), max(g[u], g[v]))
            if e not in edges:
                edges.add(e)
                frontier.append(e)
    g = Graph(space.n, sorted(edges))
    want = sum(s.size for s in subs)
    assert g.is_regular() and g.valency() == want
    return g


def suborbit_report(space):
    """Plain-text table of the suborbit decomposition."""
    lines = ["index size self-paired paired-with"]
    for s in space.suborbits:
        lines.append("%d %d %s %d"
                     % (s.index, s.size, "yes" if s.self_paired else "no",
                        s.paired))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Coset spaces of matrix subgroups of PSL(2, p).

def psl2_coset_space(p, subgroup, sub_gens):
    """Action of PSL(2,p) on the right cosets of the given subgroup,
    by right multiplication; points are labelled by their
    lexicographically least canonical matrix."""
    sub = [psl2_canon(h, p) for h in subgroup]
    subset = set(sub)
    for h in sub:
        for k in sub_gens:
            if psl2_mul(h, k, p) not in subset:
                raise ValueError("subgroup is not closed under its generators")
    t = psl2_canon((1, 1, 0, 1), p)
    s = psl2_canon((0, -1, 1, 0), p)
    assign = {}
    reps = []
    queue = [PSL2_ID]
    while queue:
        x = queue.pop(0)
        if x in assign:
            continue
        coset = sorted(psl2_mul(h, x, p) for h in sub)
        i = len(reps)
        reps.append(coset[0])
        for y in coset:
            assign[y] = i
        for g in (t, s):
            y = psl2_mul(coset[0], g, p)
            if y not in assign:
                queue.append(y)
    n = len(reps)
    assert n * len(sub) == p * (p * p - 1) // 2

    def perm_of(g):
        return tuple(assign[psl2_mul(reps[u], g, p)] for u in range(n))

    gens = (perm_of(t), perm_of(s))
    stab = tuple(perm_of(h) for h in sub_gens)
    return action_space(n, 0, gens, stab, labels=tuple(reps))


def alternating_triple_space():
    """The alternating group on 7 letters acting on the 35 unordered
    3-subsets."""
    from itertools import combinations
    labels = list(combinations(range(7), 3))
    idx = {t: i for i, t in enumerate(labels)}
    rot3 = [1, 2, 0, 3, 4, 5, 6]
    rot7 = [(i + 1) % 7 for i in range(7)]

    def induced(pp):
        return tuple(idx[tuple(sorted(pp[x] for x in t))] for t in labels)

    group = {tuple(range(7))}
    frontier = [tuple(range(7))]
    while frontier:
        x = frontier.pop()
        for g in (rot3, rot7):
            y = tuple(g[i] for i in x)
            if y not in group:
                group.add(y)
                frontier.append(y)
    assert len(group) == 2520
    base = set(labels[0])
    stab = [induced(pp) for pp in sorted(group)
            if {pp[0], pp[1], pp[2]} == base]
    return action_space(35, 0, (induced(rot3), induced(rot7)), tuple(stab),
                        labels=tuple(labels))


# ---------------------------------------------------------------------------
# Character model of PSL(2,p) on the cosets of the dihedral subgroup of
# order p-1.  Cosets are identified with the point at infinity plus
# classes of pairs (xi, eta) in F x F* under
# (xi, eta) ~ (1-xi, xi*eta/(xi-1)) for xi not in {0, 1}.

INF = "inf"


def _char_class(xi, eta, p):
    xi %= p
    eta %= p
    if xi in (0, 1):
        return (xi, eta)
    other = ((1 - xi) % p, xi * eta * pow(xi - 1, -1, p) % p)
    return min((xi, eta), other)


def _char(m, p):
    a, b, c, d = m
    if (b == 0 and c == 0) or (a == 0 and d == 0):
        return INF
    if a and b:
        return _char_class(a * d, pow(a, -1, p) * b, p)
    return _char_class(-c * b, pow(c, -1, p) * d, p)


def _char_rep(label, p):
    if label == INF:
        return PSL2_ID
    xi, eta = label
    if xi == 1:
        return psl2_canon((1, eta, 0, 1), p)
    if xi == 0:
        return psl2_canon((1, eta, -pow(eta, -1, p), 0), p)
    return psl2_canon((1, eta, (xi - 1) * pow(eta, -1, p), xi), p)


@dataclass(frozen=True)
class DihedralModel:
    """The dihedral-coset action in character coordinates, with the
    analytic suborbit family, the order-p shift rho, and the
    square-generator scaling sigma."""

    p: int
    space: CosetSpace
    names: dict  # analytic name -> suborbit index
    rho: tuple
    sigma: tuple
    orbits: dict  # x (canonical) or INF -> tuple of points


def _suborbit_names(p):
    """Analytic suborbit family: name -> set of point labels."""
    sq = squares(p)
    half = (p + 1) // 2
    fam = {("trivial",): {INF}}
    fam[("axis", 1)] = {(c, e) for c in (0, 1) for e in sq}
    fam[("axis", -1)] = {(c, e) for c in (0, 1) for e in range(1, p)
                         if e not in sq}
    seen = set()
    for xi in range(2, p):
        if xi in (0, 1) or xi in seen:
            continue
        seen.update({xi, (1 - xi) % p})
        pts = lambda cls: {_char_class(xi, e, p) for e in range(1, p)
                           if classify(e, p) == cls}
        if xi == half:
            fam[("half", 1)] = pts(SQUARE)
            fam[("half", -1)] = pts(NONSQUARE)
        elif classify((pow(xi, -1, p) - 1) % p, p) == NONSQUARE:
            fam[("one", xi)] = pts(SQUARE) | pts(NONSQUARE)
        else:
            fam[("split", xi, 1)] = pts(SQUARE)
            fam[("split", xi, -1)] = pts(NONSQUARE)
    return fam


def dihedral_model(p):
    if p % 4 != 1 or p < 13:
        raise ValueError("need a prime p = 1 (mod 4), p >= 13")
    labels = [INF] + sorted(
        {_char_class(xi, eta, p) for xi in range(p) for eta in range(1, p)})
    assert len(labels) == p * (p + 1) // 2
    index = {lab: i for i, lab in enumerate(labels)}
    reps = [_char_rep(lab, p) for lab in labels]

    def perm_of(m):
        return tuple(index[_char(psl2_mul(r, m, p), p)] for r in reps)

    g0 = min(primitive_roots(p))
    t = psl2_canon((1, 1, 0, 1), p)
    s = psl2_canon((0, -1, 1, 0), p)
    diag = psl2_canon((g0, 0, 0, pow(g0, -1, p)), p)
    rho = perm_of(t)
    z = g0 * g0 % p
    sigma = perm_of(psl2_canon((z, 0, 0, pow(z, -1, p)), p))
    space = action_space(len(labels), 0, (rho, perm_of(s)),
                         (perm_of(diag), perm_of(s)), labels=tuple(labels))
    names = {}
    by_points = {s_.points: s_.index for s_ in space.suborbits}
    for name, pts in _suborbit_names(p).items():
        key = tuple(sorted(index[lab] for lab in pts))
        if key not in by_points:
            raise AssertionError("analytic suborbit %r is not a "
                                 "stabilizer orbit" % (name,))
        names[name] = by_points[key]
    assert len(names) == len(space.suborbits)
    orbits = {}
    for orbit in _perm_orbits(len(labels), [rho]):
        if 0 in orbit:
            orbits[INF] = orbit
        else:
            x = min(e for lab in orbit if lab != 0
                    for e in [labels[lab][1]] if labels[lab][0] == 0)
            orbits[x] = orbit
    return DihedralModel(p, space, names, rho, sigma, orbits)


def dihedral_row_unions(model):
    """All basic self-paired suborbit unions, as (row, xi, indices):
    rows 1-2 full/doubled one-parameter suborbits, rows 3-4 the two
    axis unions, row 5 (resp. 6-7) the doubled (resp. single) halves,
    rows 8-9 single split suborbits."""
    p = model.p
    sq = squares(p)
    out = []
    for name, i in sorted(model.names.items()):
        kind = name[0]
        if kind == "one":
            xi = name[1]
            row = 1 if (xi in sq) != ((xi - 1) % p in sq) else 2
            out.append((row, xi, (i,)))
        elif kind == "axis":
            out.append((3 if name[1] == 1 else 4, None, (i,)))
        elif kind == "half" and name[1] == 1:
            j = model.names[("half", -1)]
            if p % 8 == 5:
                out.append((5, (p + 1) // 2, (i, j)))
            else:
                out.append((6, (p + 1) // 2, (i,)))
                out.append((7, (p + 1) // 2, (j,)))
        elif kind == "split" and name[1] in sq and (name[1] - 1) % p in sq:
            if name[2] == 1:
                out.append((8, name[1], (i,)))
            else:
                out.append((9, name[1], (i,)))
    # row-2 doubled unions: split pairs with xi and xi-1 both nonsquares
    done = set()
    for name, i in sorted(model.names.items()):
        if name[0] != "split" or name[1] in done:
            continue
        xi = name[1]
        if xi not in sq and (xi - 1) % p not in sq:
            done.add(xi)
            out.append((2, xi, (model.names[("split", xi, 1)],
                                model.names[("split", xi, -1)])))
    return sorted(out)


@dataclass(frozen=True)
class RowData:
    """Analytic quotient-multigraph data for one basic union: the
    number of edges inside the infinity block, from it to each block
    V_x, inside each V_y, and between blocks."""

    row: int
    d_inf: int
    d_inf_x: dict
    d_in: dict
    d_cross: dict


def _eta_solutions(p, xi, y, x, want):
    """Distinct shifts j for an edge from the block-V_y base vertex into
    the block V_x, for the one-parameter suborbit with the given class
    filter (SQUARE, NONSQUARE or None for both)."""
    sols = set()
    for disc in ((x + y) ** 2 - 4 * x * y * xi,
                 (x - y) ** 2 + 4 * x * y * xi):
        for r in sqrt_mod(disc, p):
            den = (y + x + r) % p
            if den == 0:
                continue
            eta = (y - 2 * y * y * pow(den, -1, p)) % p
            if eta == 0:
                continue
            if want is not None and classify(eta, p) != want:
                continue
            sols.add((y - x + r) * pow(2, -1, p) % p)
    return sols


def _axis_solutions(p, y, x, want):
    """Distinct shifts j for the axis unions, from the four closed-form
    branches."""
    sols = set()
    cands = []
    if (x - y) % p:
        cands.append((x * y * pow(x - y, -1, p), y - x))
    if (x + y) % p:
        cands.append((x * y * pow(x + y, -1, p), y))
    cands.append((y * (x + y) * pow(x, -1, p), -x))
    cands.append((y * (x - y) * pow(x, -1, p), 0))
    for eta, j in cands:
        if eta % p and classify(eta, p) == want:
            sols.add(j % p)
    return sols


def dihedral_row_data(model, row, xi=None):
    p = model.p
    sq = squares(p)
    half = (p - 1) // 2
    xs = sorted(x for x in model.orbits if x != INF)
    if row in (3, 4):
        want = SQUARE if row == 3 else NONSQUARE
        d_inf = half
        d_inf_x = {x: 2 if (x in sq) == (row == 3) else 0 for x in xs}
        d_in = {y: len(_axis_solutions(p, y, y, want)) for y in xs}
        d_cross = {(y, x): len(_axis_solutions(p, y, x, want))
                   for y in xs for x in xs if y < x}
    else:
        want = {1: None, 2: None, 5: None, 6: SQUARE, 7: NONSQUARE,
                8: SQUARE, 9: NONSQUARE}[row]
        d_inf = 0
        if row in (1, 2, 5):
            d_inf_x = {x: 2 if row in (1, 2) else 1 for x in xs}
        else:
            one = 1 if row in (6, 7) else 2
            cls = SQUARE if row in (6, 8) else NONSQUARE
            d_inf_x = {x: one if classify(x, p) == cls else 0 for x in xs}
        d_in = {y: len(_eta_solutions(p, xi, y, y, want)) for y in xs}
        d_cross = {(y, x): len(_eta_solutions(p, xi, y, x, want))
                   for y in xs for x in xs if y < x}
    return RowData(row, d_inf, d_inf_x, d_in, d_cross)


def empirical_row_data(model, row, union, quot=None):
    """The same quotient data read off the constructed orbital graph."""
    from .quotients import quotient
    if quot is None:
        g = orbital_graph(model.space, union)
        quot = quotient(g, list(model.rho))
    block_of = {}
    for x, orbit in model.orbits.items():
        for v in orbit:
            block_of[v] = x
    bidx = {}
    for a, orbit in enumerate(quot.orbits):
        bidx[block_of[orbit[0]]] = a
    xs = sorted(x for x in model.orbits if x != INF)
    return RowData(
        row,
        quot.d_in[bidx[INF]],
        {x: quot.d(bidx[INF], bidx[x]) for x in xs},
        {y: quot.d_in[bidx[y]] for y in xs},
        {(y, x): quot.d(bidx[y], bidx[x]) for y in xs for x in xs if y < x},
    )


def split_edge_table(p):
    """For every xi with xi and xi-1 squares (or zero), the primitive
    roots t where t^4 +- 2(1-2 xi) t^2 + 1 is a square or zero, and
    those where additionally the corresponding eta values are squares.

    Returns {xi: (plus, plus_good, minus, minus_good)} as frozensets.
    """
    sq = squares(p)
    sq0 = sq | {0}
    roots = sorted(primitive_roots(p))
    table = {}
    for xi in sorted(x for x in sq0 if x in sq0 and (x - 1) % p in sq0):
        if xi in (0, 1):
            continue
        row = []
        for sign in (1, -1):
            disc = lambda t: (pow(t, 4, p) + sign * 2 * (1 - 2 * xi) * t * t
                              + 1) % p
            tset = frozenset(t for t in roots if disc(t) in sq0)
            good = set()
            for t in tset:
                x = t * t % p
                for r in sqrt_mod(disc(t), p):
                    for rr in {r, p - r}:
                        den = (1 + x + rr) % p
                        if den == 0:
                            continue
                        eta = (1 - 2 * pow(den, -1, p)) % p
                        if eta in sq:
                            good.add(t)
            row += [tset, frozenset(good)]
        table[xi] = tuple(row)
    return table


# ---------------------------------------------------------------------------
# Quadric-point model of PSL(2,q^2) on the cosets of PGL(2,q):
# projective points <x> with Q(x) = x1 x2 - x3^2 + theta x4^2 a square.

def _pick_theta(q):
    """Smallest nonsquare that generates F_q*."""
    sq = squares(q)
    prim = primitive_roots(q)
    return min(x for x in prim if x not in sq)


class QuadExt:
    """F_{q^2} = F_q(alpha) with alpha^2 = theta; elements are (c, d)
    pairs standing for c + d*alpha."""

    def __init__(self, q, theta):
        self.q = q
        self.theta = theta

    def mul(self, a, b):
        q, th = self.q, self.theta
        return ((a[0] * b[0] + th * a[1] * b[1]) % q,
                (a[0] * b[1] + a[1] * b[0]) % q)

    def add(self, a, b):
        return ((a[0] + b[0]) % self.q, (a[1] + b[1]) % self.q)

    def conj(self, a):
        return (a[0], (-a[1]) % self.q)

    def inv(self, a):
        n = (a[0] * a[0] - self.theta * a[1] * a[1]) % self.q
        ni = pow(n, -1, self.q)
        return (a[0] * ni % self.q, (-a[1]) * ni % self.q)


@dataclass(frozen=True)
class OmegaModel:
    """The action on nonsingular projective points of the quadric, with
    the order-q shift rho, its normalizer generators, the suborbit
    family indexed by the half form value, and the rho-block split into
    inner (x2 = 0) and outer blocks."""

    q: int
    p: int
    theta: int
    points: tuple
    base: int
    lam_of: tuple
    suborbits: dict  # lam -> tuple of points (base excluded)
    blocks: tuple
    inner_blocks: tuple
    outer_blocks: tuple
    rho: tuple
    norm_gens: tuple

    @property
    def index(self):
        return {x: i for i, x in enumerate(self.points)}


def _form(x, y, q, theta):
    return (x[1] * y[0] + x[0] * y[1] - 2 * x[2] * y[2]
            + 2 * theta * x[3] * y[3]) % q


def _canon_point(x, q):
    neg = tuple((-c) % q for c in x)
    return min(x, neg)


def tensor_matrix(g, q, theta):
    """4x4 matrix over F_q for the action of g in SL(2, q^2) on the
    fixed symmetric-tensor basis; entries of g are QuadExt pairs."""
    f = QuadExt(q, theta)
    (a, b), (c, d) = (g[0], g[1]), (g[2], g[3])
    img1 = (a, c)  # w1 g = a w1 + c w2
    img2 = (b, d)
    cimg1 = tuple(f.conj(t) for t in img1)
    cimg2 = tuple(f.conj(t) for t in img2)
    inv2 = pow(2, -1, q)
    alpha_inv = (0, pow(theta, -1, q))

    def image(coeffs):
        # coeffs: dict (j,k) -> QuadExt coefficient of w_j (x) w_k
        out = {}
        for (j, k), cf in coeffs.items():
            left = img1 if j == 0 else img2
            right = cimg1 if k == 0 else cimg2
            for m in range(2):
                for n in range(2):
                    t = f.mul(cf, f.mul(left[m], right[n]))
                    out[(m, n)] = f.add(out.get((m, n), (0, 0)), t)
        c11, c22 = out.get((0, 0), (0, 0)), out.get((1, 1), (0, 0))
        c12, c21 = out.get((0, 1), (0, 0)), out.get((1, 0), (0, 0))
        x3 = tuple(v * inv2 % q for v in f.add(c12, tuple((-t) % q
                                                          for t in c21)))
        s3 = f.add(c12, c21)
        row = (c11, c22, tuple(v * inv2 % q for v in s3),
               f.mul(x3, alpha_inv))
        assert all(v[1] == 0 for v in row), "image left the base field"
        return tuple(v[0] for v in row)

    alpha = (0, 1)
    rows = [image({(0, 0): (1, 0)}),
            image({(1, 1): (1, 0)}),
            image({(0, 1): (1, 0), (1, 0): (1, 0)}),
            image({(0, 1): alpha, (1, 0): tuple((-t) % q for t in alpha)})]
    return tuple(rows)


def _apply_matrix(x, m, q):
    return tuple(sum(x[i] * m[i][j] for i in range(4)) % q for j in range(4))


def omega_model(q):
    p = (q * q + 1) // 2
    if q < 5 or not is_prime(q) or not is_prime(p):
        raise ValueError("need an odd prime q >= 5 with (q^2+1)/2 prime")
    theta = _pick_theta(q)
    pts = set()
    for x1 in range(q):
        for x2 in range(q):
            for x3 in range(q):
                for x4 in range(q):
                    x = (x1, x2, x3, x4)
                    if (x1 * x2 - x3 * x3 + theta * x4 * x4) % q == 1:
                        pts.add(_canon_point(x, q))
    points = tuple(sorted(pts))
    assert len(points) == p * q
    index = {x: i for i, x in enumerate(points)}
    base = index[(1, 1, 0, 0)]
    vbase = points[base]
    inv2 = pow(2, -1, q)
    lam_of = []
    for x in points:
        lam = _form(x, vbase, q, theta) * inv2 % q
        lam_of.append(min(lam, q - lam))
    suborbits = {}
    for i, lam in enumerate(lam_of):
        if i != base:
            suborbits.setdefault(lam, []).append(i)
    suborbits = {lam: tuple(v) for lam, v in suborbits.items()}

    def perm_of(g):
        m = tensor_matrix(g, q, theta)
        return tuple(index[_canon_point(_apply_matrix(x, m, q), q)]
                     for x in points)

    one, zero, alpha = (1, 0), (0, 0), (0, 1)
    rho = perm_of((one, one, zero, one))
    delta = perm_of((alpha, zero, zero, QuadExt(q, theta).inv(alpha)))
    tau = perm_of((one, alpha, zero, one))
    blocks = tuple(_perm_orbits(len(points), [rho]))
    inner = tuple(a for a, blk in enumerate(blocks)
                  if all(points[v][1] == 0 for v in blk))
    outer = tuple(a for a in range(len(blocks)) if a not in inner)
    assert len(inner) == (q + 1) // 2 and len(outer) == q * (q - 1) // 2
    return OmegaModel(q, p, theta, points, base, tuple(lam_of), suborbits,
                      blocks, inner, outer, rho, (delta, tau, rho))


def omega_graph(model, lam):
    """Orbital graph for the suborbit with half form value +-lam."""
    q, theta = model.q, model.theta
    if lam not in model.suborbits:
        raise ValueError("no suborbit with value %r" % (lam,))
    n = len(model.points)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            v = _form(model.points[i], model.points[j], q, theta)
            h = v * pow(2, -1, q) % q
            if min(h, q - h) == lam:
                edges.append((i, j))
    return Graph(n, edges)


@dataclass(frozen=True)
class OmegaBlockStats:
    eps: int
    inner_valency: dict  # d inside each outer block
    cross: dict  # (inner block, outer block) -> d
    outer_singles: int  # outer blocks joined to a fixed one by d = 1
    outer_doubles: int  # ... by d = 2


def omega_block_valencies(model, lam):
    from .quotients import quotient
    g = omega_graph(model, lam)
    quot = quotient(g, list(model.rho))
    order = {v: a for a, blk in enumerate(quot.orbits) for v in blk}
    remap = [order[blk[0]] for blk in model.blocks]
    inner = [remap[a] for a in model.inner_blocks]
    outer = [remap[a] for a in model.outer_blocks]
    q = model.q
    eps = 2 if q % 8 in (1, 3) else 0
    inner_val = {a: quot.d_in[a] for a in outer}
    cross = {(a, b): quot.d(a, b) for a in inner for b in outer}
    b0 = outer[0]
    singles = sum(1 for b in outer if b != b0 and quot.d(b0, b) == 1)
    doubles = sum(1 for b in outer if b != b0 and quot.d(b0, b) == 2)
    return OmegaBlockStats(eps, inner_val, cross, singles, doubles)
