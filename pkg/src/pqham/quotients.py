"""Semiregular automorphisms, orbit quotient multigraphs, the orbit
symbol matrix, cycle lifting through cyclic voltages, and isolate
stitching for quotient Hamilton cycles."""

from dataclasses import dataclass

from .field import is_prime
from .graphs import Graph, Multigraph


def is_automorphism(g, perm):
    if sorted(perm) != list(range(g.n)):
        return False
    return all(g.has_edge(perm[u], perm[v]) for u, v in g.edges())


def permutation_orbits(perm):
    """Cycles of perm, each listed from its lowest vertex by successive
    application; cycles ordered by lowest vertex."""
    n = len(perm)
    seen = [False] * n
    out = []
    for v in range(n):
        if seen[v]:
            continue
        orb = [v]
        seen[v] = True
        w = perm[v]
        while w != v:
            seen[w] = True
            orb.append(w)
            w = perm[w]
        out.append(orb)
    return out


def verify_semiregular(g, perm):
    """(m, n) when perm is a g-automorphism whose cycles all share one
    length n >= 2; None otherwise."""
    if not is_automorphism(g, perm):
        return None
    orbs = permutation_orbits(perm)
    lengths = {len(o) for o in orbs}
    if len(lengths) != 1:
        return None
    n = lengths.pop()
    if n < 2:
        return None
    return len(orbs), n


@dataclass(frozen=True)
class Quotient:
    """Orbit quotient of a graph under a semiregular automorphism."""
    graph: Multigraph          # d(A,B) multiplicities, d(A)//2 loops
    orbits: tuple              # m tuples of length n
    d_in: tuple                # d(A): valency inside each orbit

    @property
    def m(self):
        return len(self.orbits)

    @property
    def n(self):
        return len(self.orbits[0])

    def d(self, a, b):
        if a == b:
            return self.d_in[a]
        return self.graph.multiplicity(a, b)


def quotient(g, perm):
    """Quotient multigraph on the orbits of a verified semiregular perm:
    orbits A,B joined by d(A,B) parallel edges, d(A) recorded per orbit."""
    mn = verify_semiregular(g, perm)
    if mn is None:
        raise ValueError("permutation is not semiregular on the graph")
    orbs = permutation_orbits(perm)
    owner = {}
    for a, orb in enumerate(orbs):
        for v in orb:
            owner[v] = a
    m = len(orbs)
    d_in = [0] * m
    mult = {}
    for a, orb in enumerate(orbs):
        u = orb[0]
        for w in g.adjacency[u]:
            b = owner[w]
            if b == a:
                d_in[a] += 1
            elif a < b:
                mult[(a, b)] = mult.get((a, b), 0) + 1
    loops = {a: d_in[a] // 2 for a in range(m) if d_in[a]}
    return Quotient(Multigraph(m, mult, loops), tuple(map(tuple, orbs)),
                    tuple(d_in))


@dataclass(frozen=True)
class Symbol:
    """m x m array S[i][j] = {t : u_i ~ perm^t(u_j)} over Z_n, with the
    base vertex u_i of each orbit."""
    n: int
    bases: tuple
    sets: tuple  # tuple of tuples of frozensets

    @property
    def m(self):
        return len(self.bases)


def symbol(g, perm, bases=None):
    """Orbit symbol of g relative to perm; bases default to the lowest
    vertex of each orbit."""
    mn = verify_semiregular(g, perm)
    if mn is None:
        raise ValueError("permutation is not semiregular on the graph")
    m, n = mn
    orbs = permutation_orbits(perm)
    if bases is None:
        bases = [o[0] for o in orbs]
    if len(bases) != m:
        raise ValueError("need one base vertex per orbit")
    # reorder each orbit to start at its base
    pos = {}
    ordered = []
    for orb in orbs:
        base = next(b for b in bases if b in orb)
        i = orb.index(base)
        ordered.append(orb[i:] + orb[:i])
    order = sorted(range(m), key=lambda a: bases.index(ordered[a][0]))
    ordered = [ordered[a] for a in order]
    if [o[0] for o in ordered] != list(bases):
        raise ValueError("base vertices must cover all orbits")
    for orb in ordered:
        for t, v in enumerate(orb):
            pos[v] = (ordered.index(orb), t)
    sets = [[set() for _ in range(m)] for _ in range(m)]
    for i, orb in enumerate(ordered):
        u = orb[0]
        for w in g.adjacency[u]:
            j, t = pos[w]
            sets[i][j].add(t)
    return Symbol(n, tuple(bases),
                  tuple(tuple(frozenset(s) for s in row) for row in sets))


def graph_from_symbol(sym):
    """Graph on m*n vertices (orbit i position a at i*n+a) realizing the
    symbol; round-trips to an isomorphic copy of the source graph."""
    m, n = sym.m, sym.n
    edges = set()
    for i in range(m):
        for j in range(m):
            for t in sym.sets[i][j]:
                for a in range(n):
                    u = i * n + a
                    v = j * n + (a + t) % n
                    if u != v:
                        edges.add((min(u, v), max(u, v)))
    return Graph(m * n, sorted(edges))


def format_symbol(sym):
    """Plain-text matrix with voltage sets in braces."""
    cells = [["{" + ",".join(map(str, sorted(s))) + "}" if s else "{}"
              for s in row] for row in sym.sets]
    w = max(len(c) for row in cells for c in row)
    return "\n".join("  ".join(c.rjust(w) for c in row) for row in cells)


@dataclass(frozen=True)
class LiftOutcome:
    """Result of lifting a quotient cycle: a full cycle of length k*n,
    or n disjoint k-cycles."""
    full: bool
    cycle: tuple        # vertex sequence when full, else one k-cycle
    piece_count: int    # 1 when full, else n


def lift_closed_walk(g, perm, walk):
    """Lift a quotient cycle (orbit indices, each visited once) through
    the voltages of perm's symbol. Requires prime orbit length."""
    mn = verify_semiregular(g, perm)
    if mn is None:
        raise ValueError("permutation is not semiregular on the graph")
    m, n = mn
    if not is_prime(n):
        raise ValueError("orbit length must be prime")
    k = len(walk)
    if k < 2 or len(set(walk)) != k:
        raise ValueError("walk must be a cycle visiting each orbit once")
    sym = symbol(g, perm)
    steps = [(walk[i], walk[(i + 1) % k]) for i in range(k)]
    volts = [sym.sets[a][b] for a, b in steps]
    if any(not s for s in volts):
        raise ValueError("walk uses an absent quotient edge")
    if k == 2 and len(volts[0]) < 2:
        raise ValueError("a 2-cycle in the quotient needs a double edge")
    choice = [min(s) for s in volts]
    if k == 2:
        # the two steps traverse distinct parallel edges
        a = min(volts[0])
        back = [t for t in volts[1] if t != (-a) % n]
        if not back:
            choice = None
        else:
            choice[1] = min(back)
    if choice is not None and sum(choice) % n == 0:
        choice = None
        for i, s in enumerate(volts):
            base = [min(v) for v in volts]
            alts = [t for t in s if t != base[i]]
            if k == 2 and i == 1:
                alts = [t for t in alts if t != (-base[0]) % n]
            for t in alts:
                base[i] = t
                if sum(base) % n != 0:
                    choice = base
                    break
            if choice:
                break
    orbs = [list(o) for o in permutation_orbits(perm)]
    if choice is None:
        t0 = [min(s) for s in volts]
        piece = []
        a = 0
        for i in range(k):
            piece.append(orbs[walk[i]][a % n])
            a += t0[i]
        return LiftOutcome(False, tuple(piece), n)
    cyc = []
    a = 0
    for _ in range(n):
        for i in range(k):
            cyc.append(orbs[walk[i]][a % n])
            a = (a + choice[i]) % n
    return LiftOutcome(True, tuple(cyc), 1)


def stitch_isolates(q, cycle, isolates, second=None):
    """Extend quotient cycle(s) to a Hamilton cycle of the quotient by
    absorbing isolated vertices, each adjacent to every cycle vertex.
    With two cycles, two isolates splice the components together."""
    cyc_vertices = list(cycle) + (list(second) if second else [])
    for w in isolates:
        for v in cyc_vertices:
            if q.d(w, v) == 0:
                raise ValueError("isolate %d not adjacent to %d" % (w, v))
    isolates = list(isolates)
    if second is not None:
        if len(isolates) < 2:
            raise ValueError("two components need at least 2 isolates")
        w1, w2 = isolates[0], isolates[1]
        merged = [w1] + list(cycle) + [w2] + list(second)
        rest = isolates[2:]
    else:
        merged = list(cycle)
        rest = isolates
    # absorb each remaining isolate by replacing one cycle edge with a
    # 2-path; only edges whose endpoints are both original cycle vertices
    out = list(merged)
    slots = [i for i in range(len(out))
             if out[i] in cyc_vertices and out[(i + 1) % len(out)] in cyc_vertices]
    if len(rest) > len(slots):
        raise ValueError("not enough cycle edges to absorb the isolates")
    for w, i in zip(rest, reversed(slots[: len(rest)])):
        out.insert(i + 1, w)
    return out


def semiregular_isomorphism(g, perm_g, h, perm_h):
    """An isomorphism g -> h carrying perm_g to a power of perm_h, as a
    vertex list, or None.  Both permutations must be semiregular with the
    same orbit shape; the search runs over orbit bijections, base offsets
    and the conjugating exponent, which is fast even when a generic
    isomorphism search is not."""
    mg = verify_semiregular(g, perm_g)
    mh = verify_semiregular(h, perm_h)
    if mg is None or mh is None:
        raise ValueError("both permutations must be semiregular")
    if mg != mh or g.edge_count != h.edge_count:
        return None
    m, n = mg
    gorbs = [list(o) for o in permutation_orbits(perm_g)]
    horbs = [list(o) for o in permutation_orbits(perm_h)]

    def compatible(phi, orbit, jmap):
        # phi maps gorbs[i][t] -> horbs[j][(s + lam*t) % n]; check all
        # adjacencies between the new orbit and the mapped ones
        for i2 in jmap:
            o2 = gorbs[i2]
            for t, u in enumerate(gorbs[orbit]):
                pu = phi[u]
                for t2, v in enumerate(o2):
                    if v == u:
                        continue
                    if g.has_edge(u, v) != h.has_edge(pu, phi[v]):
                        return False
        return True

    for lam in range(1, n):
        phi = {}
        jmap = {}
        used = set()

        def rec(i):
            if i == m:
                return True
            for j in range(m):
                if j in used:
                    continue
                for s in range(n):
                    for t, u in enumerate(gorbs[i]):
                        phi[u] = horbs[j][(s + lam * t) % n]
                    jmap[i] = j
                    used.add(j)
                    if compatible(phi, i, jmap) and rec(i + 1):
                        return True
                    del jmap[i]
                    used.remove(j)
            for u in gorbs[i]:
                phi.pop(u, None)
            return False

        if rec(0):
            return [phi[v] for v in range(g.n)]
    return None


def verify_quotient_cycle(q, cycle):
    """True iff cycle is a Hamilton cycle of the quotient multigraph."""
    m = q.m
    if len(cycle) != m or len(set(cycle)) != m:
        return False
    return all(q.d(cycle[i], cycle[(i + 1) % m]) >= 1 for i in range(m))
