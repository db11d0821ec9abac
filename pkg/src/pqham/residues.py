"""Prime-sequence inequality machinery: the d/c/k sequence functions, the
coprime-split inequalities, the exceptional-sequence table with its bounds,
and the even-quartic primitive-root exception sets."""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, prod

from .field import classify, is_prime, prime_factors, primitive_roots, squares

SEARCH_CEILING = 10**6


def _check_sequence(seq):
    seq = tuple(seq)
    if not seq or seq[0] != 2 or list(seq) != sorted(set(seq)):
        raise ValueError("need strictly increasing primes starting at 2: %r" % (seq,))
    for q in seq:
        if not is_prime(q):
            raise ValueError("not prime: %d" % q)
    return seq


def d_fn(n, m, seq):
    """2 * prod_{j=n..m} (1 - 1/q_j), exact."""
    seq = _check_sequence(seq)
    if not 1 <= n <= m <= len(seq):
        raise IndexError("need 1 <= n <= m <= %d" % len(seq))
    out = Fraction(2)
    for q in seq[n - 1 : m]:
        out *= Fraction(q - 1, q)
    return out


def c_fn(r, n, m, seq):
    """2r * sqrt(q_1...q_{n-1} / (q_n...q_m))."""
    seq = _check_sequence(seq)
    if not 1 <= n <= m <= len(seq):
        raise IndexError("need 1 <= n <= m <= %d" % len(seq))
    num = prod(seq[: n - 1])
    den = prod(seq[n - 1 : m])
    return 2 * r * (num / den) ** 0.5


def _d_gt_one(seq, n, m):
    # d(n,m) > 1 with empty products (n > m) giving d = 2
    a = b = 1
    for q in seq[n - 1 : m]:
        a *= q - 1
        b *= q
    return 2 * a > b


def k_of(seq):
    """The unique k >= 2 with d(k-1,m) <= 1 < d(k,m)."""
    seq = _check_sequence(seq)
    m = len(seq)
    for k in range(2, m + 2):
        if not _d_gt_one(seq, k - 1, m) and _d_gt_one(seq, k, m):
            return k
    raise AssertionError("no threshold index for %r" % (seq,))


def _ineq_holds(a, b, c, d, x):
    # a/b > 1 + c*sqrt(x)/(x-1) + d/(x-1), exactly, for integer x >= 2
    lhs = (a - b) * (x - 1) - b * d
    return lhs > 0 and lhs * lhs > b * b * c * c * x


def eq_k_holds(s, t_primes, x):
    """The threshold inequality 2*phi(t)/t > 1 + 2(2s-1)*sqrt(x)/(x-1)
    + (4s+2)/(x-1) at integer x, with t squarefree of the given primes."""
    a = 2 * prod(q - 1 for q in t_primes)
    b = prod(t_primes)
    return _ineq_holds(a, b, 4 * s - 2, 4 * s + 2, x)


def alpha1_holds(s, t_primes, radical):
    """The split inequality with sqrt(st+1)/st, i.e. the threshold
    inequality evaluated at x = radical + 1."""
    return eq_k_holds(s, t_primes, radical + 1)


def corollary1_holds(s, t, p, r=4):
    """2*phi(t)/t > 1 + (rs-2)sqrt(p)/(p-1) + (rs+2)/(p-1) for a valid
    coprime split s,t of the prime support of p-1."""
    if gcd(s, t) != 1:
        raise ValueError("s and t must be coprime")
    if set(prime_factors(s * t)) != set(prime_factors(p - 1)):
        raise ValueError("prime support of s*t must equal that of p-1")
    tp = prime_factors(t) if t > 1 else []
    a = 2 * prod(q - 1 for q in tp)
    b = prod(tp)
    return _ineq_holds(a, b, r * s - 2, r * s + 2, p)


def find_split(p):
    """A split s = q_1...q_n, t = q_{n+1}...q_m of the prime support of
    p-1 satisfying corollary1_holds, or None."""
    seq = prime_factors(p - 1)
    m = len(seq)
    for n in range(m + 1):
        s = prod(seq[:n])
        t = prod(seq[n:])
        if corollary1_holds(s, t, p):
            return s, t
    return None


def bound_for_split(s, t_primes, ceiling=SEARCH_CEILING):
    """Smallest integer k such that the threshold inequality holds for
    every integer x >= k (None if it still fails at the ceiling, or if
    it can never hold)."""
    a = 2 * prod(q - 1 for q in t_primes)
    b = prod(t_primes)
    if a <= b:  # left side at most 1: can never hold
        return None
    if not eq_k_holds(s, t_primes, ceiling):
        return None
    lo, hi = 2, ceiling  # invariant: holds at hi
    if eq_k_holds(s, t_primes, lo):
        return lo
    # largest failing x is in [lo, hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if eq_k_holds(s, t_primes, mid):
            hi = mid
        else:
            lo = mid
    return lo + 1


TYPE_LAST_TWO = "1"
TYPE_LAST_ONE = "2"
TYPE_EMPTY = "3"


@dataclass(frozen=True)
class BoundRecord:
    sequence: tuple
    bound_k: int
    split_s: int
    split_t: int
    primes: tuple
    filtered_primes: tuple  # p = 1 mod 4 with (p+1)/2 prime

    @property
    def split_type(self):
        m = len(self.sequence)
        last = prod(self.sequence[m - 1 :])
        last_two = prod(self.sequence[m - 2 :]) if m >= 2 else None
        if self.split_t == 1:
            return TYPE_EMPTY
        if self.split_t == last:
            return TYPE_LAST_ONE
        if self.split_t == last_two:
            return TYPE_LAST_TWO
        return "t=%d" % self.split_t


def is_exceptional(seq):
    """True when no prefix split satisfies the radical-form inequality."""
    seq = _check_sequence(seq)
    radical = prod(seq)
    m = len(seq)
    return not any(
        alpha1_holds(prod(seq[:n]), seq[n:], radical) for n in range(m + 1)
    )


def shape_candidates(qm_cap=131):
    """All strictly increasing prime sequences starting at 2 with
    q_m < qm_cap that can satisfy m <= 2k(m)+1: the threshold index
    analysis caps the shapes at m<=5 (any tail), m<=7 starting 2,3 or
    2,5, and m=9 starting 2,3,5."""
    pool = [q for q in range(3, qm_cap) if is_prime(q)]
    seen = set()
    for r in range(5):
        for tail in itertools.combinations(pool, r):
            seen.add((2,) + tail)
    for start, extra in (((2, 3), 5), ((2, 5), 5), ((2, 3, 5), 6)):
        rest = [q for q in pool if q > start[-1]]
        rng = range(extra, extra + 1) if start == (2, 3, 5) else range(extra + 1)
        for r in rng:
            for tail in itertools.combinations(rest, r):
                seen.add(start + tail)
    return sorted(seen)


def _primes_with_radical(seq, bound):
    """Primes p <= bound with prime support of p-1 exactly seq."""
    out = []

    def rec(i, acc):
        if i == len(seq):
            p = acc + 1
            if p <= bound and is_prime(p):
                out.append(p)
            return
        q = seq[i]
        acc *= q
        while acc + 1 <= bound:
            rec(i + 1, acc)
            acc *= q

    rec(0, 1)
    return tuple(sorted(out))


def exceptional_table(qm_cap=131, ceiling=SEARCH_CEILING):
    """The exceptional sequences with their threshold bounds, winning
    split, and qualifying prime lists; sorted by sequence."""
    records = []
    for seq in shape_candidates(qm_cap):
        m = len(seq)
        if m > 2 * k_of(seq) + 1:
            continue
        if not is_exceptional(seq):
            continue
        best = None  # (k, -n) so ties prefer the shorter t
        for n in range(m + 1):
            k = bound_for_split(prod(seq[:n]), seq[n:], ceiling)
            if k is not None and (best is None or (k, -n) < best[:2]):
                best = (k, -n, prod(seq[:n]), prod(seq[n:]))
        if best is None:
            raise AssertionError(
                "no split of %r reaches the threshold below %d" % (seq, ceiling)
            )
        k, _, s, t = best
        primes = _primes_with_radical(seq, k)
        filtered = tuple(
            p for p in primes if p % 4 == 1 and is_prime((p + 1) // 2)
        )
        records.append(BoundRecord(seq, k, s, t, primes, filtered))
    return records


def render_table(records, fmt="text"):
    """Aligned text or semicolon-csv rendering of the bound records."""
    rows = [
        (
            ",".join(str(q) for q in r.sequence),
            str(r.bound_k),
            r.split_type,
            ",".join(str(p) for p in r.primes) or "no",
            ",".join(str(p) for p in r.filtered_primes) or "no",
        )
        for r in records
    ]
    header = ("sequence", "k", "type", "p<=k", "p=1(4), (p+1)/2 prime")
    if fmt == "csv":
        return "\n".join(";".join(row) for row in [header] + rows)
    widths = [max(len(row[i]) for row in [header] + rows) for i in range(5)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
             for row in [header] + rows]
    return "\n".join(lines)


def primitive_square_witness(c4, c2, c0, p):
    """Smallest primitive root b with c4*b^4 + c2*b^2 + c0 a square or
    zero mod p; None if there is none."""
    if c0 % p == 0:
        raise ValueError("constant term must be nonzero")
    sq = squares(p)
    for b in sorted(primitive_roots(p)):
        v = (c4 * b**4 + c2 * b**2 + c0) % p
        if v == 0 or v in sq:
            return b
    return None


def quartic_exceptions(p):
    """All k for which b^4 + k*b^2 + 1 is a non-square at every
    primitive root b."""
    sq = squares(p)
    roots = sorted(primitive_roots(p))
    pows = [(b * b % p, pow(b, 4, p)) for b in roots]
    out = set()
    for k in range(p):
        if not any((b4 + k * b2 + 1) % p in sq or (b4 + k * b2 + 1) % p == 0
                   for b2, b4 in pows):
            out.add(k)
    return out


def exceptional_xi(p, k, conjugate=False):
    """The element xi with k = 2(1-2*xi) (or k = -2(1-2*xi) when
    conjugate) provided xi lands in S* cap S*+1; None otherwise."""
    inv4 = pow(4, p - 2, p)
    xi = (2 - k) * inv4 % p if not conjugate else (2 + k) * inv4 % p
    sq = squares(p)
    if xi in sq and (xi - 1) % p in sq:
        return xi
    return None
