"""Dualities of the minuscule geometries.

Three support-level symmetries, each expressed purely in terms of weight
arithmetic on a standard representation:

  * the order-2 duality of the 27-weight geometry (E6 with beta = 1),
    realized by intersecting hyperlines or by a brace-closure filter;
  * triality on the D4 vector weights, realized by an 8x8 partial product
    whose nonzero entries follow the two diagram rotations;
  * the chirality swap of D_n, an honest coordinate involution.

All maps act on supports (finite sets of weights); every structural claim
is re-verified on the spot and a mismatch raises ConsistencyError.
"""

from __future__ import annotations

from .geometry import Geometry, translate_support
from .rootsystem import ConsistencyError, RootSystem


def wprime_orbits(rs, removed, weights):
    """Orbits on `weights` of the reflections s_i with i != removed.

    Returns a list of tuples, each sorted descending, the list sorted by
    (size, first element).
    """
    gens = [i for i in range(1, rs.rank + 1) if i != removed]
    left = set(weights)
    orbits = []
    while left:
        seed = next(iter(left))
        orbit = {seed}
        frontier = [seed]
        while frontier:
            new = []
            for w in frontier:
                for i in gens:
                    v = rs.reflect(i, w)
                    if v not in orbit:
                        orbit.add(v)
                        new.append(v)
            frontier = new
        left -= orbit
        orbits.append(tuple(sorted(orbit, reverse=True)))
    orbits.sort(key=lambda o: (len(o), o[0]))
    return orbits


def zero_sum_triple_orbits(rs, s1, s2, s3):
    """All (w1, w2, w3) in s1 x s2 x s3 with w1 + w2 + w3 = 0, plus their
    orbits under the diagonal Weyl action.  Returns (triples, orbits)."""
    set3 = set(s3)
    triples = []
    for a in s1:
        for b in s2:
            c = tuple(-x - y for x, y in zip(a, b))
            if c in set3:
                triples.append((a, b, c))
    triples.sort()
    left = set(triples)
    orbits = []
    while left:
        seed = next(iter(left))
        orbit = {seed}
        frontier = [seed]
        while frontier:
            new = []
            for t in frontier:
                for i in range(1, rs.rank + 1):
                    u = tuple(rs.reflect(i, w) for w in t)
                    if u not in orbit:
                        if u not in left and u not in {x for o in orbits
                                                       for x in o}:
                            raise ConsistencyError("orbit left the triple set")
                        orbit.add(u)
                        new.append(u)
            frontier = new
        left -= orbit
        orbits.append(tuple(sorted(orbit)))
    orbits.sort(key=lambda o: (len(o), o[0]))
    return triples, orbits


def chamber_automorphism_check(geometry, index_map, op):
    """Check that op is a chamber automorphism twisted by index_map.

    op(delta, support) -> (new_delta, new_support) must send the standard
    delta-space to the standard index_map[delta]-space, and must intertwine
    the simple reflections: op(delta, s_i S) = s_{index_map[i]} op(delta, S).
    """
    rs = geometry.rs
    rng = range(1, rs.rank + 1)
    supp = {d: geometry.delta_space(d).support for d in rng}
    for d in rng:
        d2, img = op(d, supp[d])
        if d2 != index_map[d] or img != supp[index_map[d]]:
            return False
    for d in rng:
        _, base = op(d, supp[d])
        for i in rng:
            d2, img = op(d, translate_support(rs, i, supp[d]))
            want = translate_support(rs, index_map[i], base)
            if d2 != index_map[d] or img != want:
                return False
    return True


def dn_swap_automorphism(geometry):
    """Chirality swap of a D_n geometry: exchange the two fork nodes.

    Returns (index_map, op) for chamber_automorphism_check.
    """
    n = geometry.rs.rank
    index_map = {d: d for d in range(1, n + 1)}
    index_map[n - 1], index_map[n] = n, n - 1

    def swap(w):
        return w[:n - 2] + (w[n - 1], w[n - 2])

    def op(delta, support):
        return index_map[delta], frozenset(swap(w) for w in support)

    return index_map, op


class E6Duality:
    """Order-2 duality on supports in the 27-weight geometry."""

    PHI = {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}

    def __init__(self):
        self.rs = RootSystem.named("E6")
        self.geometry = Geometry(self.rs, 1)
        self.weights = self.geometry.weights
        self._hyperlines = {}
        self._orbits = None

    @staticmethod
    def phi_index(i):
        return E6Duality.PHI[i]

    @staticmethod
    def phi_weight(c):
        return (c[5], c[1], c[4], c[3], c[2], c[0])

    def standard_support(self, delta):
        return self.geometry.delta_space(delta).support

    def sharp_support(self, s1, s2):
        out = set()
        for a in s1:
            for b in s2:
                w = self.phi_weight(tuple(x + y for x, y in zip(a, b)))
                if w in self.weights:
                    out.add(w)
        return frozenset(out)

    def hyperline(self, mu):
        h = self._hyperlines.get(mu)
        if h is None:
            h = self.sharp_support((mu,), self.weights)
            if len(h) != 10:
                raise ConsistencyError("hyperline of %r has size %d"
                                       % (mu, len(h)))
            self._hyperlines[mu] = h
        return h

    def brace_weight(self, mx, my, mz):
        p = self.phi_weight(my)
        return tuple(a + b + c for a, b, c in zip(mx, mz, p))

    def brace_closed(self, support):
        """No brace built from two support weights escapes the support."""
        for mx in support:
            for my in support:
                for mz in self.weights:
                    w = self.brace_weight(mx, my, mz)
                    if w in self.weights and w not in support:
                        return False
        return True

    def psi_support(self, support):
        """The dual support.

        Away from size 6 it is the common hyperline of the members; at the
        self-dual size the hyperlines are too generous and the brace-closure
        filter is used instead.
        """
        support = frozenset(support)
        if not support:
            raise ValueError("empty support")
        if len(support) != 6:
            out = None
            for mu in support:
                h = self.hyperline(mu)
                out = h if out is None else out & h
            return frozenset(out)
        out = set()
        for nu in self.weights:
            p = self.phi_weight(nu)
            good = True
            for mx in support:
                for mz in self.weights:
                    w = tuple(a + b + c for a, b, c in zip(mx, mz, p))
                    if w in self.weights and w not in support:
                        good = False
                        break
                if not good:
                    break
            if good:
                out.add(nu)
        return frozenset(out)

    def psi_standard(self, delta):
        s = self.standard_support(delta)
        if delta == 2 and not self.brace_closed(s):
            raise ConsistencyError("standard 6-support is not brace-closed")
        out = self.psi_support(s)
        want = self.standard_support(self.PHI[delta])
        if out != want:
            raise ConsistencyError("psi of the standard %d-support is wrong"
                                   % delta)
        return out

    def psi_op(self):
        index_map = dict(self.PHI)
        return index_map, lambda d, s: (index_map[d], self.psi_support(s))

    def wprime_orbit_of(self, my):
        if self._orbits is None:
            self._orbits = wprime_orbits(self.rs, 6, self.weights)
        for o in self._orbits:
            if my in o:
                return o
        raise ValueError("%r is not a weight here" % (my,))

    def dim_brace_vplus(self, my):
        """Dimension of the brace image at the highest weight vector, as a
        function of the second slot's weight, together with the supporting
        weight set.  Constant on each orbit of the parabolic fixing the
        highest weight.

        The three orbits give 0 (certified constant; the support calculus
        alone shows no witness either way), exactly 6 (upper bound from the
        support count, lower bound from one-term certificates), and 17 (the
        support count; a matching certificate family is not attempted).
        """
        if my not in self.weights:
            raise ValueError("%r is not a weight here" % (my,))
        hw = self.geometry.hw
        minus_om6 = tuple(-x for x in self.rs.fundamental_weight(6))
        orbit = self.wprime_orbit_of(my)
        if len(orbit) == 1:
            if my != minus_om6:
                raise ConsistencyError("unexpected singleton orbit")
            u = frozenset(w for w in self.weights
                          if self.phi_weight(tuple(a + b for a, b in
                                                   zip(hw, w)))
                          not in self.weights)
            if len(u) != 17 or hw not in u:
                raise ConsistencyError("lowest-weight brace support is off")
            return 17, u
        if hw in orbit:
            return 0, frozenset()
        pm = self.phi_weight(my)
        upper = frozenset(w for w in
                          (tuple(a + b + c for a, b, c in zip(hw, mz, pm))
                           for mz in self.weights)
                          if w in self.weights)
        if len(upper) != 6:
            raise ConsistencyError("expected a 6-element brace support")
        zero = (0,) * 6
        for lam in upper:
            found = False
            for f in self.weights:
                t1 = my == minus_om6 and f == lam
                t2 = (tuple(a + b for a, b in zip(f, pm)) == zero
                      and lam == hw)
                s = tuple(a + b + c for a, b, c in zip(hw, f, pm))
                t3 = (self.phi_weight(tuple(a + b for a, b in zip(hw, f)))
                      in self.weights and s in self.weights and s == lam)
                if int(t1) + int(t2) + int(t3) == 1:
                    found = True
                    break
            if not found:
                raise ConsistencyError("no certificate at %r" % (lam,))
        return 6, upper

    def ln_conditions(self, s, t):
        """The two vanishing conditions for a dual pair of supports."""
        zero = (0,) * 6
        a_ok = True
        for mu in s:
            for nu in t:
                if tuple(x + y for x, y in
                         zip(mu, self.phi_weight(nu))) == zero:
                    a_ok = False
        b_ok = True
        for m1 in t:
            for m2 in s:
                p = self.phi_weight(m2)
                for m3 in t:
                    w = tuple(a + b + c for a, b, c in zip(m1, m3, p))
                    if w in self.weights:
                        b_ok = False
        return a_ok, b_ok

    def verify_ln(self, delta):
        s = self.standard_support(delta)
        t = self.standard_support(self.PHI[delta])
        a_ok, b_ok = self.ln_conditions(s, t)
        return a_ok and b_ok


class Triality:
    """Triality on the D4 vector weights via an 8x8 partial product."""

    LABELS = ("e1", "e2", "e3", "e4", "f4", "f3", "f2", "f1")
    PHI = {1: 3, 2: 2, 3: 4, 4: 1}

    def __init__(self):
        self.rs = RootSystem.named("D4")
        self.geometry = Geometry(self.rs, 1)
        self.weights = self.geometry.weights
        eps = {1: (1, 0, 0, 0), 2: (-1, 1, 0, 0), 3: (0, -1, 1, 1),
               4: (0, 0, -1, 1)}
        self.label_weight = {}
        for i in (1, 2, 3, 4):
            self.label_weight["e%d" % i] = eps[i]
            self.label_weight["f%d" % i] = tuple(-x for x in eps[i])
        if set(self.label_weight.values()) != self.weights:
            raise ConsistencyError("labels do not cover the vector weights")
        self.weight_label = {w: a for a, w in self.label_weight.items()}

    @staticmethod
    def phi_weight(c):
        return (c[3], c[1], c[0], c[2])

    @staticmethod
    def phi2_weight(c):
        return (c[2], c[1], c[3], c[0])

    def star_weight(self, u, v):
        w = tuple(a + b for a, b in zip(self.phi_weight(u),
                                        self.phi2_weight(v)))
        return w if w in self.weights else None

    def star_label(self, a, b):
        w = self.star_weight(self.label_weight[a], self.label_weight[b])
        return None if w is None else self.weight_label[w]

    def star_support(self, s1, s2):
        out = set()
        for u in s1:
            for v in s2:
                w = self.star_weight(u, v)
                if w is not None:
                    out.add(w)
        return frozenset(out)

    def table(self):
        """The 8x8 product table in the printed layout: the column entry
        for the fork labels is transposed (e4 and f4 swap) relative to the
        weight actually multiplied."""
        swap = {"e4": "f4", "f4": "e4"}
        rows = []
        for a in self.LABELS:
            rows.append(tuple(self.star_label(a, swap.get(b, b))
                              for b in self.LABELS))
        return rows

    def t_nonzero(self, a, b, c):
        """Does the trilinear form pair these three labels?"""
        u = self.label_weight[a]
        v = self.phi_weight(self.label_weight[b])
        w = self.phi2_weight(self.label_weight[c])
        return all(x + y + z == 0 for x, y, z in zip(u, v, w))

    def _unique_left(self, support):
        hits = [w for w in self.weights
                if self.star_support((w,), self.weights) == support]
        if len(hits) != 1:
            raise ConsistencyError("left factor is not unique")
        return hits[0]

    def _unique_right(self, support):
        hits = [w for w in self.weights
                if self.star_support(self.weights, (w,)) == support]
        if len(hits) != 1:
            raise ConsistencyError("right factor is not unique")
        return hits[0]

    def psi(self, delta, support):
        """One triality step on an apartment object, following the node
        rotation 1 -> 3 -> 4 -> 1 (node 2 objects map to node 2)."""
        support = frozenset(support)
        if delta == 1:
            if len(support) != 1:
                raise ValueError("a point support must be a singleton")
            (nu,) = support
            return 3, self.star_support((nu,), self.weights)
        if delta == 3:
            a = self._unique_left(support)
            return 4, self.star_support(self.weights, (a,))
        if delta == 4:
            a = self._unique_right(support)
            return 1, frozenset((a,))
        if delta == 2:
            right = self.star_support(self.weights, support)
            return 2, self.star_support(support, right)
        raise ValueError("delta out of range")

    def psi_op(self):
        return dict(self.PHI), self.psi


def e7_rank_one_check(geometry=None):
    """In the 56-weight system, doubling the highest weight pairs with no
    weight except the opposite one."""
    g = geometry or Geometry(RootSystem.named("E7"), 7)
    hw = g.hw
    opposite = tuple(-x for x in hw)
    if opposite not in g.weights:
        raise ConsistencyError("lowest weight missing")
    for nu in g.weights:
        w = tuple(2 * a + b for a, b in zip(hw, nu))
        if (w in g.weights) != (nu == opposite):
            return False
    return True


def e7_inner_ideal_check(geometry, delta):
    """Sums of two support weights and any weight land back in the support
    whenever they land in the weight set at all."""
    s = geometry.delta_space(delta).support
    for m1 in s:
        for m2 in s:
            for m3 in geometry.weights:
                w = tuple(a + b + c for a, b, c in zip(m1, m2, m3))
                if w in geometry.weights and w not in s:
                    return False
    return True
