"""Sparse multivariate polynomials over exact rationals in y[v,c] variables.

A Ring fixes the variable order (vertex-major, column-minor, so y[1,1]
is the most significant variable); monomials are dense exponent tuples
over that order. Term comparison is a rational weight vector refined by
graded reverse lexicographic order, which is also how elimination
orders are expressed (weight 1 on the variable to eliminate).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .rationals import QQ, ZERO, rat_str


class Ring:
    """Ordered list of variable tokens, most significant first."""

    __slots__ = ("tokens", "index", "nvars")

    def __init__(self, tokens):
        self.tokens = tuple(tokens)
        self.index = {t: i for i, t in enumerate(self.tokens)}
        self.nvars = len(self.tokens)
        if len(self.index) != self.nvars:
            raise ValueError("duplicate variable token")

    def var(self, token) -> "Polynomial":
        expo = [0] * self.nvars
        expo[self.index[token]] = 1
        return Polynomial(self, {tuple(expo): QQ(1)})

    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: QQ(1)})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def monomial_str(self, mono) -> str:
        factors = []
        for i, e in enumerate(mono):
            if e:
                t = self.tokens[i]
                name = f"y[{t[1]},{t[2]}]" if t[0] == "y" else str(t[0])
                factors.append(name if e == 1 else f"{name}^{e}")
        return "*".join(factors) if factors else "1"

    def __eq__(self, other):
        return isinstance(other, Ring) and self.tokens == other.tokens

    def __repr__(self):
        return f"Ring({self.nvars} vars)"


def ring_for(n: int, d: int) -> Ring:
    """Polynomial ring on y[v,c] for v in 1..n, c in 1..d."""
    if d < 1:
        raise ValueError("need d >= 1")
    return Ring(tuple(("y", v, c) for v in range(1, n + 1) for c in range(1, d + 1)))


def yvar(ring: Ring, v: int, c: int) -> "Polynomial":
    return ring.var(("y", v, c))


def grevlex_key(mono):
    return (sum(mono), tuple(-e for e in reversed(mono)))


@dataclass(frozen=True)
class WeightVector:
    """Rational weight per variable token; absent tokens weigh 0."""

    weights: tuple[tuple[object, object], ...]

    @staticmethod
    def from_map(m: dict) -> "WeightVector":
        return WeightVector(tuple(sorted(((t, QQ(w)) for t, w in m.items()), key=lambda x: x[0])))

    def as_map(self) -> dict:
        return dict(self.weights)

    def on_ring(self, ring: Ring):
        m = self.as_map()
        return tuple(m.get(t, ZERO) for t in ring.tokens)


@dataclass(frozen=True)
class TermOrder:
    """Weight vector refined by grevlex; zero weights give plain grevlex."""

    ring: Ring
    weights: tuple

    @staticmethod
    def grevlex(ring: Ring) -> "TermOrder":
        return TermOrder(ring, (ZERO,) * ring.nvars)

    @staticmethod
    def weighted(ring: Ring, wv: WeightVector) -> "TermOrder":
        return TermOrder(ring, wv.on_ring(ring))

    @staticmethod
    def elimination(ring: Ring, token) -> "TermOrder":
        """Block order eliminating one variable (weight 1 there, 0 elsewhere)."""
        w = [ZERO] * ring.nvars
        w[ring.index[token]] = QQ(1)
        return TermOrder(ring, tuple(w))

    def key(self, mono):
        wdot = sum((w * e for w, e in zip(self.weights, mono) if e), ZERO)
        return (wdot,) + grevlex_key(mono)


class Polynomial:
    """Immutable-by-convention map monomial -> nonzero rational coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c != 0}

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.one().scale(QQ(other))
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, ZERO) + c
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.ring, out)

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(QQ(other))
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, ZERO) + c1 * c2
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(self.ring, out)

    def __pow__(self, k: int):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def scale(self, q) -> "Polynomial":
        q = QQ(q)
        return Polynomial(self.ring, {m: c * q for m, c in self.terms.items()})

    def mul_monomial(self, mono, coeff) -> "Polynomial":
        return Polynomial(self.ring, {
            tuple(a + b for a, b in zip(m, mono)): c * coeff for m, c in self.terms.items()
        })

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def sorted_monomials(self, order: TermOrder | None = None):
        order = order or TermOrder.grevlex(self.ring)
        return sorted(self.terms, key=order.key, reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for m in self.sorted_monomials():
            c = self.terms[m]
            ms = self.ring.monomial_str(m)
            if ms == "1":
                body = rat_str(abs(c))
            elif abs(c) == 1:
                body = ms
            else:
                body = f"{rat_str(abs(c))}*{ms}"
            if not chunks:
                chunks.append(("-" if c < 0 else "") + body)
            else:
                chunks.append(("- " if c < 0 else "+ ") + body)
        return " ".join(chunks)

    def to_json_terms(self) -> list:
        out = []
        for m in self.sorted_monomials():
            mono = []
            for i, e in enumerate(m):
                if e:
                    t = self.ring.tokens[i]
                    mono.append([t[1], t[2], e] if t[0] == "y" else [str(t), e])
            out.append({"coeff": rat_str(self.terms[m]), "monomial": mono})
        return out

    def __repr__(self):
        return f"Polynomial({self})"


# ---------------------------------------------------------------------------
# leading terms and initial forms

def weight_value(f: Polynomial, wv: WeightVector):
    """Largest weight attained by a monomial of f."""
    if f.is_zero():
        raise ValueError("weight of the zero polynomial")
    w = wv.on_ring(f.ring)
    return max(sum((q * e for q, e in zip(w, m) if e), ZERO) for m in f.terms)


def initial_form(f: Polynomial, wv: WeightVector) -> Polynomial:
    """Sum of the terms of f attaining the maximal weight."""
    if f.is_zero():
        return f
    w = wv.on_ring(f.ring)

    def dot(m):
        return sum((q * e for q, e in zip(w, m) if e), ZERO)

    top = max(dot(m) for m in f.terms)
    return Polynomial(f.ring, {m: c for m, c in f.terms.items() if dot(m) == top})


def leading_monomial(f: Polynomial, order: TermOrder):
    """The order-maximal monomial of f, as an exponent tuple."""
    if f.is_zero():
        raise ValueError("leading monomial of the zero polynomial")
    return max(f.terms, key=order.key)


def leading_coefficient(f: Polynomial, order: TermOrder):
    return f.terms[leading_monomial(f, order)]


def monomial_poly(ring: Ring, mono) -> Polynomial:
    return Polynomial(ring, {tuple(mono): QQ(1)})


def pairwise_coprime_squarefree(monomials) -> bool:
    """True iff every monomial is squarefree and supports are pairwise disjoint."""
    seen: set[int] = set()
    for m in monomials:
        for i, e in enumerate(m):
            if e > 1 or (e == 1 and i in seen):
                return False
            if e:
                seen.add(i)
    return True


# ---------------------------------------------------------------------------
# edge quadrics

def lss_generators(g: Graph, d: int, ring: Ring | None = None):
    """One quadric per edge: the sum over columns of the endpoint products."""
    if d < 1:
        raise ValueError("need d >= 1")
    ring = ring or ring_for(g.n, d)
    out = []
    for (i, j) in g.edge_labels():
        terms = {}
        for c in range(1, d + 1):
            expo = [0] * ring.nvars
            expo[ring.index[("y", i, c)]] += 1
            expo[ring.index[("y", j, c)]] += 1
            terms[tuple(expo)] = QQ(1)
        out.append(((i, j), Polynomial(ring, terms)))
    return out


def weight_from_pmd(dec, d: int) -> WeightVector:
    """Weights making the column-l quadric term lead for every part-l edge.

    With integer stage certificates w_l and B exceeding every |edge sum|,
    the weight 1 + w_l(v)/B^l on y[v,l] (zero past the part count) puts
    the column-l term of an l-th part edge strictly above the others:
    earlier columns contribute below 2, later ones at most 2 + (B-1)/B^k
    with k > l, and truncated columns exactly 0. The conclusion is
    machine-checked by the callers rather than trusted.
    """
    p = len(dec.parts)
    if d < p:
        raise ValueError(f"need d >= number of parts ({p})")
    all_edges = [e for part in dec.parts for e in part]
    vertices = sorted({v for c in dec.certificates for v, _ in c.weights}
                      | {v for e in all_edges for v in e})
    big = 1
    for cert in dec.certificates:
        w = cert.as_map()
        for (i, j) in all_edges:
            big = max(big, abs(w.get(i, 0) + w.get(j, 0)))
    big += 1
    weights = {}
    for l, cert in enumerate(dec.certificates, start=1):
        w = cert.as_map()
        for v in vertices:
            weights[("y", v, l)] = QQ(1) + QQ(w.get(v, 0)) * QQ(1, big ** l)
    return WeightVector.from_map(weights)


# ---------------------------------------------------------------------------
# the localization determinant

def matrix_D(g: Graph, v: int, d: int, ring: Ring | None = None) -> Polynomial:
    """Determinant of the generic t x t block on v's neighbors and the last
    t columns, where t = deg(v). Neighbors are taken in sorted order as
    the rows; columns run d-t+1..d. The 0 x 0 case is the unit.
    """
    nb = g.neighbors_of(v)
    t = len(nb)
    if t > d:
        raise ValueError(f"deg({v}) = {t} exceeds d = {d}")
    ring = ring or ring_for(g.n, d)
    if t == 0:
        return ring.one()
    rows = [[yvar(ring, nb[r], d - t + 1 + c) for c in range(t)] for r in range(t)]
    if t <= 5:
        return _det_laplace(ring, rows)
    return _det_bareiss(ring, rows)


def _det_laplace(ring: Ring, rows) -> Polynomial:
    t = len(rows)
    if t == 1:
        return rows[0][0]
    out = ring.zero()
    for c in range(t):
        minor = [[rows[r][cc] for cc in range(t) if cc != c] for r in range(1, t)]
        term = rows[0][c] * _det_laplace(ring, minor)
        out = out + (term if c % 2 == 0 else -term)
    return out


def _det_bareiss(ring: Ring, rows) -> Polynomial:
    """Fraction-free elimination; every division is exact."""
    a = [row[:] for row in rows]
    t = len(a)
    prev = ring.one()
    sign = 1
    order = TermOrder.grevlex(ring)
    for k in range(t - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, t) if not a[r][k].is_zero()), None)
            if swap is None:
                return ring.zero()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, t):
            for j in range(k + 1, t):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = exact_divide(num, prev, order)
            a[i][k] = ring.zero()
        prev = a[k][k]
    det = a[t - 1][t - 1]
    return det if sign == 1 else -det


def exact_divide(f: Polynomial, gpoly: Polynomial, order: TermOrder) -> Polynomial:
    """Quotient f/g when g divides f exactly; raises otherwise."""
    if gpoly.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    quot = f.ring.zero()
    rem = f
    glm = leading_monomial(gpoly, order)
    glc = gpoly.terms[glm]
    while not rem.is_zero():
        rlm = leading_monomial(rem, order)
        diff = tuple(a - b for a, b in zip(rlm, glm))
        if any(e < 0 for e in diff):
            raise ArithmeticError("inexact polynomial division")
        coeff = rem.terms[rlm] / glc
        quot = quot + Polynomial(f.ring, {diff: coeff})
        rem = rem - gpoly.mul_monomial(diff, coeff)
    return quot
