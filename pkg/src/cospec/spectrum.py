"""Exact characteristic polynomials and walk counts.

Everything here is integer arithmetic.  ``char_poly`` runs Faddeev-LeVerrier:
the only divisions are ``trace / k``, which are exact because every coefficient
of an integer matrix's characteristic polynomial is an integer.
"""
from __future__ import annotations

from collections.abc import Mapping, Sequence
from functools import lru_cache

import numpy as np

from .bijection import Bijection
from .graph import Graph, bits, delete_vertices

_INT64_LIMIT = 1 << 62


class CharPoly:
    """Monic integer polynomial; ``coeffs[i]`` is the coefficient of ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        coeffs = tuple(int(c) for c in coeffs)
        if not coeffs or coeffs[-1] != 1:
            raise ValueError(f"characteristic polynomial must be monic: {coeffs}")
        self.coeffs = coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        return isinstance(other, CharPoly) and self.coeffs == other.coeffs

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"CharPoly({self.text()})"

    def __str__(self):
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(c)
            body = mono if (mag == 1 and mono) else f"{mag}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def text(self) -> str:
        """Coefficients from ``x^n`` down to ``x^0``, space separated."""
        return " ".join(str(c) for c in reversed(self.coeffs))

    @classmethod
    def from_text(cls, s: str) -> CharPoly:
        return cls([int(t) for t in reversed(s.split())])

    def to_bytes(self) -> bytes:
        """Hashable serialisation: degree, then each coefficient (x^0 first) as
        a sign byte, a length byte and big-endian magnitude."""
        out = bytearray(self.degree.to_bytes(2, "big"))
        for c in self.coeffs:
            mag = abs(c)
            raw = mag.to_bytes(max(1, (mag.bit_length() + 7) // 8), "big")
            out.append(1 if c < 0 else 0)
            out.append(len(raw))
            out += raw
        return bytes(out)

    def sort_key(self):
        return (self.degree, tuple(reversed(self.coeffs)))


def adjacency_matrix(g: Graph, dtype=np.int64) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=dtype)
    for v, row in enumerate(g.adj):
        for w in bits(row):
            a[v, w] = 1
    return a


def _fits_int64(n: int, maxdeg: int) -> bool:
    # |entries of M_k| <= maxdeg^(k-1) 2^n; traces add a factor n * maxdeg.
    return n * max(maxdeg, 1) ** n * 2**n < _INT64_LIMIT


def _faddeev_leverrier(g: Graph):
    """Return (coefficients ascending, [M_1..M_n]) with
    adj(xI - A) = sum_k M_k x^(n-k)."""
    n = g.n
    if n == 0:
        return [1], []
    maxdeg = max(g.degrees())
    dtype = np.int64 if _fits_int64(n, maxdeg) else object
    a = adjacency_matrix(g, dtype)
    if dtype is object:
        a = a.astype(object)
    eye = np.eye(n, dtype=np.int64).astype(dtype)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    ms = []
    m = np.zeros((n, n), dtype=dtype)
    for k in range(1, n + 1):
        m = a.dot(m) + coeffs[n - k + 1] * eye
        ms.append(m)
        tr = int(np.trace(a.dot(m)))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs[n - k] = q
    return coeffs, ms


def char_poly(g: Graph) -> CharPoly:
    return _char_poly_cached(g)


@lru_cache(maxsize=200_000)
def _char_poly_cached(g: Graph) -> CharPoly:
    coeffs, _ = _faddeev_leverrier(g)
    return CharPoly(coeffs)


class DeletionPolys:
    """Characteristic polynomials of ``G`` and of ``G \\ X`` for ``|X| <= 2``.

    Single-vertex deletions come from the diagonal of ``adj(xI - A)``, which the
    Faddeev-LeVerrier pass produces anyway; pair deletions are computed on demand
    and memoised.
    """

    def __init__(self, g: Graph):
        self.graph = g
        n = g.n
        coeffs, ms = _faddeev_leverrier(g)
        self.full = CharPoly(coeffs)
        self._single = []
        for i in range(n):
            # coefficient of x^(n-k) is M_k[i, i]
            c = [int(ms[k - 1][i, i]) for k in range(n, 0, -1)]
            self._single.append(CharPoly(c))
        self._pairs: dict[tuple[int, int], CharPoly] = {}

    def single(self, i: int) -> CharPoly:
        return self._single[i]

    def pair(self, i: int, j: int) -> CharPoly:
        key = (i, j) if i < j else (j, i)
        p = self._pairs.get(key)
        if p is None:
            p = char_poly(delete_vertices(self.graph, key))
            self._pairs[key] = p
        return p

    def deleted(self, xs) -> CharPoly:
        xs = tuple(sorted(set(xs)))
        if not xs:
            return self.full
        if len(xs) == 1:
            return self._single[xs[0]]
        if len(xs) == 2:
            return self.pair(*xs)
        return char_poly(delete_vertices(self.graph, xs))


@lru_cache(maxsize=50_000)
def deletion_polys(g: Graph) -> DeletionPolys:
    return DeletionPolys(g)


def cospectral(g1: Graph, g2: Graph) -> bool:
    return g1.n == g2.n and char_poly(g1) == char_poly(g2)


# -- independent oracle ---------------------------------------------------------

def _padd(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return out


def _pmul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def char_poly_oracle(g: Graph) -> CharPoly:
    """det(xI - A) by cofactor expansion along rows, memoised on the set of
    unused columns.  Test-only; refuses n > 10."""
    n = g.n
    if n > 10:
        raise ValueError("char_poly_oracle is limited to n <= 10")

    def entry(i, j):
        if i == j:
            return [0, 1]
        return [-1] if g.adj[i] >> j & 1 else [0]

    memo = {}

    def minor(cols: int) -> list[int]:
        # rows used so far = n - popcount(cols); expand the next row
        if cols == 0:
            return [1]
        if cols in memo:
            return memo[cols]
        row = n - cols.bit_count()
        total = [0]
        sign = 1
        for col in range(n):
            if not cols >> col & 1:
                continue
            e = entry(row, col)
            if any(e):
                term = _pmul(e, minor(cols & ~(1 << col)))
                if sign < 0:
                    term = [-c for c in term]
                total = _padd(total, term)
            sign = -sign
        memo[cols] = total
        return total

    coeffs = minor((1 << n) - 1)
    while len(coeffs) > n + 1 and coeffs[-1] == 0:
        coeffs.pop()
    return CharPoly(coeffs)


# -- walk counts --------------------------------------------------------------------

class WalkCountTable:
    """``counts[r][i][j]`` = number of i-j walks of length r, for r = 0..r_max."""

    def __init__(self, n: int, r_max: int, counts: list[np.ndarray]):
        self.n = n
        self.r_max = r_max
        self.counts = counts

    def __getitem__(self, r: int) -> np.ndarray:
        return self.counts[r]

    def closed_walk_trace(self, r: int) -> int:
        return int(sum(self.counts[r][i, i] for i in range(self.n)))


def walk_counts(g: Graph, r_max: int) -> WalkCountTable:
    if r_max < 0:
        raise ValueError("r_max must be >= 0")
    n = g.n
    a = adjacency_matrix(g).astype(object)
    cur = np.eye(n, dtype=np.int64).astype(object)
    counts = [cur]
    for _ in range(r_max):
        cur = a.dot(cur)
        counts.append(cur)
    return WalkCountTable(n, r_max, counts)


def walks_match(
    g1: Graph,
    s: Sequence[int],
    g2: Graph,
    t: Sequence[int],
    f: Bijection | Mapping[int, int],
    r_max: int | None = None,
) -> bool:
    """Truncated walk-generating-function equality on ``S x S`` under ``f``.

    ``r_max`` defaults to ``2 * max(n1, n2)``.
    """
    if not isinstance(f, Bijection):
        f = Bijection(f)
    f.check(s, t)
    if r_max is None:
        r_max = 2 * max(g1.n, g2.n)
    w1 = walk_counts(g1, r_max)
    w2 = walk_counts(g2, r_max)
    s = list(s)
    for r in range(r_max + 1):
        c1, c2 = w1[r], w2[r]
        for i in s:
            for j in s:
                if c1[i, j] != c2[f[i], f[j]]:
                    return False
    return True

