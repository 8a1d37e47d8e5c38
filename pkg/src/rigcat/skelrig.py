"""The left-semistrict symmetric 2-rig structure on the skeleton of finite sets.

Objects are the ordinals [n]; sums are concatenation and products enumerate
[m] x [n] by rows, ``(i, j) -> (j - 1) m + i``.  With these choices every
structural isomorphism is an identity except the additive commutator ``c``,
the multiplicative commutator ``c'`` and the right distributor.

``right_distributor`` returns the canonical map ``xz + yz -> (x + y) z`` of the
distributive structure.  The rig-category distributor ``(x + y) z -> xz + yz``
is its inverse; see :func:`rdist`.

The ``oracle_*`` functions rebuild the same maps from the universal
properties, working on explicit tagged-union and pair representations and
only converting to ordinals at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .finperm import (
    FinMap,
    IndexOutOfRange,
    Perm,
    _wrap,
    adjacent_transposition,
    compose_all,
    identity,
    invert,
)


class InvalidProjection(ValueError):
    pass


class RangeError(ValueError):
    pass


class ZeroModulus(ValueError):
    pass


@dataclass(frozen=True)
class SkelObject:
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("size must be a natural number")


def mod_remainder(k: int, x: int) -> int:
    """R_k(x): remainder of x by k, except multiples of k go to k."""
    if k < 1:
        raise ZeroModulus("modulus must be at least 1")
    r = x % k
    return r if r else k


# -- sums and products of maps ---------------------------------------------


def sum_map(f: FinMap, g: FinMap) -> FinMap:
    m, mc = f.dom, f.cod
    table = f.table + tuple(mc + e for e in g.table)
    return _wrap(m + g.dom, mc + g.cod, table, isinstance(f, Perm) and isinstance(g, Perm))


def prod_map(f: FinMap, g: FinMap) -> FinMap:
    m, mc = f.dom, f.cod
    dom, cod = m * g.dom, mc * g.cod
    both = isinstance(f, Perm) and isinstance(g, Perm)
    if dom == 0:
        return _wrap(0, cod, (), both and cod == 0)
    ft, gt = f.table, g.table
    # k = q m + r with 0 <= r < m, branching on m | k exactly as the closed form does
    out = []
    for k in range(1, dom + 1):
        q, r = divmod(k, m)
        if r == 0:
            out.append((gt[q - 1] - 1) * mc + ft[m - 1])
        else:
            out.append((gt[q] - 1) * mc + ft[r - 1])
    return _wrap(dom, cod, tuple(out), both)


# -- structural isomorphisms -----------------------------------------------


@lru_cache(maxsize=None)
def add_commutator(m: int, n: int) -> Perm:
    """c_{[m],[n]} : [m + n] -> [n + m]."""
    table = tuple(n + k for k in range(1, m + 1)) + tuple(range(1, n + 1))
    return Perm._trusted(m + n, m + n, table)


@lru_cache(maxsize=None)
def mult_commutator(m: int, n: int) -> Perm:
    """c'_{[m],[n]} : [mn] -> [nm]."""
    if m == 0 or n == 0:
        return identity(0)
    out = []
    for k in range(1, m * n + 1):
        q, r = divmod(k, m)
        out.append((m - 1) * n + q if r == 0 else (r - 1) * n + q + 1)
    return Perm._trusted(m * n, m * n, tuple(out))


@lru_cache(maxsize=None)
def right_distributor(m: int, n: int, p: int) -> Perm:
    """The canonical bijection [m]p + [n]p -> ([m] + [n])p, of degree (m + n)p."""
    size = (m + n) * p
    if m == 0 or n == 0 or p == 0:
        return identity(size)
    mp = m * p
    out = []
    for s in range(1, size + 1):
        if s <= mp:
            out.append(s + (s - mod_remainder(m, s)) // m * n)
        else:
            t = s - mp
            out.append(t + (t + n - mod_remainder(n, t)) // n * m)
    return Perm._trusted(size, size, tuple(out))


@lru_cache(maxsize=None)
def rdist(m: int, n: int, p: int) -> Perm:
    """The rig-category right distributor d'_{[m],[n],[p]} : ([m]+[n])[p] -> [m][p]+[n][p]."""
    return invert(right_distributor(m, n, p))


def left_distributor(m: int, n: int, p: int) -> Perm:
    return identity(m * (n + p))


def injections(m: int, n: int) -> tuple[FinMap, FinMap]:
    return (
        FinMap._trusted(m, m + n, tuple(range(1, m + 1))),
        FinMap._trusted(n, m + n, tuple(range(m + 1, m + n + 1))),
    )


def projections(m: int, n: int) -> tuple[FinMap, FinMap]:
    if m < 1 or n < 1:
        raise InvalidProjection(f"projections of [{m}] x [{n}] need both sizes >= 1")
    first, second = [], []
    for k in range(1, m * n + 1):
        q, r = divmod(k, m)
        first.append(m if r == 0 else r)
        second.append(q if r == 0 else q + 1)
    return FinMap._trusted(m * n, m, tuple(first)), FinMap._trusted(m * n, n, tuple(second))


@dataclass(frozen=True)
class PairIndexing:
    """The bijections b+ : [m] ⊔ [n] -> [m + n] and b• : [m] x [n] -> [mn].

    Additive points are ``(k, tag)`` with tag 0 for the left summand and 1 for
    the right one; multiplicative points are ``(i, j)``.
    """

    m: int
    n: int
    direction: Literal["additive", "multiplicative"] = "additive"

    def __post_init__(self):
        if self.direction not in ("additive", "multiplicative"):
            raise ValueError(f"unknown direction {self.direction!r}")

    def index(self, point: tuple[int, int]) -> int:
        a, b = point
        if self.direction == "additive":
            if b == 0 and 1 <= a <= self.m:
                return a
            if b == 1 and 1 <= a <= self.n:
                return self.m + a
            raise RangeError(f"{point} is not a point of [{self.m}] ⊔ [{self.n}]")
        if not (1 <= a <= self.m and 1 <= b <= self.n):
            raise RangeError(f"{point} is not a point of [{self.m}] x [{self.n}]")
        return (b - 1) * self.m + a

    def unindex(self, k: int) -> tuple[int, int]:
        if self.direction == "additive":
            if 1 <= k <= self.m:
                return (k, 0)
            if self.m < k <= self.m + self.n:
                return (k - self.m, 1)
            raise RangeError(f"{k} is outside [{self.m + self.n}]")
        if not 1 <= k <= self.m * self.n:
            raise RangeError(f"{k} is outside [{self.m * self.n}]")
        q, r = divmod(k, self.m)
        return (self.m, q) if r == 0 else (r, q + 1)


def sigma_factor(i: int, p: int) -> Perm:
    """σ_{i,p} = (i,i+1)(i+2,i+3)...(2p-i, 2p-i+1) in S_{2p}."""
    if not 2 <= i <= p:
        raise IndexOutOfRange(f"need 2 <= i <= p, got i={i}, p={p}")
    return compose_all([adjacent_transposition(i + 2 * k, 2 * p) for k in range(p - i + 1)])


def distributor_via_sigma(p: int) -> Perm:
    """σ_{2,p} σ_{3,p} ... σ_{p,p}; equals ``right_distributor(1, 1, p)``."""
    return compose_all([sigma_factor(i, p) for i in range(2, p + 1)], 2 * p)


# -- oracles from the universal properties ---------------------------------


def _coproduct(m: int, n: int) -> list:
    """Elements of [m] ⊔ [n] in the order fixed by the chosen injections."""
    return [(k, 0) for k in range(1, m + 1)] + [(k, 1) for k in range(1, n + 1)]


def _product(m: int, n: int) -> list:
    """Elements of [m] x [n], enumerated row by row."""
    return [(i, j) for j in range(1, n + 1) for i in range(1, m + 1)]


def _transport(src: list, dst: list, fn) -> tuple:
    """Table of ``b_dst . fn . b_src^{-1}`` for two enumerations."""
    where = {pt: k for k, pt in enumerate(dst, 1)}
    return tuple(where[fn(pt)] for pt in src)


def oracle_sum(f: FinMap, g: FinMap) -> FinMap:
    def disjoint_union(pt):
        k, tag = pt
        return (f(k), 0) if tag == 0 else (g(k), 1)

    table = _transport(_coproduct(f.dom, g.dom), _coproduct(f.cod, g.cod), disjoint_union)
    return FinMap(f.dom + g.dom, f.cod + g.cod, table)


def oracle_prod(f: FinMap, g: FinMap) -> FinMap:
    table = _transport(
        _product(f.dom, g.dom), _product(f.cod, g.cod), lambda pt: (f(pt[0]), g(pt[1]))
    )
    return FinMap(f.dom * g.dom, f.cod * g.cod, table)


def oracle_add_comm(m: int, n: int) -> Perm:
    # c ι¹_{x,y} = ι²_{y,x} and c ι²_{x,y} = ι¹_{y,x}
    table = _transport(_coproduct(m, n), _coproduct(n, m), lambda pt: (pt[0], 1 - pt[1]))
    return Perm(table)


def oracle_mult_comm(m: int, n: int) -> Perm:
    table = _transport(_product(m, n), _product(n, m), lambda pt: (pt[1], pt[0]))
    return Perm(table)


def oracle_right_dist(m: int, n: int, p: int) -> Perm:
    """The map xz + yz -> (x + y)z restricting to ι¹ x id and ι² x id."""
    xz, yz = _product(m, p), _product(n, p)
    src = [(pt, 0) for pt in xz] + [(pt, 1) for pt in yz]  # (xz) ⊔ (yz)
    dst = [((i, tag), k) for k in range(1, p + 1) for (i, tag) in _coproduct(m, n)]

    def restrict(pt):
        (i, k), tag = pt
        return ((i, tag), k)

    return Perm(_transport(src, dst, restrict))
