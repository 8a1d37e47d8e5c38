"""Maps between finite ordinals [m] = {1, ..., m}, permutations and cycle notation.

Everything is 1-indexed.  Composition follows the ``g f`` convention:
``compose(g, f)`` applies ``f`` first.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class DomainMismatch(ValueError):
    """Raised when composing maps whose endpoints do not match."""


class MalformedCycles(ValueError):
    pass


class IndexOutOfRange(ValueError):
    pass


class ParseError(ValueError):
    """Cycle-notation text could not be parsed; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class FinMap:
    """A total map [dom] -> [cod] stored as its table of images."""

    __slots__ = ("dom", "cod", "table")

    def __init__(self, dom: int, cod: int, table: Iterable[int]):
        table = tuple(table)
        if dom < 0 or cod < 0:
            raise ValueError("sizes must be natural numbers")
        if len(table) != dom:
            raise ValueError(f"table has length {len(table)}, expected {dom}")
        for e in table:
            if not 1 <= e <= cod:
                raise ValueError(f"image {e} outside [1, {cod}]")
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "table", table)

    @classmethod
    def _trusted(cls, dom: int, cod: int, table: tuple) -> "FinMap":
        obj = object.__new__(cls)
        object.__setattr__(obj, "dom", dom)
        object.__setattr__(obj, "cod", cod)
        object.__setattr__(obj, "table", table)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("FinMap is immutable")

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.dom:
            raise IndexOutOfRange(f"point {i} outside [1, {self.dom}]")
        return self.table[i - 1]

    def __eq__(self, other):
        if not isinstance(other, FinMap):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.table == other.table

    def __hash__(self):
        return hash((self.dom, self.cod, self.table))

    def is_bijective(self) -> bool:
        return self.dom == self.cod and len(set(self.table)) == self.dom

    def as_perm(self) -> "Perm":
        if not self.is_bijective():
            raise ValueError("map is not a bijection")
        return Perm._trusted(self.dom, self.cod, self.table)

    def __repr__(self):
        return f"FinMap({self.dom}, {self.cod}, {list(self.table)})"

    def __str__(self):
        return f"[{','.join(map(str, self.table))}]:[{self.dom}]->[{self.cod}]"


class Perm(FinMap):
    """A bijection of [degree]."""

    __slots__ = ()

    def __init__(self, table: Iterable[int]):
        table = tuple(table)
        n = len(table)
        if sorted(table) != list(range(1, n + 1)):
            raise ValueError(f"{list(table)} is not a permutation of [1, {n}]")
        super().__init__(n, n, table)

    @property
    def degree(self) -> int:
        return self.dom

    def __repr__(self):
        return f"Perm({list(self.table)})"

    def __str__(self):
        return print_cycles(to_cycles(self))


def _wrap(dom: int, cod: int, table: tuple, bijective: bool) -> FinMap:
    if bijective:
        return Perm._trusted(dom, cod, table)
    return FinMap._trusted(dom, cod, table)


def identity(n: int) -> Perm:
    return Perm._trusted(n, n, tuple(range(1, n + 1)))


def compose(g: FinMap, f: FinMap) -> FinMap:
    """``g`` after ``f``."""
    if f.cod != g.dom:
        raise DomainMismatch(f"cannot compose [{g.dom}]->[{g.cod}] after [{f.dom}]->[{f.cod}]")
    gt = g.table
    table = tuple(gt[k - 1] for k in f.table)
    return _wrap(f.dom, g.cod, table, isinstance(f, Perm) and isinstance(g, Perm))


def compose_all(maps: Sequence[FinMap], n: int | None = None) -> FinMap:
    """Composite ``maps[0] maps[1] ... maps[-1]`` (last one applied first)."""
    if not maps:
        if n is None:
            raise ValueError("empty composite needs an explicit degree")
        return identity(n)
    out = maps[-1]
    for g in reversed(maps[:-1]):
        out = compose(g, out)
    return out


def invert(p: Perm) -> Perm:
    inv = [0] * p.degree
    for i, e in enumerate(p.table, 1):
        inv[e - 1] = i
    return Perm._trusted(p.degree, p.degree, tuple(inv))


def all_perms(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order of tables."""
    for t in itertools.permutations(range(1, n + 1)):
        yield Perm._trusted(n, n, t)


def all_maps(m: int, n: int) -> Iterator[FinMap]:
    for t in itertools.product(range(1, n + 1), repeat=m):
        yield FinMap._trusted(m, n, t)


def random_perm(n: int, rng: random.Random) -> Perm:
    t = list(range(1, n + 1))
    rng.shuffle(t)
    return Perm._trusted(n, n, tuple(t))


def random_map(m: int, n: int, rng: random.Random) -> FinMap:
    if m and not n:
        raise ValueError("no maps from a nonempty set to [0]")
    return FinMap._trusted(m, n, tuple(rng.randint(1, n) for _ in range(m)))


# -- cycle notation ---------------------------------------------------------


@dataclass(frozen=True)
class Cycles:
    """Disjoint-cycle presentation of a permutation of [degree].

    Stored in canonical form: each cycle starts at its smallest point and
    cycles are sorted by that point.  Fixed points are omitted.
    """

    degree: int
    cycles: tuple = ()

    def __post_init__(self):
        if self.degree < 0:
            raise MalformedCycles("degree must be a natural number")
        seen = set()
        canon = []
        for cyc in self.cycles:
            cyc = tuple(cyc)
            if len(cyc) < 2:
                raise MalformedCycles(f"cycle {cyc} has fewer than two points")
            for pt in cyc:
                if not 1 <= pt <= self.degree:
                    raise MalformedCycles(f"point {pt} outside [1, {self.degree}]")
                if pt in seen:
                    raise MalformedCycles(f"point {pt} repeated")
                seen.add(pt)
            k = cyc.index(min(cyc))
            canon.append(cyc[k:] + cyc[:k])
        canon.sort()
        object.__setattr__(self, "cycles", tuple(canon))


def to_cycles(p: Perm) -> Cycles:
    seen = set()
    out = []
    for start in range(1, p.degree + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        k = p.table[start - 1]
        while k != start:
            cyc.append(k)
            seen.add(k)
            k = p.table[k - 1]
        if len(cyc) > 1:
            out.append(tuple(cyc))
    return Cycles(p.degree, tuple(out))


def from_cycles(c: Cycles) -> Perm:
    table = list(range(1, c.degree + 1))
    for cyc in c.cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            table[a - 1] = b
    return Perm._trusted(c.degree, c.degree, tuple(table))


def print_cycles(c: Cycles) -> str:
    body = "".join("(" + ",".join(map(str, cyc)) + ")" for cyc in c.cycles) or "()"
    return f"{body}_{c.degree}"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def natural(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected a decimal number", start)
        return int(self.text[start:self.pos])


def parse_cycles(text: str) -> Cycles:
    """Parse ``(2,3,5)(4,7,6)_8`` or ``()_3``; whitespace is ignored."""
    sc = _Scanner(text)
    cycles = []
    starts = []
    sc.expect("(")
    if sc.peek() == ")":
        sc.pos += 1
    else:
        while True:
            starts.append(sc.pos)
            cyc = [sc.natural()]
            while sc.peek() == ",":
                sc.pos += 1
                cyc.append(sc.natural())
            sc.expect(")")
            cycles.append(tuple(cyc))
            if sc.peek() != "(":
                break
            sc.pos += 1
    sc.expect("_")
    degree = sc.natural()
    sc.skip()
    if sc.pos != len(text):
        raise ParseError("trailing characters", sc.pos)
    seen: set[int] = set()
    for cyc, at in zip(cycles, starts):
        for pt in cyc:
            if pt < 1 or pt > degree:
                raise ParseError(f"point {pt} outside [1, {degree}]", at)
            if pt in seen:
                raise ParseError(f"point {pt} appears twice; cycles must be disjoint", at)
            seen.add(pt)
        if len(cyc) < 2:
            raise ParseError("a cycle needs at least two points", at)
    return Cycles(degree, tuple(cycles))


def parse_perm(text: str) -> Perm:
    return from_cycles(parse_cycles(text))


def order(p: Perm) -> int:
    return math.lcm(*(len(c) for c in to_cycles(p).cycles)) if p.degree else 1


# -- adjacent transpositions -----------------------------------------------


def adjacent_transposition(i: int, n: int) -> Perm:
    """(i, i+1)_n."""
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"need 1 <= i <= n-1, got i={i}, n={n}")
    t = list(range(1, n + 1))
    t[i - 1], t[i] = i + 1, i
    return Perm._trusted(n, n, tuple(t))


def decompose_adjacent(p: Perm) -> list[int]:
    """Indices ``[i1, ..., ik]`` with ``p == s_i1 s_i2 ... s_ik``, s_i = (i,i+1)_n.

    Bubble sort on the table: the largest value not yet in place is moved
    right one slot at a time.  Each swap at slot i right-multiplies by s_i,
    so the swaps, read backwards, spell ``p``.
    """
    t = list(p.table)
    swaps = []
    for v in range(p.degree, 0, -1):
        k = t.index(v)
        while k < v - 1:
            t[k], t[k + 1] = t[k + 1], t[k]
            swaps.append(k + 1)
            k += 1
    swaps.reverse()
    return swaps


def random_decomposition(p: Perm, rng: random.Random, padding: int = 0) -> list[int]:
    """Another word in the s_i spelling ``p``.

    Descents are removed in random order, then ``padding`` cancelling pairs
    s_i s_i are spliced in at random positions.
    """
    t = list(p.table)
    swaps = []
    while True:
        descents = [k for k in range(len(t) - 1) if t[k] > t[k + 1]]
        if not descents:
            break
        k = rng.choice(descents)
        t[k], t[k + 1] = t[k + 1], t[k]
        swaps.append(k + 1)
    swaps.reverse()
    if p.degree >= 2:
        for _ in range(padding):
            i = rng.randint(1, p.degree - 1)
            at = rng.randint(0, len(swaps))
            swaps[at:at] = [i, i]
    return swaps


def recompose(word: Sequence[int], n: int) -> Perm:
    return compose_all([adjacent_transposition(i, n) for i in word], n)
