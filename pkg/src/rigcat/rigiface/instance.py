"""Computational presentations of left-semistrict rig categories.

Objects of both concrete instances are natural numbers: ``n`` stands for the
ordinal [n] in the finite-set skeleton and for k^n among matrices.  Every
structural isomorphism except the additive commutator ``c`` and the right
distributor ``d'`` is an identity, so neither instance stores them.
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod
from typing import Any, Iterator

from .. import finperm as fp
from .. import skelrig as sk
from .matrix import ExactMatrix, NonInvertible, perm_matrix, random_invertible, random_matrix


class EnumerationUnsupported(RuntimeError):
    """The instance cannot list the requested hom-set."""


class RigInstance(ABC):
    """Required capabilities of a computationally presented rig category."""

    name: str = "abstract"
    zero: Any = 0
    one: Any = 1
    groupoid: bool = False

    @abstractmethod
    def objects(self, bound: int) -> list: ...

    @abstractmethod
    def identity(self, x): ...

    @abstractmethod
    def dom(self, f): ...

    @abstractmethod
    def cod(self, f): ...

    @abstractmethod
    def compose(self, g, f):
        """``g`` after ``f``; raises DomainMismatch on bad endpoints."""

    @abstractmethod
    def inverse(self, f): ...

    @abstractmethod
    def osum(self, x, y): ...

    @abstractmethod
    def oprod(self, x, y): ...

    @abstractmethod
    def msum(self, f, g): ...

    @abstractmethod
    def mprod(self, f, g): ...

    @abstractmethod
    def comm(self, x, y):
        """Additive commutator c_{x,y} : x + y -> y + x."""

    @abstractmethod
    def rdist(self, x, y, z):
        """Right distributor d'_{x,y,z} : (x + y) z -> xz + yz."""

    def mult_comm(self, x, y):
        """Multiplicative commutator, for instances that choose one."""
        raise NotImplementedError(f"{self.name} has no multiplicative commutator")

    @property
    def has_mult_comm(self) -> bool:
        return False

    def automorphisms(self, x) -> Iterator:
        raise EnumerationUnsupported(f"{self.name} cannot enumerate Aut({x})")

    @abstractmethod
    def random_morphism(self, rng: random.Random, x, y=None):
        """A random morphism out of ``x``; lands in ``y`` or a random target."""

    @abstractmethod
    def random_iso(self, rng: random.Random, x): ...

    @abstractmethod
    def show(self, f) -> str: ...

    def unit(self, n: int):
        """n̲ = 1 + ... + 1 (n summands), with 0̲ the zero object."""
        out = self.zero
        for _ in range(n):
            out = self.osum(out, self.one)
        return out

    def compose_all(self, maps, x=None):
        if not maps:
            return self.identity(x)
        out = maps[-1]
        for g in reversed(maps[:-1]):
            out = self.compose(g, out)
        return out

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class FSetInstance(RigInstance):
    """The skeleton of finite sets and bijections."""

    name = "fset"
    groupoid = True

    def objects(self, bound):
        return list(range(bound + 1))

    def identity(self, x):
        return fp.identity(x)

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def compose(self, g, f):
        return fp.compose(g, f)

    def inverse(self, f):
        return fp.invert(f)

    def osum(self, x, y):
        return x + y

    def oprod(self, x, y):
        return x * y

    def msum(self, f, g):
        return sk.sum_map(f, g)

    def mprod(self, f, g):
        return sk.prod_map(f, g)

    def comm(self, x, y):
        return sk.add_commutator(x, y)

    def rdist(self, x, y, z):
        return sk.rdist(x, y, z)

    def mult_comm(self, x, y):
        return sk.mult_commutator(x, y)

    @property
    def has_mult_comm(self):
        return True

    def automorphisms(self, x):
        return fp.all_perms(x)

    def random_morphism(self, rng, x, y=None):
        return fp.random_perm(x, rng)

    def random_iso(self, rng, x):
        return fp.random_perm(x, rng)

    def show(self, f):
        return str(f)


class MatInstance(RigInstance):
    """Matrices over the rationals; a morphism m -> n is an n x m matrix."""

    name = "mat"

    def __init__(self, max_random_size: int = 3):
        self.max_random_size = max_random_size

    def objects(self, bound):
        return list(range(bound + 1))

    def identity(self, x):
        return ExactMatrix.identity(x)

    def dom(self, f):
        return f.cols

    def cod(self, f):
        return f.rows

    def compose(self, g, f):
        return g @ f

    def inverse(self, f):
        return f.inverse()

    def osum(self, x, y):
        return x + y

    def oprod(self, x, y):
        return x * y

    def msum(self, f, g):
        return f.direct_sum(g)

    def mprod(self, f, g):
        return f.block_product(g)

    def comm(self, x, y):
        return _perm_matrix_cached(("c", x, y))

    def rdist(self, x, y, z):
        return _perm_matrix_cached(("d", x, y, z))

    def random_morphism(self, rng, x, y=None):
        if y is None:
            y = rng.randint(0, self.max_random_size)
        return random_matrix(y, x, rng)

    def random_iso(self, rng, x):
        return random_invertible(x, rng)

    def show(self, f):
        return str(f)


_PM_CACHE: dict = {}


def _perm_matrix_cached(key):
    m = _PM_CACHE.get(key)
    if m is None:
        p = sk.add_commutator(*key[1:]) if key[0] == "c" else sk.rdist(*key[1:])
        m = _PM_CACHE[key] = perm_matrix(p)
    return m


class MutantInstance(RigInstance):
    """An fset instance with one structural family deliberately broken."""

    FAMILIES = {
        "comm-id": "additive commutator replaced by the identity",
        "dprime-id": "right distributor replaced by the identity",
        "sum-left": "f + g computed as f + id",
        "prod-left": "f • g computed as f • id",
    }

    def __init__(self, family: str, base: RigInstance | None = None):
        if family not in self.FAMILIES:
            raise ValueError(f"unknown mutation {family!r}")
        self.base = base or FSetInstance()
        self.family = family
        self.name = f"{self.base.name}-mutant-{family}"
        self.groupoid = self.base.groupoid

    def objects(self, bound):
        return self.base.objects(bound)

    def identity(self, x):
        return self.base.identity(x)

    def dom(self, f):
        return self.base.dom(f)

    def cod(self, f):
        return self.base.cod(f)

    def compose(self, g, f):
        return self.base.compose(g, f)

    def inverse(self, f):
        return self.base.inverse(f)

    def osum(self, x, y):
        return self.base.osum(x, y)

    def oprod(self, x, y):
        return self.base.oprod(x, y)

    def msum(self, f, g):
        if self.family == "sum-left":
            g = self.base.identity(self.base.dom(g))
        return self.base.msum(f, g)

    def mprod(self, f, g):
        if self.family == "prod-left":
            g = self.base.identity(self.base.dom(g))
        return self.base.mprod(f, g)

    def comm(self, x, y):
        if self.family == "comm-id":
            return self.base.identity(self.base.osum(x, y))
        return self.base.comm(x, y)

    def rdist(self, x, y, z):
        if self.family == "dprime-id":
            return self.base.identity(self.base.oprod(self.base.osum(x, y), z))
        return self.base.rdist(x, y, z)

    def mult_comm(self, x, y):
        return self.base.mult_comm(x, y)

    @property
    def has_mult_comm(self):
        return self.base.has_mult_comm

    def automorphisms(self, x):
        return self.base.automorphisms(x)

    def random_morphism(self, rng, x, y=None):
        return self.base.random_morphism(rng, x, y)

    def random_iso(self, rng, x):
        return self.base.random_iso(rng, x)

    def show(self, f):
        return self.base.show(f)


def fset_instance() -> FSetInstance:
    return FSetInstance()


def mat_instance() -> MatInstance:
    return MatInstance()


def instance_by_name(name: str) -> RigInstance:
    if name == "fset":
        return FSetInstance()
    if name == "mat":
        return MatInstance()
    prefix = "fset-mutant-"
    if name.startswith(prefix):
        return MutantInstance(name[len(prefix):])
    raise ValueError(f"unknown target {name!r}")


def target_names() -> list[str]:
    return ["fset", "mat"] + [f"fset-mutant-{k}" for k in MutantInstance.FAMILIES]


def v_iso(inst: RigInstance, a, b, c, d):
    """(a + b) + (c + d) -> (a + c) + (b + d), as id_a + c_{b,c} + id_d."""
    return inst.msum(inst.msum(inst.identity(a), inst.comm(b, c)), inst.identity(d))


def d_prime_recursive(inst: RigInstance, x, y, n: int):
    """d'_{x,y,n̲} rebuilt from additive commutators alone.

    Unrolls d'_{x,y,k̲} = (id_{x(k-1)} + c_{y(k-1), x} + id_y)(d'_{x,y,k-1} + id_{x+y}).
    """
    xy = inst.osum(x, y)
    if n <= 1:
        return inst.identity(inst.oprod(xy, inst.unit(n)))
    out = inst.identity(xy)  # d'_{x,y,1}
    for k in range(2, n + 1):
        prev = inst.unit(k - 1)
        swap = inst.msum(
            inst.msum(inst.identity(inst.oprod(x, prev)), inst.comm(inst.oprod(y, prev), x)),
            inst.identity(y),
        )
        out = inst.compose(swap, inst.msum(out, inst.identity(xy)))
    return out


__all__ = [
    "EnumerationUnsupported",
    "FSetInstance",
    "MatInstance",
    "MutantInstance",
    "NonInvertible",
    "RigInstance",
    "d_prime_recursive",
    "fset_instance",
    "instance_by_name",
    "mat_instance",
    "target_names",
    "v_iso",
]
