"""Rig transformations between homomorphisms, and the uniqueness search."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .. import finperm as fp
from ..rigiface import AxiomReport, EnumerationUnsupported, RigInstance, Witness
from ..rigiface.report import FAIL
from .fcan import fcan_generator, fcan_perm
from .hom import RigHom, TargetMismatch, canonical_hom, dot_indices, plus_indices


@dataclass
class RigTransformation:
    """ξ : F => G with components ξ_n : x_n -> x'_n."""

    source: RigHom
    target: RigHom
    components: list

    @property
    def bound(self) -> int:
        return len(self.components) - 1

    def describe(self) -> list[str]:
        S = self.source.target
        return [S.show(c) for c in self.components]


def _first_failure(name, S, bound, cases) -> AxiomReport:
    rep = AxiomReport(name, S.name, bound)
    for objs, args, fn in cases:
        rep.instances += 1
        lhs, rhs = fn()
        if lhs != rhs:
            rep.verdict = FAIL
            rep.witness = Witness(
                tuple(objs), tuple(args), S.show(lhs), S.show(rhs), lambda fn=fn: (lambda a, b: a != b)(*fn())
            )
            break
    return rep


def check_transformation(xi: RigTransformation, samples: int = 100, seed: int = 0) -> list[AxiomReport]:
    """Naturality on generators and on random permutations, then both monoidalities."""
    F, G = xi.source, xi.target
    S = F.target
    b = xi.bound
    c = xi.components

    def nat(sigma, n):
        return lambda: (S.compose(G.on_morphism(sigma), c[n]), S.compose(c[n], F.on_morphism(sigma)))

    def gens():
        for n in range(2, b + 1):
            for i in range(1, n):
                yield (n, i), (), nat(fp.adjacent_transposition(i, n), n)

    def randoms():
        rng = random.Random(seed)
        for n in range(b + 1):
            for _ in range(samples):
                sigma = fp.random_perm(n, rng)
                yield (n,), (str(sigma),), nat(sigma, n)

    def plus():
        yield (0,), ("unit",), lambda: (S.compose(G.eps_plus, c[0]), F.eps_plus)
        for m, n in plus_indices(b):
            yield (m, n), (), lambda m=m, n=n: (
                S.compose(G.phi_plus(m, n), c[m + n]),
                S.compose(S.msum(c[m], c[n]), F.phi_plus(m, n)),
            )

    def dot():
        yield (1,), ("unit",), lambda: (S.compose(G.eps_dot, c[1]), F.eps_dot)
        for m, n in dot_indices(b):
            yield (m, n), (), lambda m=m, n=n: (
                S.compose(G.phi_dot(m, n), c[m * n]),
                S.compose(S.mprod(c[m], c[n]), F.phi_dot(m, n)),
            )

    return [
        _first_failure("RT1-gen", S, b, gens()),
        _first_failure("RT1-rand", S, b, randoms()),
        _first_failure("RT2", S, b, plus()),
        _first_failure("RT3", S, b, dot()),
    ]


def tau_transformation(hom: RigHom) -> RigTransformation:
    """τ : F => F_can, whose components are the basic maps."""
    return RigTransformation(hom, canonical_hom(hom.target, hom.bound), hom.basic_maps)


def unique_iso(hom1: RigHom, hom2: RigHom) -> RigTransformation:
    """The isomorphism hom1 => hom2 with components (τ'_n)⁻¹ τ_n."""
    if hom1.target is not hom2.target and hom1.target.name != hom2.target.name:
        raise TargetMismatch(f"{hom1.target.name} vs {hom2.target.name}")
    S = hom1.target
    b = min(hom1.bound, hom2.bound)
    comps = [S.compose(S.inverse(hom2.tau[n]), hom1.tau[n]) for n in range(b + 1)]
    return RigTransformation(hom1, hom2, comps)


def vertical(eta: RigTransformation, xi: RigTransformation) -> RigTransformation:
    """η after ξ."""
    S = xi.source.target
    b = min(eta.bound, xi.bound)
    return RigTransformation(xi.source, eta.target, [S.compose(eta.components[n], xi.components[n]) for n in range(b + 1)])


# -- endomorphisms of F_can ------------------------------------------------


def _natural(S, xi_n, n):
    for i in range(1, n):
        g = fcan_generator(S, i, n)
        if S.compose(g, xi_n) != S.compose(xi_n, g):
            return False
    return True


def _monoidal(S, xi):
    b = len(xi) - 1
    if xi[0] != S.identity(S.unit(0)) or xi[1] != S.identity(S.unit(1)):
        return False
    for m, n in plus_indices(b):
        if xi[m + n] != S.msum(xi[m], xi[n]):
            return False
    for m, n in dot_indices(b):
        if xi[m * n] != S.mprod(xi[m], xi[n]):
            return False
    return True


def find_endomorphisms(S: RigInstance, bound: int, mode: str = "pruned") -> list[list]:
    """All families (ξ_n) in the product of Aut(n̲), n <= bound, that qualify.

    ``pruned`` builds ξ_{n+1} = ξ_n + ξ_1 from ξ_0, ξ_1 and checks the rest;
    ``full`` walks the whole product; ``naturality`` keeps only the
    naturality squares and drops monoidality.
    """
    if mode not in ("pruned", "full", "naturality"):
        raise ValueError(f"unknown search mode {mode!r}")
    try:
        autos = [list(S.automorphisms(S.unit(n))) for n in range(bound + 1)]
    except EnumerationUnsupported:
        raise
    if mode == "naturality":
        per_degree = [[a for a in autos[n] if _natural(S, a, n)] for n in range(bound + 1)]
        return [list(t) for t in itertools.product(*per_degree)]
    found = []
    if mode == "pruned":
        for x0, x1 in itertools.product(autos[0], autos[1] if bound >= 1 else [None]):
            xi = [x0] if x1 is None else [x0, x1]
            for n in range(1, bound):
                xi.append(S.msum(xi[n], x1))
            if all(_natural(S, xi[n], n) for n in range(bound + 1)) and (bound < 1 or _monoidal(S, xi)):
                found.append(xi)
        return found
    for xi in itertools.product(*autos):
        xi = list(xi)
        if all(_natural(S, xi[n], n) for n in range(bound + 1)) and (bound < 1 or _monoidal(S, xi)):
            found.append(xi)
    return found


def unique_endomorphism_check(S: RigInstance, bound: int, mode: str = "pruned") -> AxiomReport:
    """Pass when the identity family is the only endomorphism of F_can found."""
    sols = find_endomorphisms(S, bound, mode)
    ident = [S.identity(S.unit(n)) for n in range(bound + 1)]
    rep = AxiomReport(f"UNIQUE-{mode}", S.name, bound, instances=len(sols))
    rep.note = f"{len(sols)} solution(s)"
    if sols != [ident]:
        rep.verdict = FAIL
        other = next((s for s in sols if s != ident), None)
        shown = " ".join(S.show(f) for f in other) if other else "none"
        rep.witness = Witness(
            (bound,), (mode,), shown, " ".join(S.show(f) for f in ident),
            lambda: find_endomorphisms(S, bound, mode) != [ident],
        )
    return rep


def fcan_centralizer_sizes(S: RigInstance, bound: int) -> list[int]:
    """How many automorphisms of n̲ commute with the whole F_can image, per n."""
    return [
        sum(1 for a in S.automorphisms(S.unit(n)) if _natural(S, a, n)) for n in range(bound + 1)
    ]
