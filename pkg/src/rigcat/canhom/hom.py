"""Homomorphisms out of the finite-set skeleton, presented by basic maps.

A homomorphism is determined by objects x_n and isomorphisms τ_n : x_n -> n̲.
Its monoidality data point the colax way round:
φ⁺_{m,n} : x_{m+n} -> x_m + x_n, ε⁺ : x_0 -> 0 and ε• : x_1 -> 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .. import finperm as fp
from .. import skelrig as sk
from ..rigiface import AxiomReport, NonInvertible, RigInstance, Witness
from ..rigiface.report import FAIL
from .fcan import fcan_perm


class NonInvertibleData(ValueError):
    pass


class EndpointMismatch(ValueError):
    def __init__(self, message: str, index: int):
        super().__init__(f"{message} (at index {index})")
        self.index = index


class RecurrenceMismatch(ValueError):
    """The two recurrences for the basic maps disagree."""


class TargetMismatch(ValueError):
    pass


def _invert(S: RigInstance, f):
    try:
        if isinstance(f, fp.FinMap) and not f.is_bijective():
            raise NonInvertibleData(f"{S.show(f)} is not invertible")
        return S.inverse(f)
    except NonInvertible as exc:
        raise NonInvertibleData(f"{S.show(f)} is not invertible") from exc


def basic_maps_from_data(
    S: RigInstance, phi_plus: Callable, eps_plus, eps_dot, bound: int
) -> list:
    """τ_0 .. τ_bound from τ_0 = ε⁺ and τ_{n+1} = (ε• + τ_n) φ⁺_{1,n}.

    The mirrored recurrence τ'_{n+1} = (τ'_n + ε•) φ⁺_{n,1} is run alongside
    and must agree at every index.
    """
    for f in (eps_plus, eps_dot):
        _invert(S, f)
    tau, mirror = [eps_plus], [eps_plus]
    for n in range(bound):
        left, right = phi_plus(1, n), phi_plus(n, 1)
        _invert(S, left)
        _invert(S, right)
        tau.append(S.compose(S.msum(eps_dot, tau[n]), left))
        mirror.append(S.compose(S.msum(mirror[n], eps_dot), right))
        if tau[-1] != mirror[-1]:
            raise RecurrenceMismatch(
                f"recurrences disagree at n={n + 1}: {S.show(tau[-1])} vs {S.show(mirror[-1])}"
            )
    return tau


def closed_form_basic_maps(
    S: RigInstance, phi_plus: Callable, eps_plus, eps_dot, bound: int
) -> list:
    """τ_n = (ε• + ... + ε•)(id_{(n-2)x_1} + φ⁺_{1,1}) ... (id_{x_1} + φ⁺_{1,n-2}) φ⁺_{1,n-1}."""
    out = [eps_plus, eps_dot][: bound + 1]
    x1 = S.dom(eps_dot)
    for n in range(2, bound + 1):
        steps = [phi_plus(1, n - 1)]
        lead = x1
        for k in range(1, n - 1):
            # after k steps the shape is k copies of x_1 followed by x_{n-k}
            steps.append(S.msum(S.identity(lead), phi_plus(1, n - 1 - k)))
            lead = S.osum(lead, x1)
        eps_sum = eps_dot
        for _ in range(n - 1):
            eps_sum = S.msum(eps_sum, eps_dot)
        steps.append(eps_sum)
        out.append(S.compose_all(steps[::-1]))
    return out


class RigHom:
    """A homomorphism materialized on indices 0..bound.

    ``tau`` is live: the morphism action τ_n⁻¹ F_can(σ) τ_n always reads it.
    The φ tables are computed once by :func:`build_hom` and then frozen.
    """

    def __init__(self, target: RigInstance, objects: list, tau: list, phi_plus: dict, phi_dot: dict, label=""):
        self.target = target
        self.objects = list(objects)
        self.tau = list(tau)
        self._tau_inv = [target.inverse(t) for t in self.tau]
        self._phi_plus = phi_plus
        self._phi_dot = phi_dot
        self.label = label

    @property
    def bound(self) -> int:
        return len(self.tau) - 1

    @property
    def basic_maps(self) -> list:
        return list(self.tau)

    @property
    def eps_plus(self):
        return self.tau[0]

    @property
    def eps_dot(self):
        return self.tau[1]

    def obj(self, n: int):
        return self.objects[n]

    def on_morphism(self, sigma: fp.Perm):
        n = sigma.degree
        if n > self.bound:
            raise fp.IndexOutOfRange(f"degree {n} beyond materialized bound {self.bound}")
        S = self.target
        return S.compose(self._tau_inv[n], S.compose(fcan_perm(S, sigma), self.tau[n]))

    def phi_plus(self, m: int, n: int):
        try:
            return self._phi_plus[m, n]
        except KeyError:
            raise fp.IndexOutOfRange(f"φ⁺ at ({m},{n}) is beyond bound {self.bound}") from None

    def phi_dot(self, m: int, n: int):
        try:
            return self._phi_dot[m, n]
        except KeyError:
            raise fp.IndexOutOfRange(f"φ• at ({m},{n}) is beyond bound {self.bound}") from None

    def with_tau(self, n: int, new) -> "RigHom":
        """Copy with τ_n swapped but φ tables kept, for mutation tests."""
        tau = list(self.tau)
        tau[n] = new
        return RigHom(self.target, self.objects, tau, self._phi_plus, self._phi_dot, self.label + f"~tau{n}")

    def describe(self) -> list[str]:
        S = self.target
        return [S.show(t) for t in self.tau]

    def __repr__(self):
        return f"<RigHom {self.label or 'anon'} -> {self.target.name} to {self.bound}>"


def plus_indices(bound):
    return [(m, n) for m in range(bound + 1) for n in range(bound + 1 - m)]


def dot_indices(bound):
    return [(m, n) for m in range(bound + 1) for n in range(bound + 1) if m * n <= bound]


def monoidality_from_tau(hom: RigHom, m: int, n: int):
    """(φ⁺_{m,n}, φ•_{m,n}) = ((τ_m+τ_n)⁻¹ τ_{m+n}, (τ_m•τ_n)⁻¹ τ_{mn}) from live τ.

    φ• is None when mn exceeds the bound (and φ⁺ when m+n does).
    """
    S, tau = hom.target, hom.tau
    plus = dot = None
    if m + n <= hom.bound:
        plus = S.compose(S.inverse(S.msum(tau[m], tau[n])), tau[m + n])
    if m * n <= hom.bound and max(m, n) <= hom.bound:
        dot = S.compose(S.inverse(S.mprod(tau[m], tau[n])), tau[m * n])
    return plus, dot


def build_hom(S: RigInstance, tau: list, objects: list | None = None, bound: int | None = None, label="") -> RigHom:
    """F(x, τ): x_n on objects, τ_n⁻¹ F_can(σ) τ_n on permutations."""
    if bound is None:
        bound = len(tau) - 1
    if bound < 1:
        raise ValueError("a homomorphism needs τ_0 and τ_1 at least")
    if len(tau) <= bound:
        raise EndpointMismatch(f"only {len(tau)} basic maps for bound {bound}", len(tau))
    tau = list(tau[: bound + 1])
    if objects is None:
        objects = [S.unit(n) for n in range(bound + 1)]
    for n, t in enumerate(tau):
        if S.dom(t) != objects[n] or S.cod(t) != S.unit(n):
            raise EndpointMismatch(
                f"τ_{n} must map {objects[n]} to {S.unit(n)}, got {S.dom(t)} -> {S.cod(t)}", n
            )
        _invert(S, t)
    phi_plus = {
        (m, n): S.compose(S.inverse(S.msum(tau[m], tau[n])), tau[m + n]) for m, n in plus_indices(bound)
    }
    phi_dot = {
        (m, n): S.compose(S.inverse(S.mprod(tau[m], tau[n])), tau[m * n]) for m, n in dot_indices(bound)
    }
    return RigHom(S, objects, tau, phi_plus, phi_dot, label)


def canonical_hom(S: RigInstance, bound: int) -> RigHom:
    return build_hom(S, [S.identity(S.unit(n)) for n in range(bound + 1)], label="fcan")


def random_hom(S: RigInstance, bound: int, rng, label="random") -> RigHom:
    return build_hom(S, [S.random_iso(rng, S.unit(n)) for n in range(bound + 1)], label=label)


# -- the nine homomorphism axioms ------------------------------------------


def _check(name, S, bound, cases) -> AxiomReport:
    rep = AxiomReport(name, S.name, bound)
    for objs, args, fn in cases:
        rep.instances += 1
        try:
            lhs, rhs = fn()
            ok = lhs == rhs
            lt, rt = S.show(lhs), S.show(rhs)
        except (ValueError, KeyError) as exc:
            ok, lt, rt = False, f"error: {exc}", ""
        if not ok:
            rep.verdict = FAIL

            def replay(fn=fn):
                try:
                    lhs, rhs = fn()
                except (ValueError, KeyError):
                    return True
                return lhs != rhs

            rep.witness = Witness(tuple(objs), tuple(args), lt, rt, replay)
            break
    return rep


def _perm_pairs(m, n):
    return itertools.product(fp.all_perms(m), fp.all_perms(n))


def verify_hom_axioms(hom: RigHom, bound: int | None = None) -> list[AxiomReport]:
    """Naturality and coherence of the monoidality data, indices up to ``bound``."""
    S, F = hom.target, hom
    b = hom.bound if bound is None else min(bound, hom.bound)
    x = F.obj
    idx = lambda n: S.identity(x(n))  # noqa: E731
    out = []

    def a1():
        for m, n in plus_indices(b):
            for r, s in _perm_pairs(m, n):
                yield (m, n), (str(r), str(s)), lambda m=m, n=n, r=r, s=s: (
                    S.compose(S.msum(F.on_morphism(r), F.on_morphism(s)), F.phi_plus(m, n)),
                    S.compose(F.phi_plus(m, n), F.on_morphism(sk.sum_map(r, s))),
                )

    def a2():
        for m, n, p in itertools.product(range(b + 1), repeat=3):
            if m + n + p <= b:
                yield (m, n, p), (), lambda m=m, n=n, p=p: (
                    S.compose(S.msum(idx(m), F.phi_plus(n, p)), F.phi_plus(m, n + p)),
                    S.compose(S.msum(F.phi_plus(m, n), idx(p)), F.phi_plus(m + n, p)),
                )

    def a3():
        for m, n in plus_indices(b):
            yield (m, n), (), lambda m=m, n=n: (
                S.compose(S.comm(x(m), x(n)), F.phi_plus(m, n)),
                S.compose(F.phi_plus(n, m), F.on_morphism(sk.add_commutator(m, n))),
            )

    def a4():
        for n in range(b + 1):
            yield (0, n), ("left",), lambda n=n: (
                S.compose(S.msum(F.eps_plus, idx(n)), F.phi_plus(0, n)), idx(n)
            )
            yield (n, 0), ("right",), lambda n=n: (
                S.compose(S.msum(idx(n), F.eps_plus), F.phi_plus(n, 0)), idx(n)
            )

    def a5():
        for m, n in dot_indices(b):
            for r, s in _perm_pairs(m, n):
                yield (m, n), (str(r), str(s)), lambda m=m, n=n, r=r, s=s: (
                    S.compose(S.mprod(F.on_morphism(r), F.on_morphism(s)), F.phi_dot(m, n)),
                    S.compose(F.phi_dot(m, n), F.on_morphism(sk.prod_map(r, s))),
                )

    def a6():
        for m, n, p in itertools.product(range(b + 1), repeat=3):
            if m * n * p <= b and m * n <= b and n * p <= b:
                yield (m, n, p), (), lambda m=m, n=n, p=p: (
                    S.compose(S.mprod(idx(m), F.phi_dot(n, p)), F.phi_dot(m, n * p)),
                    S.compose(S.mprod(F.phi_dot(m, n), idx(p)), F.phi_dot(m * n, p)),
                )

    def a7():
        for n in range(b + 1):
            yield (1, n), ("left",), lambda n=n: (
                S.compose(S.mprod(F.eps_dot, idx(n)), F.phi_dot(1, n)), idx(n)
            )
            yield (n, 1), ("right",), lambda n=n: (
                S.compose(S.mprod(idx(n), F.eps_dot), F.phi_dot(n, 1)), idx(n)
            )

    def a8():
        for m, n, p in itertools.product(range(b + 1), repeat=3):
            if m * (n + p) <= b and n + p <= b:
                yield (m, n, p), (), lambda m=m, n=n, p=p: (
                    S.compose(S.msum(F.phi_dot(m, n), F.phi_dot(m, p)), F.phi_plus(m * n, m * p)),
                    S.compose(S.mprod(idx(m), F.phi_plus(n, p)), F.phi_dot(m, n + p)),
                )

    def a9():
        for m, n, p in itertools.product(range(b + 1), repeat=3):
            if (m + n) * p <= b and m + n <= b:
                yield (m, n, p), (), lambda m=m, n=n, p=p: (
                    S.compose(
                        S.msum(F.phi_dot(m, p), F.phi_dot(n, p)),
                        S.compose(F.phi_plus(m * p, n * p), F.on_morphism(sk.rdist(m, n, p))),
                    ),
                    S.compose(
                        S.rdist(x(m), x(n), x(p)),
                        S.compose(S.mprod(F.phi_plus(m, n), idx(p)), F.phi_dot(m + n, p)),
                    ),
                )

    for name, gen in [("HOM-A1", a1), ("HOM-A2", a2), ("HOM-A3", a3), ("HOM-A4", a4), ("HOM-A5", a5),
                      ("HOM-A6", a6), ("HOM-A7", a7), ("HOM-A8", a8), ("HOM-A9", a9)]:
        out.append(_check(name, S, b, gen()))
    return out


def compose_homs(G: RigHom, F: RigHom) -> RigHom:
    """G ∘ F for homomorphisms into the finite-set skeleton.

    Object and morphism actions compose; the monoidality data compose as
    φ^{GF}_{m,n} = φ^G_{Fm,Fn} G(φ^F_{m,n}) and ε^{GF} = ε^G G(ε^F).
    The basic maps of the composite are recovered from that data.
    """
    S = G.target
    if F.target.name != "fset":
        raise TargetMismatch("only homomorphisms into the finite-set skeleton can be precomposed")
    b = min(F.bound, G.bound)
    objects = [G.obj(F.obj(n)) for n in range(b + 1)]

    def phi_plus(m, n):
        return S.compose(G.phi_plus(F.obj(m), F.obj(n)), G.on_morphism(F.phi_plus(m, n)))

    def on(f):
        # F's data are permutations of x_n; G acts on them through its own τ
        return G.on_morphism(f)

    eps_plus = S.compose(G.eps_plus, on(F.eps_plus))
    eps_dot = S.compose(G.eps_dot, on(F.eps_dot))
    tau = basic_maps_from_data(S, phi_plus, eps_plus, eps_dot, b)
    return build_hom(S, tau, objects, label=f"{G.label}∘{F.label}")


@dataclass
class HomData:
    """The full data of a homomorphism, for comparing two presentations."""

    objects: tuple
    morphisms: tuple
    phi_plus: tuple
    phi_dot: tuple


def hom_data(hom: RigHom) -> HomData:
    b = hom.bound
    return HomData(
        tuple(hom.objects),
        tuple(hom.on_morphism(p) for n in range(b + 1) for p in fp.all_perms(n)),
        tuple(hom.phi_plus(m, n) for m, n in plus_indices(b)),
        tuple(hom.phi_dot(m, n) for m, n in dot_indices(b)),
    )
