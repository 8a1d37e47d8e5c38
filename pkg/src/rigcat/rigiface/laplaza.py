"""Bounded exhaustive check of the rig-category coherence diagrams.

In a left-semistrict instance every structural map apart from ``c`` and
``d'`` is an identity, so each diagram reduces to an equation between two
composites of c, d', sums, products and identities.  Diagrams whose legs
only involve trivial maps are still evaluated once per object tuple: the
check then confirms that the objects at both ends agree on the nose.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable

from .instance import EnumerationUnsupported, RigInstance
from .report import FAIL, PASS, SKIP, AxiomReport, Witness


class NotStrict(ValueError):
    """Two objects that should coincide on the nose do not."""


def strict(S: RigInstance, *objs):
    """Identity between objects that must be equal in a semistrict instance."""
    first = objs[0]
    for o in objs[1:]:
        if o != first:
            raise NotStrict(f"{first} != {o}")
    return S.identity(first)


@dataclass(frozen=True)
class Diagram:
    axiom: str
    arity: int
    legs: Callable
    vacuous: bool = False
    morphisms: bool = False  # naturality: one morphism per object variable
    needs_mult_comm: bool = False
    sampled: bool = False  # composable morphism pairs, always sampled


def _legs(fn):
    return fn


# Each leg function gets (S, objects) or (S, objects, morphisms) and returns (lhs, rhs).

def _a11_l(S, o):
    x, y, z, t = o
    return (
        strict(S, S.oprod(x, S.osum(y, S.osum(z, t))), S.osum(S.osum(S.oprod(x, y), S.oprod(x, z)), S.oprod(x, t))),
        strict(S, S.oprod(x, S.osum(S.osum(y, z), t)), S.osum(S.oprod(x, S.osum(y, z)), S.oprod(x, t)),
               S.osum(S.osum(S.oprod(x, y), S.oprod(x, z)), S.oprod(x, t))),
    )


def _a11_r(S, o):
    x, y, z, t = o
    lhs = S.compose(
        S.msum(S.identity(S.oprod(x, t)), S.rdist(y, z, t)), S.rdist(x, S.osum(y, z), t)
    )
    rhs = S.compose(
        S.msum(S.rdist(x, y, t), S.identity(S.oprod(z, t))), S.rdist(S.osum(x, y), z, t)
    )
    return lhs, rhs


def _a12_l(S, o):
    x, y, z = o
    return S.mprod(S.identity(x), S.comm(y, z)), S.comm(S.oprod(x, y), S.oprod(x, z))


def _a12_r(S, o):
    x, y, z = o
    lhs = S.compose(S.rdist(z, y, x), S.mprod(S.comm(y, z), S.identity(x)))
    rhs = S.compose(S.comm(S.oprod(y, x), S.oprod(z, x)), S.rdist(y, z, x))
    return lhs, rhs


def _a13_l(S, o):
    x, y = o
    z = S.zero
    src = S.oprod(x, S.osum(z, y))
    return strict(S, src, S.osum(S.oprod(x, z), S.oprod(x, y)), S.osum(z, S.oprod(x, y))), strict(S, src, S.oprod(x, y))


def _a13_r(S, o):
    x, y = o
    z = S.zero
    lhs = S.compose(strict(S, S.osum(S.oprod(z, y), S.oprod(x, y)), S.oprod(x, y)), S.rdist(z, x, y))
    return lhs, strict(S, S.oprod(S.osum(z, x), y), S.oprod(x, y))


def _a14_l(S, o):
    x, y = o
    z = S.zero
    src = S.oprod(x, S.osum(y, z))
    return strict(S, src, S.osum(S.oprod(x, y), S.oprod(x, z)), S.oprod(x, y)), strict(S, src, S.oprod(x, y))


def _a14_r(S, o):
    x, y = o
    z = S.zero
    lhs = S.compose(strict(S, S.osum(S.oprod(x, y), S.oprod(z, y)), S.oprod(x, y)), S.rdist(x, z, y))
    return lhs, strict(S, S.oprod(S.osum(x, z), y), S.oprod(x, y))


def _a21(S, o):
    x, y, z, t = o
    lhs = S.mprod(S.identity(x), S.rdist(z, t, y))
    rhs = S.rdist(S.oprod(x, z), S.oprod(x, t), y)
    return lhs, rhs


def _a22(S, o):
    x, y = o
    z = S.zero
    src = S.oprod(x, S.oprod(z, y))
    return (
        strict(S, src, S.oprod(S.oprod(x, z), y), S.oprod(z, y), z),
        strict(S, src, S.oprod(x, z), z),
    )


def _a31_a(S, o):
    x, y, z, t = o
    src = S.oprod(S.oprod(x, y), S.osum(z, t))
    return (
        strict(S, src, S.osum(S.oprod(S.oprod(x, y), z), S.oprod(S.oprod(x, y), t))),
        strict(S, src, S.oprod(x, S.oprod(y, S.osum(z, t))), S.oprod(x, S.osum(S.oprod(y, z), S.oprod(y, t))),
               S.osum(S.oprod(x, S.oprod(y, z)), S.oprod(x, S.oprod(y, t)))),
    )


def _a31_b(S, o):
    x, y = o
    z = S.zero
    src = S.oprod(S.oprod(x, y), z)
    return strict(S, src, z), strict(S, src, S.oprod(x, S.oprod(y, z)), S.oprod(x, z), z)


def _a32_a(S, o):
    x, y, z, t = o
    lhs = S.compose(S.rdist(S.oprod(t, y), S.oprod(z, y), x), S.mprod(S.rdist(t, z, y), S.identity(x)))
    rhs = S.rdist(t, z, S.oprod(y, x))
    return lhs, rhs


def _a32_b(S, o):
    x, y = o
    z = S.zero
    src = S.oprod(S.oprod(z, x), y)
    return strict(S, src, S.oprod(z, y), z), strict(S, src, S.oprod(z, S.oprod(x, y)), z)


def _a41(S, o):
    from .instance import v_iso

    x, y, z, t = o
    xz, xt, yz, yt = S.oprod(x, z), S.oprod(x, t), S.oprod(y, z), S.oprod(y, t)
    lhs = S.compose(v_iso(S, xz, xt, yz, yt), S.rdist(x, y, S.osum(z, t)))
    rhs = S.msum(S.rdist(x, y, z), S.rdist(x, y, t))
    return lhs, rhs


def _a42_a(S, o):
    x, y = o
    z = S.zero
    lhs = S.compose(strict(S, S.osum(S.oprod(x, z), S.oprod(y, z)), z), S.rdist(x, y, z))
    return lhs, strict(S, S.oprod(S.osum(x, y), z), z)


def _a42_b(S, o):
    x, y = o
    z = S.zero
    src = S.oprod(z, S.osum(x, y))
    return strict(S, src, S.osum(S.oprod(z, x), S.oprod(z, y)), z), strict(S, src, z)


def _a51_l(S, o):
    x, y = o
    u = S.one
    src = S.oprod(u, S.osum(x, y))
    return strict(S, src, S.osum(S.oprod(u, x), S.oprod(u, y)), S.osum(x, y)), strict(S, src, S.osum(x, y))


def _a51_r(S, o):
    x, y = o
    u = S.one
    lhs = S.compose(strict(S, S.osum(S.oprod(x, u), S.oprod(y, u)), S.osum(x, y)), S.rdist(x, y, u))
    return lhs, strict(S, S.oprod(S.osum(x, y), u), S.osum(x, y))


def _a52(S, o):
    u = S.one
    return strict(S, S.oprod(u, u), u), S.identity(u)


def _sc9(S, o):
    z = S.zero
    return strict(S, S.oprod(z, z), z), S.identity(z)


def _csc2_l(S, o):
    x, y, z = o
    lhs = S.compose(S.msum(S.mult_comm(x, z), S.mult_comm(y, z)), S.rdist(x, y, z))
    return lhs, S.mult_comm(S.osum(x, y), z)


def _csc2_r(S, o):
    (x,) = o
    return S.mult_comm(x, S.zero), strict(S, S.oprod(x, S.zero), S.oprod(S.zero, x))


def _sm_sym(comm):
    def legs(S, o):
        x, y = o
        c = comm(S)
        return S.compose(c(y, x), c(x, y)), S.identity(S.osum(x, y) if comm is _add else S.oprod(x, y))
    return legs


def _add(S):
    return S.comm


def _mul(S):
    return S.mult_comm


def _sm_hex_add(S, o):
    x, y, z = o
    lhs = S.comm(x, S.osum(y, z))
    rhs = S.compose(S.msum(S.identity(y), S.comm(x, z)), S.msum(S.comm(x, y), S.identity(z)))
    return lhs, rhs


def _sm_hex_mul(S, o):
    x, y, z = o
    lhs = S.mult_comm(x, S.oprod(y, z))
    rhs = S.compose(S.mprod(S.identity(y), S.mult_comm(x, z)), S.mprod(S.mult_comm(x, y), S.identity(z)))
    return lhs, rhs


def _sm_unit_add(S, o):
    (x,) = o
    return S.comm(S.zero, x), S.identity(x)


def _sm_unit_mul(S, o):
    (x,) = o
    return S.mult_comm(S.one, x), S.identity(x)


def _nat_c(S, o, m):
    f, g = m
    lhs = S.compose(S.comm(S.cod(f), S.cod(g)), S.msum(f, g))
    rhs = S.compose(S.msum(g, f), S.comm(S.dom(f), S.dom(g)))
    return lhs, rhs


def _nat_d(S, o, m):
    f, g, h = m
    lhs = S.compose(S.rdist(S.cod(f), S.cod(g), S.cod(h)), S.mprod(S.msum(f, g), h))
    rhs = S.compose(S.msum(S.mprod(f, h), S.mprod(g, h)), S.rdist(S.dom(f), S.dom(g), S.dom(h)))
    return lhs, rhs


def _nat_cm(S, o, m):
    f, g = m
    lhs = S.compose(S.mult_comm(S.cod(f), S.cod(g)), S.mprod(f, g))
    rhs = S.compose(S.mprod(g, f), S.mult_comm(S.dom(f), S.dom(g)))
    return lhs, rhs


def _fun(op):
    def legs(S, o, m):
        f1, f2, g1, g2 = m
        return S.compose(op(S)(f2, g2), op(S)(f1, g1)), op(S)(S.compose(f2, f1), S.compose(g2, g1))
    return legs


def _fun_id(op, obj):
    def legs(S, o):
        x, y = o
        return op(S)(S.identity(x), S.identity(y)), S.identity(obj(S)(x, y))
    return legs


def _msum_of(S):
    return S.msum


def _mprod_of(S):
    return S.mprod


def _osum_of(S):
    return S.osum


def _oprod_of(S):
    return S.oprod


DIAGRAMS: list[Diagram] = [
    Diagram("A1.1-L", 4, _a11_l, vacuous=True),
    Diagram("A1.1-R", 4, _a11_r),
    Diagram("A1.2-L", 3, _a12_l),
    Diagram("A1.2-R", 3, _a12_r),
    Diagram("A1.3-L", 2, _a13_l, vacuous=True),
    Diagram("A1.3-R", 2, _a13_r),
    Diagram("A1.4-L", 2, _a14_l, vacuous=True),
    Diagram("A1.4-R", 2, _a14_r),
    Diagram("A2.1", 4, _a21),
    Diagram("A2.2", 2, _a22, vacuous=True),
    Diagram("A3.1-a", 4, _a31_a, vacuous=True),
    Diagram("A3.1-b", 2, _a31_b, vacuous=True),
    Diagram("A3.2-a", 4, _a32_a),
    Diagram("A3.2-b", 2, _a32_b, vacuous=True),
    Diagram("A4.1", 4, _a41),
    Diagram("A4.2-a", 2, _a42_a),
    Diagram("A4.2-b", 2, _a42_b, vacuous=True),
    Diagram("A5.1-L", 2, _a51_l, vacuous=True),
    Diagram("A5.1-R", 2, _a51_r),
    Diagram("A5.2", 0, _a52, vacuous=True),
    Diagram("CSC2-L", 3, _csc2_l, needs_mult_comm=True),
    Diagram("CSC2-R", 1, _csc2_r, needs_mult_comm=True),
    Diagram("FUN+", 2, _fun(_msum_of), sampled=True),
    Diagram("FUN+-id", 2, _fun_id(_msum_of, _osum_of)),
    Diagram("FUN•", 2, _fun(_mprod_of), sampled=True),
    Diagram("FUN•-id", 2, _fun_id(_mprod_of, _oprod_of)),
    Diagram("NAT-c", 2, _nat_c, morphisms=True),
    Diagram("NAT-c'", 2, _nat_cm, morphisms=True, needs_mult_comm=True),
    Diagram("NAT-d'", 3, _nat_d, morphisms=True),
    Diagram("SC9", 0, _sc9, vacuous=True),
    Diagram("SM+-hex", 3, _sm_hex_add),
    Diagram("SM+-sym", 2, _sm_sym(_add)),
    Diagram("SM+-unit", 1, _sm_unit_add),
    Diagram("SM•-hex", 3, _sm_hex_mul, needs_mult_comm=True),
    Diagram("SM•-sym", 2, _sm_sym(_mul), needs_mult_comm=True),
    Diagram("SM•-unit", 1, _sm_unit_mul, needs_mult_comm=True),
]


def axiom_ids() -> list[str]:
    return sorted(d.axiom for d in DIAGRAMS)


def _evaluate(S, legs, objs, morphs):
    """Returns (ok, lhs_text, rhs_text)."""
    try:
        lhs, rhs = legs(S, objs) if morphs is None else legs(S, objs, morphs)
    except (NotStrict, ValueError) as exc:
        return False, f"error: {exc}", ""
    if lhs == rhs:
        return True, "", ""
    return False, S.show(lhs), S.show(rhs)


def _cases(S: RigInstance, d: Diagram, bound: int, samples: int, rng: random.Random):
    """Yield (objects, morphisms-or-None) in a deterministic order."""
    objs = S.objects(bound)
    if d.sampled:
        # f1: x -> x', f2: x' -> x'', g1: y -> y', g2: y' -> y''
        for _ in range(samples):
            x, y = rng.choice(objs), rng.choice(objs)
            if S.groupoid:
                f1, f2 = S.random_morphism(rng, x), S.random_morphism(rng, x)
                g1, g2 = S.random_morphism(rng, y), S.random_morphism(rng, y)
            else:
                f1 = S.random_morphism(rng, x, rng.choice(objs))
                f2 = S.random_morphism(rng, S.cod(f1), rng.choice(objs))
                g1 = S.random_morphism(rng, y, rng.choice(objs))
                g2 = S.random_morphism(rng, S.cod(g1), rng.choice(objs))
            yield (x, y), (f1, f2, g1, g2)
        return
    for tup in itertools.product(objs, repeat=d.arity):
        if not d.morphisms:
            yield tup, None
        elif S.groupoid:
            try:
                hom_sets = [list(S.automorphisms(x)) for x in tup]
            except EnumerationUnsupported:
                hom_sets = None
            if hom_sets is not None:
                for ms in itertools.product(*hom_sets):
                    yield tup, ms
                continue
            yield tup, tuple(S.random_morphism(rng, x) for x in tup)
    if d.morphisms and not S.groupoid:
        for _ in range(samples):
            tup = tuple(rng.choice(objs) for _ in range(d.arity))
            yield tup, tuple(S.random_morphism(rng, x, rng.choice(objs)) for x in tup)


def check_diagram(S: RigInstance, d: Diagram, bound: int, samples: int = 200, seed: int = 0) -> AxiomReport:
    report = AxiomReport(d.axiom, S.name, bound, vacuous=d.vacuous)
    if d.needs_mult_comm and not S.has_mult_comm:
        report.verdict = SKIP
        report.note = "no multiplicative commutator"
        return report
    rng = random.Random(f"{seed}:{d.axiom}")
    for objs, morphs in _cases(S, d, bound, samples, rng):
        report.instances += 1
        ok, lhs, rhs = _evaluate(S, d.legs, objs, morphs)
        if not ok:
            report.verdict = FAIL
            report.witness = Witness(
                objects=tuple(objs),
                args=tuple(S.show(m) for m in morphs) if morphs else (),
                lhs=lhs,
                rhs=rhs,
                replay=lambda objs=objs, morphs=morphs: not _evaluate(S, d.legs, objs, morphs)[0],
            )
            break
    return report


def check_laplaza(S: RigInstance, bound: int, samples: int = 200, seed: int = 0) -> list[AxiomReport]:
    """Evaluate every coherence diagram on all object tuples of size <= bound.

    Naturality is checked over whole automorphism groups for groupoids and
    over ``samples`` seeded random morphisms otherwise.  Functoriality of
    the two tensor products is always sampled.
    """
    if bound < 0:
        raise ValueError("bound must be a natural number")
    reports = [check_diagram(S, d, bound, samples, seed) for d in DIAGRAMS]
    reports.sort(key=lambda r: r.axiom)
    return reports
