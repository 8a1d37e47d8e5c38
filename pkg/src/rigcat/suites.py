"""Verification suites shared by the command line and the tests."""

from __future__ import annotations

import itertools
import random
from typing import Callable, Iterable

from . import finperm as fp
from . import skelrig as sk
from .canhom import (
    canonical_hom,
    check_generator_relations,
    check_transformation,
    fcan_preserves_structure,
    random_hom,
    tau_transformation,
    unique_endomorphism_check,
    unique_iso,
    verify_hom_axioms,
    vertical,
)
from .rigiface import (
    SKIP,
    AxiomReport,
    EnumerationUnsupported,
    MatInstance,
    RigInstance,
    Witness,
    check_laplaza,
    perm_matrix,
)
from .rigiface.report import FAIL

SUITES = ("laplaza", "oracle", "fcan", "hom", "unique")


def _run(name: str, inst: str, bound: int, cases: Iterable) -> AxiomReport:
    """Cases yield (objects, args, thunk returning (lhs, rhs), show)."""
    rep = AxiomReport(name, inst, bound)
    for objs, args, fn, show in cases:
        rep.instances += 1
        lhs, rhs = fn()
        if lhs != rhs:
            rep.verdict = FAIL
            rep.witness = Witness(
                tuple(objs), tuple(args), show(lhs), show(rhs), lambda fn=fn: (lambda a, b: a != b)(*fn())
            )
            break
    return rep


def _small_maps(limit: int):
    for m, n in itertools.product(range(limit + 1), repeat=2):
        yield from fp.all_maps(m, n)


def _random_pairs(samples: int, seed: int, lo: int = 4, hi: int = 6):
    rng = random.Random(seed)
    for _ in range(samples):
        sizes = [rng.randint(lo, hi) for _ in range(4)]
        yield fp.random_map(sizes[0], sizes[1], rng), fp.random_map(sizes[2], sizes[3], rng)


def oracle_reports(bound: int = 5, map_bound: int = 3, samples: int = 1000, seed: int = 0) -> list[AxiomReport]:
    """Closed forms against the universal-property constructions."""
    sizes = range(bound + 1)
    name = "fset"

    def structural(fn_closed, fn_oracle, arity):
        for objs in itertools.product(sizes, repeat=arity):
            yield objs, (), lambda o=objs: (fn_closed(*o), fn_oracle(*o)), str

    def maps(fn_closed, fn_oracle):
        small = list(_small_maps(map_bound))
        for f, g in itertools.product(small, small):
            yield (f.dom, f.cod, g.dom, g.cod), (str(f), str(g)), lambda f=f, g=g: (fn_closed(f, g), fn_oracle(f, g)), str
        for f, g in _random_pairs(samples, seed):
            yield (f.dom, f.cod, g.dom, g.cod), (str(f), str(g)), lambda f=f, g=g: (fn_closed(f, g), fn_oracle(f, g)), str

    return [
        _run("ORACLE-c", name, bound, structural(sk.add_commutator, sk.oracle_add_comm, 2)),
        _run("ORACLE-c'", name, bound, structural(sk.mult_commutator, sk.oracle_mult_comm, 2)),
        _run("ORACLE-d", name, bound, structural(sk.right_distributor, sk.oracle_right_dist, 3)),
        _run("ORACLE-prod", name, bound, maps(sk.prod_map, sk.oracle_prod)),
        _run("ORACLE-sum", name, bound, maps(sk.sum_map, sk.oracle_sum)),
    ]


def instance_structure_reports(S: RigInstance, bound: int) -> list[AxiomReport]:
    """The instance's c and d' against images of the oracle permutations.

    For the finite-set instance the image is the permutation itself; for
    matrices it is the permutation matrix.
    """
    image: Callable = perm_matrix if isinstance(S, MatInstance) else (lambda p: p)
    sizes = range(bound + 1)
    reps = [
        _run("INST-c", S.name, bound, (
            ((m, n), (), lambda m=m, n=n: (S.comm(m, n), image(sk.oracle_add_comm(m, n))), S.show)
            for m, n in itertools.product(sizes, sizes)
        )),
        _run("INST-d'", S.name, bound, (
            ((m, n, p), (), lambda m=m, n=n, p=p: (S.rdist(m, n, p), image(fp.invert(sk.oracle_right_dist(m, n, p)))), S.show)
            for m, n, p in itertools.product(sizes, sizes, sizes)
        )),
    ]
    if isinstance(S, MatInstance):
        deg = range(min(bound, 3) + 1)
        perms = [p for n in deg for p in fp.all_perms(n)]

        def functor_cases():
            for a, b in itertools.product(perms, perms):
                args = (str(a), str(b))
                if a.degree == b.degree:
                    yield (a.degree,), args, lambda a=a, b=b: (perm_matrix(fp.compose(a, b)), perm_matrix(a) @ perm_matrix(b)), S.show
                yield (a.degree, b.degree), args + ("+",), lambda a=a, b=b: (
                    perm_matrix(sk.sum_map(a, b)), perm_matrix(a).direct_sum(perm_matrix(b))), S.show
                yield (a.degree, b.degree), args + ("•",), lambda a=a, b=b: (
                    perm_matrix(sk.prod_map(a, b)), perm_matrix(a).block_product(perm_matrix(b))), S.show

        reps.append(_run("INST-P", S.name, bound, functor_cases()))
    return sorted(reps, key=lambda r: r.axiom)


def laplaza_suite(S, bound, samples=200, seed=0, **_):
    return check_laplaza(S, bound, samples=samples, seed=seed)


def oracle_suite(S, bound, samples=200, seed=0, **_):
    return oracle_reports(bound, min(bound, 3), samples, seed) + instance_structure_reports(S, bound)


def fcan_suite(S, bound, **_):
    reps = [check_generator_relations(S, n) for n in range(2, max(bound, 2) + 1)]
    for r in reps:
        r.axiom = f"R1-R3[n={r.bound}]"
    return reps + fcan_preserves_structure(S, bound)


def hom_suite(S, bound, seed=0, homs=20, **_):
    rng = random.Random(seed)
    can = canonical_hom(S, bound)
    out = []
    for k in range(homs + 1):
        h = can if k == 0 else random_hom(S, bound, rng, label=f"random{k}")
        tag = h.label
        reps = verify_hom_axioms(h) + check_transformation(tau_transformation(h), seed=seed)
        back = vertical(unique_iso(can, h), unique_iso(h, can))
        ident = [S.identity(S.unit(n)) for n in range(bound + 1)]
        rt = AxiomReport("ISO-roundtrip", S.name, bound, instances=bound + 1)
        if back.components != ident:
            n = next(i for i, (a, b) in enumerate(zip(back.components, ident)) if a != b)
            rt.verdict = FAIL
            rt.witness = Witness((n,), (), S.show(back.components[n]), S.show(ident[n]), lambda: True)
        reps.append(rt)
        for r in reps:
            r.axiom = f"{r.axiom}[{tag}]"
        out.extend(reps)
    return out


def unique_suite(S, bound, **_):
    out = []
    for mode in ("pruned", "full"):
        try:
            out.append(unique_endomorphism_check(S, bound, mode))
        except EnumerationUnsupported as exc:
            rep = AxiomReport(f"UNIQUE-{mode}", S.name, bound, verdict=SKIP, note=f"unsupported: {exc}")
            out.append(rep)
    return out


_RUNNERS = {
    "laplaza": laplaza_suite,
    "oracle": oracle_suite,
    "fcan": fcan_suite,
    "hom": hom_suite,
    "unique": unique_suite,
}


def run_suite(name: str, S: RigInstance, bound: int, samples: int = 200, seed: int = 0, homs: int = 20) -> list[AxiomReport]:
    names = SUITES if name == "all" else (name,)
    out = []
    for n in names:
        if n not in _RUNNERS:
            raise ValueError(f"unknown suite {n!r}")
        out.extend(_RUNNERS[n](S, bound, samples=samples, seed=seed, homs=homs))
    return out
