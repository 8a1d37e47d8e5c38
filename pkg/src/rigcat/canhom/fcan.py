"""The canonical homomorphism from the finite-set skeleton into an instance.

[n] goes to n̲ = 1 + ... + 1 and the adjacent transposition (i, i+1)_n goes
to id_{i-1} + c_{1,1} + id_{n-i-1}.  Arbitrary permutations are sent through
an adjacent-transposition word.
"""

from __future__ import annotations

import itertools
import weakref

from .. import finperm as fp
from .. import skelrig as sk
from ..rigiface import AxiomReport, RigInstance, Witness, d_prime_recursive
from ..rigiface.report import FAIL

_GEN_CACHE: "weakref.WeakKeyDictionary[RigInstance, dict]" = weakref.WeakKeyDictionary()
_PERM_CACHE: "weakref.WeakKeyDictionary[RigInstance, dict]" = weakref.WeakKeyDictionary()


def fcan_object(S: RigInstance, n: int):
    return S.unit(n)


def fcan_generator(S: RigInstance, i: int, n: int):
    """Image of (i, i+1)_n: id_{i-1} + c_{1,1} + id_{n-i-1}."""
    if not 1 <= i <= n - 1:
        raise fp.IndexOutOfRange(f"need 1 <= i <= n-1, got i={i}, n={n}")
    cache = _GEN_CACHE.setdefault(S, {})
    key = (i, n)
    if key not in cache:
        left = S.identity(S.unit(i - 1))
        right = S.identity(S.unit(n - i - 1))
        cache[key] = S.msum(S.msum(left, S.comm(S.one, S.one)), right)
    return cache[key]


def fcan_word(S: RigInstance, word, n: int):
    """Image of s_{i1} ... s_{ik} without caching, for decomposition checks."""
    return S.compose_all([fcan_generator(S, i, n) for i in word], S.unit(n))


def fcan_perm(S: RigInstance, p: fp.Perm):
    cache = _PERM_CACHE.setdefault(S, {})
    out = cache.get(p)
    if out is None:
        out = cache[p] = fcan_word(S, fp.decompose_adjacent(p), p.degree)
    return out


def _fail(report: AxiomReport, S, objects, lhs, rhs, replay, args=()):
    report.verdict = FAIL
    report.witness = Witness(tuple(objects), tuple(args), S.show(lhs), S.show(rhs), replay)


def check_generator_relations(S: RigInstance, n: int) -> AxiomReport:
    """γ_i² = id, (γ_i γ_{i+1})³ = id, (γ_i γ_j)² = id for |i - j| > 1."""
    if n < 2:
        raise ValueError("relations need n >= 2")
    report = AxiomReport("R1-R3", S.name, n)
    one = S.identity(S.unit(n))
    g = {i: fcan_generator(S, i, n) for i in range(1, n)}

    def power(f, k):
        return S.compose_all([f] * k)

    cases = [("R1", (i,), lambda i=i: power(g[i], 2)) for i in range(1, n)]
    cases += [("R2", (i, i + 1), lambda i=i: power(S.compose(g[i], g[i + 1]), 3)) for i in range(1, n - 1)]
    cases += [
        ("R3", (i, j), lambda i=i, j=j: power(S.compose(g[i], g[j]), 2))
        for i in range(1, n)
        for j in range(i + 2, n)
    ]
    for tag, objs, fn in cases:
        report.instances += 1
        val = fn()
        if val != one:
            _fail(report, S, (tag,) + objs, val, one, lambda fn=fn: fn() != one)
            break
    return report


def fcan_preserves_structure(S: RigInstance, bound: int) -> list[AxiomReport]:
    """F_can against sums, products, c, d' and id_m • c_{1,1} = c_{m,m}."""
    reports = []

    def run(name, cases):
        rep = AxiomReport(name, S.name, bound)
        for objs, args, fn in cases:
            rep.instances += 1
            lhs, rhs = fn()
            if lhs != rhs:
                _fail(rep, S, objs, lhs, rhs, lambda fn=fn: (lambda l, r: l != r)(*fn()), args)
                break
        reports.append(rep)

    sizes = range(bound + 1)

    def sum_cases():
        for m, n in itertools.product(sizes, sizes):
            for a, b in itertools.product(fp.all_perms(m), fp.all_perms(n)):
                yield (m, n), (str(a), str(b)), lambda a=a, b=b: (
                    fcan_perm(S, sk.sum_map(a, b)),
                    S.msum(fcan_perm(S, a), fcan_perm(S, b)),
                )

    def prod_cases():
        for m, n in itertools.product(sizes, sizes):
            for a, b in itertools.product(fp.all_perms(m), fp.all_perms(n)):
                yield (m, n), (str(a), str(b)), lambda a=a, b=b: (
                    fcan_perm(S, sk.prod_map(a, b)),
                    S.mprod(fcan_perm(S, a), fcan_perm(S, b)),
                )

    def comm_cases():
        for m, n in itertools.product(sizes, sizes):
            yield (m, n), (), lambda m=m, n=n: (
                fcan_perm(S, sk.add_commutator(m, n)),
                S.comm(S.unit(m), S.unit(n)),
            )

    def dist_cases():
        for m, n, p in itertools.product(sizes, sizes, sizes):
            yield (m, n, p), (), lambda m=m, n=n, p=p: (
                fcan_perm(S, sk.rdist(m, n, p)),
                S.rdist(S.unit(m), S.unit(n), S.unit(p)),
            )
            yield (m, n, p), ("recursive",), lambda m=m, n=n, p=p: (
                fcan_perm(S, sk.rdist(m, n, p)),
                d_prime_recursive(S, S.unit(m), S.unit(n), p),
            )

    def block_swap_cases():
        swap = fp.Perm((2, 1))
        for m in range(1, max(bound, 4) + 1):
            yield (m,), (), lambda m=m: (
                fcan_perm(S, sk.prod_map(fp.identity(m), swap)),
                S.comm(S.unit(m), S.unit(m)),
            )
            yield (m,), ("direct",), lambda m=m: (
                S.mprod(S.identity(S.unit(m)), S.comm(S.one, S.one)),
                S.comm(S.unit(m), S.unit(m)),
            )

    run("FCAN-sum", sum_cases())
    run("FCAN-prod", prod_cases())
    run("FCAN-c", comm_cases())
    run("FCAN-d'", dist_cases())
    run("FCAN-id•c", block_swap_cases())
    return reports
