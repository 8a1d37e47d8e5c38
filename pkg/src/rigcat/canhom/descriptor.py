"""Hom descriptor files.

JSON of the form ``{"target": "fset", "bound": 4, "tau": [...]}``.  Entries
of ``tau`` are cycle-notation strings for fset and matrix literals (lists of
rows, entries ints or ``"p/q"`` strings) for mat.  ``objects`` is optional
and defaults to x_n = n̲.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

from .. import finperm as fp
from ..rigiface import RigInstance, instance_by_name, matrix_from_literal
from .hom import EndpointMismatch, RigHom, build_hom, canonical_hom, random_hom


class DescriptorError(ValueError):
    def __init__(self, message: str, where: str = ""):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


def _parse_tau_entry(S: RigInstance, entry, n: int, source: str):
    where = f"{source}: tau[{n}]"
    if S.name.startswith("fset"):
        if not isinstance(entry, str):
            raise DescriptorError("expected a cycle-notation string", where)
        try:
            return fp.parse_perm(entry)
        except fp.ParseError as exc:
            raise DescriptorError(f"{exc}", where) from exc
    if not isinstance(entry, list):
        raise DescriptorError("expected a matrix literal (list of rows)", where)
    try:
        if not entry:
            return matrix_from_literal([], (0, 0))
        return matrix_from_literal(entry)
    except (ValueError, ZeroDivisionError) as exc:
        raise DescriptorError(f"bad matrix literal: {exc}", where) from exc


def hom_from_dict(doc: dict, source: str = "<descriptor>", bound: int | None = None) -> RigHom:
    if not isinstance(doc, dict):
        raise DescriptorError("top level must be an object", source)
    try:
        S = instance_by_name(doc.get("target", "fset"))
    except ValueError as exc:
        raise DescriptorError(str(exc), f"{source}: target") from exc
    tau_raw = doc.get("tau")
    if not isinstance(tau_raw, list) or len(tau_raw) < 2:
        raise DescriptorError("'tau' must list at least τ_0 and τ_1", f"{source}: tau")
    b = doc.get("bound", len(tau_raw) - 1)
    if bound is not None:
        b = min(b, bound)
    tau = [_parse_tau_entry(S, e, n, source) for n, e in enumerate(tau_raw)]
    objects = doc.get("objects")
    try:
        return build_hom(S, tau, objects[: b + 1] if objects else None, b, label=Path(source).stem)
    except EndpointMismatch as exc:
        raise DescriptorError(str(exc), f"{source}: tau[{exc.index}]") from exc


def load_hom(spec: str, target: str = "fset", bound: int = 4) -> RigHom:
    """Read a descriptor file, or ``@fcan`` / ``@random:SEED`` for ``target``."""
    if spec == "@fcan":
        return canonical_hom(instance_by_name(target), bound)
    if spec.startswith("@random:"):
        try:
            seed = int(spec.split(":", 1)[1])
        except ValueError as exc:
            raise DescriptorError("seed must be an integer", spec) from exc
        return random_hom(instance_by_name(target), bound, random.Random(seed), label=f"random{seed}")
    try:
        text = Path(spec).read_text()
    except OSError as exc:
        raise DescriptorError(str(exc), spec) from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DescriptorError(exc.msg, f"{spec}:{exc.lineno}:{exc.colno}") from exc
    return hom_from_dict(doc, spec, bound)


def hom_to_dict(hom: RigHom) -> dict:
    S = hom.target
    if S.name.startswith("fset"):
        tau = [str(t) for t in hom.tau]
    else:
        tau = [t.to_literal() for t in hom.tau]
    return {"target": S.name, "bound": hom.bound, "tau": tau}
