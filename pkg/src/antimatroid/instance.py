"""JSON instance documents.

A document is one JSON object::

    {
      "n": 3,
      "labels": ["a", "b", "c"],                      (optional)
      "operator": {"kind": "poset_min", "covers": [[1, 2], [1, 3]]},
      "linkage": {"kind": "weight_minus_size", "weights": [1, 6, 3]},
      "family": [[], [1], [1, 2]],                     (optional)
      "language": [[], [1], [1, 2]]                    (optional)
    }

Sets are arrays of element identifiers. Operator kinds and their parameters:
``full``, ``max_order``, ``chain`` (none); ``poset_min`` (``covers``);
``table`` (``entries``: [[set, value-set], ...]); ``basis_of_family`` (uses the
document's ``family``); ``truncated`` (``cutoff``, ``inner``). Linkage kinds:
``weight_minus_size`` (``weights``); ``single_linkage`` (``distances`` as a full
symmetric matrix, optional ``empty_value``); ``table`` (``entries``:
[[x, set, value], ...]); ``failure`` (derived from the operator's first
isotonicity witness on its generated family).
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DomainError
from .language import SimpleLanguage
from .linkage import LinkageSpec, failure_linkage, single_linkage, table_linkage, weight_minus_size
from .operators import (
    OperatorSpec,
    chain_operator,
    check_isotone,
    full_operator,
    generate_family,
    max_order_operator,
    operator_from_family,
    poset_min_operator,
    table_operator,
    truncated_operator,
)
from .sets import GroundSet, Poset, SetFamily, elements


class InstanceError(ValueError):
    """Malformed instance document."""


@dataclass(frozen=True)
class Instance:
    ground: GroundSet
    operator: OperatorSpec | None = None
    linkage: LinkageSpec | None = None
    family: SetFamily | None = None
    language: SimpleLanguage | None = None

    def feasible_family(self) -> SetFamily:
        """The explicit family, else the operator's generated family."""
        if self.family is not None:
            return self.family
        if self.operator is not None:
            return generate_family(self.operator)[0]
        raise InstanceError("instance has neither a family nor an operator")

    def need_operator(self) -> OperatorSpec:
        if self.operator is None:
            raise InstanceError("instance has no operator")
        return self.operator

    def need_linkage(self) -> LinkageSpec:
        if self.linkage is None:
            raise InstanceError("instance has no linkage")
        return self.linkage


def _sets(value, what):
    if not isinstance(value, list) or not all(isinstance(s, list) for s in value):
        raise InstanceError(f"{what} must be an array of arrays")
    for s in value:
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in s):
            raise InstanceError(f"{what} contains a non-integer element")
    return value


def _operator(spec, n: int, family: SetFamily | None) -> OperatorSpec:
    if not isinstance(spec, dict) or "kind" not in spec:
        raise InstanceError("operator must be an object with a 'kind'")
    kind = spec["kind"]
    if kind == "full":
        return full_operator(n)
    if kind == "max_order":
        return max_order_operator(n)
    if kind == "chain":
        return chain_operator(n)
    if kind == "poset_min":
        covers = spec.get("covers", [])
        if not all(isinstance(c, list) and len(c) == 2 for c in covers):
            raise InstanceError("poset covers must be [a, b] pairs")
        return poset_min_operator(Poset(GroundSet(n), frozenset(tuple(c) for c in covers)))
    if kind == "table":
        rows = spec.get("entries")
        if not isinstance(rows, list) or not all(isinstance(r, list) and len(r) == 2 for r in rows):
            raise InstanceError("operator table entries must be [set, value-set] pairs")
        for X, v in rows:
            _sets([X, v], "operator table entry")
        return table_operator(n, [(tuple(X), tuple(v)) for X, v in rows])
    if kind == "basis_of_family":
        fam = family
        if "family" in spec:
            fam = SetFamily.of(n, _sets(spec["family"], "operator family"))
        if fam is None:
            raise InstanceError("basis_of_family needs a family")
        return operator_from_family(fam)
    if kind == "truncated":
        cutoff = spec.get("cutoff")
        if not isinstance(cutoff, int) or cutoff < 0:
            raise InstanceError("truncated operator needs a non-negative integer 'cutoff'")
        return truncated_operator(_operator(spec.get("inner"), n, family), cutoff)
    raise InstanceError(f"unknown operator kind {kind!r}")


def _linkage(spec, n: int, op: OperatorSpec | None) -> LinkageSpec:
    if not isinstance(spec, dict) or "kind" not in spec:
        raise InstanceError("linkage must be an object with a 'kind'")
    kind = spec["kind"]
    if kind == "weight_minus_size":
        weights = spec.get("weights")
        if not isinstance(weights, list) or len(weights) != n:
            raise InstanceError(f"weights must be an array of {n} numbers")
        return weight_minus_size(weights)
    if kind == "single_linkage":
        d = spec.get("distances")
        if not isinstance(d, list) or len(d) != n:
            raise InstanceError(f"distances must be a {n}x{n} matrix")
        return single_linkage(d, spec.get("empty_value"))
    if kind == "table":
        rows = spec.get("entries")
        if not isinstance(rows, list) or not all(isinstance(r, list) and len(r) == 3 for r in rows):
            raise InstanceError("linkage table entries must be [x, set, value] triples")
        return table_linkage(n, [(x, tuple(X), v) for x, X, v in rows])
    if kind == "failure":
        if op is None:
            raise InstanceError("failure linkage needs an operator")
        w = check_isotone(op, "feasible_only")
        if w is None:
            raise InstanceError("failure linkage needs a non-isotone operator")
        return failure_linkage(op, w, generate_family(op)[1])
    raise InstanceError(f"unknown linkage kind {kind!r}")


def parse_instance(doc) -> Instance:
    if not isinstance(doc, dict):
        raise InstanceError("instance must be a JSON object")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool):
        raise InstanceError("'n' must be an integer")
    try:
        ground = GroundSet(n, tuple(doc["labels"]) if "labels" in doc else None)
        family = SetFamily.of(ground, _sets(doc["family"], "family")) if "family" in doc else None
        language = (
            SimpleLanguage.of(ground, _sets(doc["language"], "language")) if "language" in doc else None
        )
        op = _operator(doc["operator"], n, family) if "operator" in doc else None
        pi = _linkage(doc["linkage"], n, op) if "linkage" in doc else None
    except DomainError as exc:
        raise InstanceError(str(exc)) from exc
    if op is None and family is None and language is None:
        raise InstanceError("instance needs an operator, a family or a language")
    return Instance(ground, op, pi, family, language)


def load_instance(path) -> Instance:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return parse_instance(doc)


def operator_doc(op: OperatorSpec) -> dict:
    """Serialize a table operator (other kinds are written by name)."""
    if op.kind == "table":
        return {"kind": "table", "entries": [[elements(X), elements(v)] for X, v in op.table]}
    if op.kind == "poset_min":
        return {"kind": "poset_min", "covers": sorted([a, b] for a, b in op.poset.covers)}
    if op.kind == "truncated":
        return {"kind": "truncated", "cutoff": op.cutoff, "inner": operator_doc(op.inner)}
    if op.kind == "basis_of_family":
        return {"kind": "basis_of_family", "family": op.family.as_lists()}
    return {"kind": op.kind}


def linkage_doc(pi: LinkageSpec) -> dict:
    if pi.kind == "table":
        return {"kind": "table", "entries": [[x, elements(X), v] for x, X, v in pi.table]}
    if pi.kind == "weight_minus_size":
        return {"kind": "weight_minus_size", "weights": list(pi.weights)}
    if pi.kind == "single_linkage":
        return {
            "kind": "single_linkage",
            "distances": [list(r) for r in pi.distances],
            "empty_value": pi.empty_value,
        }
    return {"kind": "failure"}
