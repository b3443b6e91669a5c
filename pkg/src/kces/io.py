"""JSON formats for product sets, subspace bases, verdicts and constructions.

Scalars are canonical rational strings (``"3"``, ``"-1/2"``). Party labels in
partitions are 1-based. Output is key-sorted so identical inputs give
byte-identical files.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .construction import KcesResult
from .errors import FormatError, KcesError
from .states import Partition, ProductSet, ProductVector, SubspaceBasis
from .unextendibility import Verdict

_RATIONAL = re.compile(r"-?\d+(/\d+)?")


def rational_to_str(x) -> str:
    return str(Fraction(x))


def parse_rational(raw: Any) -> Fraction:
    if isinstance(raw, bool):
        raise FormatError(f"not a rational: {raw!r}")
    if isinstance(raw, int):
        return Fraction(raw)
    if not isinstance(raw, str) or not _RATIONAL.fullmatch(raw.strip()):
        raise FormatError(f"not a rational string: {raw!r}")
    try:
        return Fraction(raw.strip())
    except ZeroDivisionError:
        raise FormatError(f"zero denominator in {raw!r}") from None


def _vec(v) -> list[str]:
    return [rational_to_str(x) for x in v]


def _parse_vec(raw) -> list[Fraction]:
    if not isinstance(raw, list):
        raise FormatError(f"expected a list of rationals, got {type(raw).__name__}")
    return [parse_rational(x) for x in raw]


def _dims(raw) -> tuple[int, ...]:
    if not isinstance(raw, list) or not raw or not all(
        isinstance(d, int) and not isinstance(d, bool) and d >= 1 for d in raw
    ):
        raise FormatError(f"'dims' must be a non-empty list of positive integers, got {raw!r}")
    return tuple(raw)


def _require(obj, *keys):
    if not isinstance(obj, dict):
        raise FormatError(f"expected a JSON object, got {type(obj).__name__}")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise FormatError(f"missing key(s): {', '.join(missing)}")


def product_vector_to_json(v: ProductVector) -> dict:
    return {"factors": [_vec(f) for f in v.factors]}


def product_set_to_json(s: ProductSet) -> dict:
    return {"dims": list(s.dims), "vectors": [product_vector_to_json(v) for v in s]}


def product_set_from_json(obj) -> ProductSet:
    _require(obj, "dims", "vectors")
    dims = _dims(obj["dims"])
    if not isinstance(obj["vectors"], list):
        raise FormatError("'vectors' must be a list")
    vectors = []
    for i, raw in enumerate(obj["vectors"]):
        _require(raw, "factors")
        if not isinstance(raw["factors"], list):
            raise FormatError(f"vector {i}: 'factors' must be a list")
        try:
            vectors.append(ProductVector(_parse_vec(f) for f in raw["factors"]))
        except KcesError as exc:
            raise FormatError(f"vector {i}: {exc}") from None
    try:
        return ProductSet(vectors, dims)
    except KcesError as exc:
        raise FormatError(str(exc)) from None


def subspace_basis_to_json(b: SubspaceBasis) -> dict:
    return {"dims": list(b.dims), "basis": [_vec(r) for r in b.basis]}


def subspace_basis_from_json(obj) -> SubspaceBasis:
    _require(obj, "dims", "basis")
    if not isinstance(obj["basis"], list):
        raise FormatError("'basis' must be a list of rows")
    try:
        return SubspaceBasis(_dims(obj["dims"]), [_parse_vec(r) for r in obj["basis"]])
    except KcesError as exc:
        raise FormatError(str(exc)) from None


def partition_to_json(p: Partition) -> list[list[int]]:
    return p.labels()


def verdict_to_json(v: Verdict) -> dict:
    if v.unextendible:
        return {"level": v.level, "outcome": "unextendible"}
    w = v.witness
    return {
        "level": v.level,
        "outcome": "witness",
        "partition": partition_to_json(w.partition),
        "vector": {"dims": list(w.vector.dims), **product_vector_to_json(w.vector)},
        # position i holds the block (0-based, in partition order) member i went to
        "assignment": list(w.assignment),
    }


def kces_result_to_json(r: KcesResult) -> dict:
    s = r.scenario
    return {
        "scenario": {"d": s.d, "n": s.n, "k": s.k},
        "nodes": _vec(r.nodes),
        "spanning": product_set_to_json(r.spanning),
        "complement": subspace_basis_to_json(r.complement),
        "certified_level": r.certified_level,
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: malformed JSON ({exc})") from None
