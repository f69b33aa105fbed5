"""Deterministic text / json / csv serialization of analysis results."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import singledispatch

from .families import FactorialVerdict, FamilyVerdict, NonimageFamily, Pow2Preimage, SophieScan
from .gupta import GuptaBound, TableRow
from .inverse import PreimageReport
from .totient import TotientValue

FORMATS = ("text", "json", "csv")


@dataclass(frozen=True)
class Listing:
    """A bare list of integers with the label it is printed under."""

    label: str
    values: list[int]


@dataclass(frozen=True)
class BoundTable:
    rows: list[TableRow]


def display(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def rational(value: Fraction) -> dict:
    return {"num": value.numerator, "den": value.denominator, "display": display(value)}


def _braces(values) -> str:
    return "{" + ", ".join(str(v) for v in values) + "}"


def dumps(obj) -> str:
    """Canonical json: insertion-ordered keys, no whitespace, trailing newline."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False) + "\n"


# -- json payloads ---------------------------------------------------------

@singledispatch
def payload(obj) -> dict:
    raise TypeError(f"cannot render {type(obj).__name__}")


@payload.register
def _(obj: TotientValue) -> dict:
    return {"n": obj.n, "phi": obj.phi}


@payload.register
def _(obj: GuptaBound) -> dict:
    return {
        "m": obj.m,
        "admissible_primes": list(obj.admissible_primes),
        "value": rational(obj.value),
        "floor_value": obj.floor_value,
    }


@payload.register
def _(obj: PreimageReport) -> dict:
    return {
        "m": obj.m,
        "in_image": obj.in_image,
        "elements": list(obj.elements),
        "odd_count": obj.odd_count,
        "even_count": obj.even_count,
        "bound": payload(obj.bound) if obj.bound is not None else None,
        "residue_classes": {str(r): list(v) for r, v in obj.residue_classes.items()},
        "lehmer_candidates": list(obj.lehmer_candidates),
    }


@payload.register
def _(obj: FamilyVerdict) -> dict:
    out = {
        "target": obj.target,
        "family": obj.family.value,
        "in_image": obj.in_image,
        "witness": obj.witness,
        "reason": obj.reason,
    }
    if isinstance(obj, FactorialVerdict):
        out["two_exponent"] = obj.two_exponent
        out["odd_exponents"] = {str(p): a for p, a in obj.odd_exponents.items()}
    return out


@payload.register
def _(obj: Pow2Preimage) -> dict:
    return {"k": obj.k, "odd_count": obj.odd_count, "odd_witness": obj.odd_witness,
            "bound": rational(obj.bound)}


@payload.register
def _(obj: NonimageFamily) -> dict:
    return {"p": obj.p, "members": list(obj.members), "doubles": list(obj.doubles),
            "congruence_check": list(obj.congruence_check)}


@payload.register
def _(obj: SophieScan) -> dict:
    return {"sophie_germain": obj.sophie_germain, "safe": obj.safe,
            "image_members": obj.image_members, "nonimage_members": obj.nonimage_members}


@payload.register
def _(obj: BoundTable) -> dict:
    return {"rows": [{"m": r.m, "bound": rational(r.bound), "phi_of_bound": r.phi_of_bound}
                     for r in obj.rows]}


@payload.register
def _(obj: Listing) -> dict:
    return {"values": list(obj.values)}


# -- text ------------------------------------------------------------------

@singledispatch
def text(obj) -> str:
    raise TypeError(f"cannot render {type(obj).__name__}")


@text.register
def _(obj: TotientValue) -> str:
    return f"phi({obj.n}) = {obj.phi}\n"


@text.register
def _(obj: GuptaBound) -> str:
    primes = ", ".join(map(str, obj.admissible_primes))
    return f"A({obj.m}) = {display(obj.value)}; admissible primes: {primes}\n"


@text.register
def _(obj: PreimageReport) -> str:
    bound = display(obj.bound.value) if obj.bound is not None else "-"
    return (f"phi^-1({obj.m}) = {_braces(obj.elements)}; "
            f"O={obj.odd_count} E={obj.even_count}; bound={bound}\n")


@text.register
def _(obj: FamilyVerdict) -> str:
    if obj.in_image:
        return f"{obj.family.value} {obj.target}: in image, witness {obj.witness} ({obj.reason})\n"
    return f"{obj.family.value} {obj.target}: not in image ({obj.reason})\n"


@text.register
def _(obj: Pow2Preimage) -> str:
    odd = f"odd witness {obj.odd_witness}" if obj.odd_count else "no odd element"
    return f"phi^-1(2^{obj.k}): O={obj.odd_count}, {odd}; A(2^{obj.k}) = {display(obj.bound)}\n"


@text.register
def _(obj: NonimageFamily) -> str:
    return f"S({obj.p}): q = {_braces(obj.members)}; 2q = {_braces(obj.doubles)}\n"


@text.register
def _(obj: SophieScan) -> str:
    return (f"sophie germain: {_braces(obj.sophie_germain)}\n"
            f"safe primes: {_braces(obj.safe)}\n"
            f"2p in image: {_braces(obj.image_members)}\n"
            f"2p not in image: {_braces(obj.nonimage_members)}\n")


@text.register
def _(obj: BoundTable) -> str:
    lines = ["m\tA(m)\tphi(A(m))"]
    for r in obj.rows:
        cell = "-" if r.phi_of_bound is None else str(r.phi_of_bound)
        lines.append(f"{r.m}\t{display(r.bound)}\t{cell}")
    return "\n".join(lines) + "\n"


@text.register
def _(obj: Listing) -> str:
    return f"{obj.label} = {_braces(obj.values)}\n"


# -- csv -------------------------------------------------------------------

@singledispatch
def rows(obj) -> list[list]:
    raise TypeError(f"cannot render {type(obj).__name__}")


@rows.register
def _(obj: TotientValue) -> list[list]:
    return [["n", "phi"], [obj.n, obj.phi]]


@rows.register
def _(obj: GuptaBound) -> list[list]:
    return [["m", "bound", "admissible_prime"]] + [
        [obj.m, display(obj.value), p] for p in obj.admissible_primes]


@rows.register
def _(obj: PreimageReport) -> list[list]:
    return [["n", "parity", "residue"]] + [
        [n, "odd" if n % 2 else "even", n % obj.m] for n in obj.elements]


@rows.register
def _(obj: FamilyVerdict) -> list[list]:
    return [["target", "family", "in_image", "witness", "reason"],
            [obj.target, obj.family.value, str(obj.in_image).lower(),
             "" if obj.witness is None else obj.witness, obj.reason]]


@rows.register
def _(obj: Pow2Preimage) -> list[list]:
    return [["k", "odd_count", "odd_witness", "bound"],
            [obj.k, obj.odd_count, "" if obj.odd_witness is None else obj.odd_witness,
             display(obj.bound)]]


@rows.register
def _(obj: NonimageFamily) -> list[list]:
    return [["q", "double", "congruence_ok"]] + [
        [q, d, str(c).lower()] for q, d, c in zip(obj.members, obj.doubles, obj.congruence_check)]


@rows.register
def _(obj: SophieScan) -> list[list]:
    safe = dict(zip(obj.sophie_germain, obj.safe))
    doubles = sorted(obj.image_members + obj.nonimage_members)
    return [["p", "double", "in_image", "safe_prime"]] + [
        [d // 2, d, str(d // 2 in safe).lower(), safe.get(d // 2, "")] for d in doubles]


@rows.register
def _(obj: BoundTable) -> list[list]:
    return [["m", "bound", "phi_of_bound"]] + [
        [r.m, display(r.bound), "" if r.phi_of_bound is None else r.phi_of_bound] for r in obj.rows]


@rows.register
def _(obj: Listing) -> list[list]:
    return [["value"]] + [[v] for v in obj.values]


def render(obj, fmt: str = "text") -> bytes:
    """Serialize a result; json keys follow a fixed order."""
    if fmt == "json":
        return dumps(payload(obj)).encode()
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows(obj))
        return buf.getvalue().encode()
    if fmt == "text":
        return text(obj).encode()
    raise ValueError(f"unknown format {fmt!r}")
