"""JSON file formats and ``builtin:`` references.

Rationals are written as strings ``"p/q"`` (``"p"`` when ``q == 1``).
Dumps use sorted keys so identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .algebra import LinComb, TensorLabel, as_rational, format_rational
from .errors import SpecError
from .groups import BUILTIN_GROUPS, FiniteGroup, GroupMap, inverse_map, s3_factorization, split_rb_group, trivial_map
from .hopf import EnvelopingAlgebra, GroupAlgebra, HopfAlgebra
from .lie import BUILTIN_ALGEBRAS, LieAlgebraSpec, LieOperator, example1_operator
from .operators import HopfRBOperator

BUILTIN = "builtin:"


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _read(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path} is not valid JSON: {exc}") from None


def _rational(v) -> Fraction:
    try:
        return as_rational(v)
    except (TypeError, ValueError, ZeroDivisionError):
        raise SpecError(f"{v!r} is not a rational number") from None


# Lie algebras and operators

def lie_algebra_from_json(data: dict, check: bool = True) -> LieAlgebraSpec:
    try:
        basis = data["basis"]
        brackets = {}
        for entry in data.get("brackets", []):
            key = (entry["left"], entry["right"])
            if key in brackets or key[::-1] in brackets:
                raise SpecError(f"bracket of {key[0]} and {key[1]} supplied twice")
            brackets[key] = {k: _rational(c) for k, c in entry["value"].items()}
    except (KeyError, TypeError, AttributeError) as exc:
        raise SpecError(f"malformed Lie algebra description: {exc}") from None
    return LieAlgebraSpec.from_brackets(basis, brackets, check=check)


def lie_algebra_to_json(L: LieAlgebraSpec) -> dict:
    out = []
    for (i, j), v in sorted(L.structure_constants.items()):
        out.append({"left": L.basis_names[i], "right": L.basis_names[j],
                    "value": {L.basis_names[k]: format_rational(c) for k, c in sorted(v.items())}})
    return {"basis": list(L.basis_names), "brackets": out}


def load_lie_algebra(ref: str, check: bool = True) -> tuple[str, LieAlgebraSpec]:
    """Return ``(name, algebra)`` for ``builtin:<name>`` or a JSON path."""
    if ref.startswith(BUILTIN):
        name = ref[len(BUILTIN):]
        if name not in BUILTIN_ALGEBRAS:
            raise SpecError(f"unknown built-in algebra {name!r}; choose from {sorted(BUILTIN_ALGEBRAS)}")
        return name, BUILTIN_ALGEBRAS[name]()
    return Path(ref).stem, lie_algebra_from_json(_read(ref), check=check)


def lie_operator_from_json(data: dict, dim: int | None = None) -> LieOperator:
    conv = data.get("convention", "columns")
    if conv != "columns":
        raise SpecError(f"unsupported matrix convention {conv!r}; only 'columns' is defined")
    try:
        R = LieOperator([[_rational(v) for v in row] for row in data["matrix"]])
    except (KeyError, TypeError) as exc:
        raise SpecError(f"malformed operator description: {exc}") from None
    if dim is not None and R.dim != dim:
        raise SpecError(f"operator has size {R.dim}, algebra has dimension {dim}")
    return R


def lie_operator_to_json(R: LieOperator) -> dict:
    return {"convention": "columns", "matrix": [[format_rational(v) for v in row] for row in R.matrix]}


def load_lie_operator(ref: str, L: LieAlgebraSpec) -> LieOperator:
    if ref.startswith(BUILTIN):
        name = ref[len(BUILTIN):]
        if name == "example1":
            if L.basis_names != ("x", "h", "y"):
                raise SpecError("builtin:example1 is defined on sl2 with basis x, h, y")
            return example1_operator()
        if name == "zero":
            return LieOperator.zero(L.dim)
        if name == "minus-identity":
            return -LieOperator.identity(L.dim)
        raise SpecError(f"unknown built-in Lie operator {name!r}")
    return lie_operator_from_json(_read(ref), L.dim)


# groups and group maps

def group_from_json(data: dict) -> FiniteGroup:
    try:
        table = data["cayley"]
        names = data.get("names")
    except (KeyError, TypeError) as exc:
        raise SpecError(f"malformed group description: {exc}") from None
    if "order" in data and data["order"] != len(table):
        raise SpecError(f"declared order {data['order']} differs from table size {len(table)}")
    try:
        return FiniteGroup.from_table(table, names)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, SpecError):
            raise
        raise SpecError(f"malformed Cayley table: {exc}") from None


def group_to_json(G: FiniteGroup) -> dict:
    return {"order": G.order, "cayley": [list(r) for r in G.cayley], "names": list(G.names)}


def load_group(ref: str) -> tuple[str, FiniteGroup]:
    if ref.startswith(BUILTIN):
        name = ref[len(BUILTIN):]
        if name not in BUILTIN_GROUPS:
            raise SpecError(f"unknown built-in group {name!r}; choose from {sorted(BUILTIN_GROUPS)}")
        return name, BUILTIN_GROUPS[name]()
    return Path(ref).stem, group_from_json(_read(ref))


def group_map_from_json(data: dict, G: FiniteGroup) -> GroupMap:
    try:
        image = [G.index(v) for v in data["image"]]
    except (KeyError, TypeError) as exc:
        raise SpecError(f"malformed group map: {exc}") from None
    if len(image) != G.order:
        raise SpecError(f"group map has {len(image)} entries, group has order {G.order}")
    return GroupMap(image)


def group_map_to_json(B: GroupMap) -> dict:
    return {"image": list(B.image)}


def load_group_map(ref: str, G: FiniteGroup, group_name: str = "") -> GroupMap:
    if ref.startswith(BUILTIN):
        name = ref[len(BUILTIN):]
        if name == "inverse":
            return inverse_map(G)
        if name == "trivial":
            return trivial_map(G)
        if name == "split":
            if group_name != "S3":
                raise SpecError("builtin:split is defined for builtin:S3 only")
            return split_rb_group(G, *s3_factorization(G))
        raise SpecError(f"unknown built-in group map {name!r}")
    return group_map_from_json(_read(ref), G)


def enumeration_to_json(maps: list[GroupMap], G: FiniteGroup) -> dict:
    return {
        "count": len(maps),
        "operators": [group_map_to_json(B) for B in maps],
        "named": [[G.names[v] for v in B.image] for B in maps],
    }


# Hopf-level operators

def lincomb_to_json(H: HopfAlgebra, v: LinComb) -> dict:
    def key(label):
        if isinstance(label, TensorLabel):
            return "⊗".join(H.label_str(p) for p in label)
        return H.label_str(label)
    return {key(k): format_rational(c) for k, c in v.items()}


def _key(H: HopfAlgebra, label) -> str:
    return str(label) if isinstance(H, GroupAlgebra) else H.label_str(label)


def _parse_key(H: HopfAlgebra, s: str):
    if isinstance(H, GroupAlgebra):
        try:
            i = int(s)
        except ValueError:
            return H.group.index(s)
        if not 0 <= i < H.group.order:
            raise SpecError(f"group element index {i} out of range")
        return i
    return H.parse_label(s)


def hopf_operator_to_json(B: HopfRBOperator, labels=None) -> dict:
    """Tabulated form; for U(g) only the given (or already evaluated) labels."""
    H = B.carrier
    labels = H.basis() if labels is None and isinstance(H, GroupAlgebra) else labels
    table = B.table(labels) if labels is not None else B.evaluated()
    return {
        "carrier": H.name,
        "provenance": B.provenance,
        "action": {_key(H, a): {_key(H, k): format_rational(c) for k, c in v.items()}
                   for a, v in table.items()},
    }


def hopf_operator_from_json(data: dict, H: HopfAlgebra) -> HopfRBOperator:
    try:
        carrier = data["carrier"]
        action = data["action"]
    except (KeyError, TypeError) as exc:
        raise SpecError(f"malformed operator table: {exc}") from None
    if carrier != H.name:
        raise SpecError(f"operator is for carrier {carrier!r}, not {H.name!r}")
    table = {}
    for a, v in action.items():
        table[_parse_key(H, a)] = LinComb({_parse_key(H, k): _rational(c) for k, c in v.items()})
    if isinstance(H, GroupAlgebra) and set(table) != set(H.basis()):
        raise SpecError("a tabulated operator on F[G] needs an entry for every group element")
    prov = data.get("provenance", "custom")
    return HopfRBOperator(H, table, prov if prov in ("tilde", "split", "antipode") else "custom")


def is_hopf_operator_file(ref: str) -> bool:
    if ref.startswith(BUILTIN):
        return False
    data = _read(ref)
    return isinstance(data, dict) and "action" in data


def read_json(ref: str):
    return _read(ref)


def make_carrier(group_ref: str | None, algebra_ref: str | None):
    """Build ``(carrier, group_name, group, lie)`` from the CLI references."""
    if (group_ref is None) == (algebra_ref is None):
        raise SpecError("give exactly one of --group and --algebra")
    if group_ref is not None:
        name, G = load_group(group_ref)
        return GroupAlgebra(G, name), name, G, None
    name, L = load_lie_algebra(algebra_ref)
    return EnvelopingAlgebra(L, name), name, None, L
