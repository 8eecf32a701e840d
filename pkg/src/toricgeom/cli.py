"""Command-line surface with stable machine-readable output.

Input is a JSON document (``--input FILE`` or ``-`` for stdin) holding the
object to act on: a named constructor invocation, explicit fan/cone data, a
point list, or a polyhedron, plus command parameters.  Constructor and
parameter flags can substitute for document keys.  Output is JSON by default
(sorted keys, so byte-for-byte deterministic) or transcript-style text with
``--format text``.  Exit codes: 0 ok, 2 validation error, 3 unsupported
input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import jsonschema

from .cohomology import in_vanishing_set, vanishing_sets
from .errors import UnsupportedInputError, ValidationError
from .intersection import (chow_ring, degree, intersection_form,
                           rational_equivalence_class)
from .polyhedral import (Cone, Polyhedron, hilbert_basis, print_constraints)
from .polyring import format_poly
from .toric_variety import (NormalToricVariety, cyclic_quotient_singularity,
                            del_pezzo_surface, hirzebruch_surface,
                            normal_toric_variety, product, projective_space)
from .triangulation import (PointConfiguration, frst_enumerate,
                            varieties_from_star_triangulations)

COMMANDS = (
    "construct", "properties", "hilbert-basis", "toric-ideal", "sr-ideal",
    "irrelevant-ideal", "linear-relations", "chow-ring", "intersection-form",
    "degree", "cohomology", "vanishing-sets", "print-constraints",
    "triangulate",
)

_INT_LIST = {"type": "array", "items": {"type": "integer"}}
_INT_MATRIX = {"type": "array", "items": _INT_LIST}

_CONSTRUCT_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["name"],
    "properties": {
        "name": {"enum": ["projective_space", "hirzebruch_surface",
                          "del_pezzo_surface", "cyclic_quotient_singularity",
                          "product"]},
        "n": {"type": "integer"},
        "k": {"type": "integer"},
        "r": {"type": "integer"},
        "q": {"type": "integer"},
        "factors": {"type": "array", "minItems": 1},
    },
}

_FAN_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["rank", "rays", "max_cones"],
    "properties": {
        "rank": {"type": "integer", "minimum": 0},
        "rays": _INT_MATRIX,
        "max_cones": {"type": "array", "items": {"type": "array",
                                                 "items": {"type": "integer",
                                                           "minimum": 1}}},
        "names": {"type": "array", "items": {"type": "string"}},
    },
}

_DOC_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "construct": _CONSTRUCT_SCHEMA,
        "fan": _FAN_SCHEMA,
        "cone": {
            "type": "object",
            "additionalProperties": False,
            "required": ["rays"],
            "properties": {"rays": _INT_MATRIX},
        },
        "points": _INT_MATRIX,
        "polyhedron": {
            "type": "object",
            "additionalProperties": False,
            "required": ["inequalities"],
            "properties": {
                "inequalities": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["normal", "offset"],
                        "properties": {"normal": _INT_LIST,
                                       "offset": {"type": "integer"}},
                    },
                },
            },
        },
        "class": _INT_LIST,
        "i": {"type": "integer"},
        "m": {"type": "integer"},
        "poly": {"type": "string"},
    },
}


def _build_constructed(spec: dict) -> NormalToricVariety:
    name = spec["name"]
    if name == "projective_space":
        if "n" not in spec:
            raise ValidationError("projective_space needs --n")
        return projective_space(spec["n"])
    if name == "hirzebruch_surface":
        if "r" not in spec:
            raise ValidationError("hirzebruch_surface needs --r")
        return hirzebruch_surface(spec["r"])
    if name == "del_pezzo_surface":
        if "k" not in spec:
            raise ValidationError("del_pezzo_surface needs --k")
        return del_pezzo_surface(spec["k"])
    if name == "cyclic_quotient_singularity":
        if "n" not in spec or "q" not in spec:
            raise ValidationError("cyclic_quotient_singularity needs --n and --q")
        return cyclic_quotient_singularity(spec["n"], spec["q"])
    if name == "product":
        factors = spec.get("factors")
        if not factors:
            raise ValidationError("product needs a nonempty factors list")
        built = []
        for f in factors:
            jsonschema.validate(f, _CONSTRUCT_SCHEMA)
            built.append(_build_constructed(f))
        out = built[0]
        for f in built[1:]:
            out = product(out, f)
        return out
    raise ValidationError(f"unknown constructor {name!r}")


def _variety_from_fan_json(data: dict) -> NormalToricVariety:
    cones = [[i - 1 for i in c] for c in data["max_cones"]]
    return normal_toric_variety(data["rays"], cones,
                                ambient_rank=data["rank"],
                                names=data.get("names"))


def _resolve_variety(doc: dict) -> NormalToricVariety:
    if ("construct" in doc) == ("fan" in doc):
        raise ValidationError("provide exactly one of 'construct' or 'fan'")
    if "construct" in doc:
        return _build_constructed(doc["construct"])
    return _variety_from_fan_json(doc["fan"])


def _rational_str(x) -> str:
    return str(Fraction(x))


def _ideal_payload(ideal) -> dict:
    return {"variables": list(ideal.ring.names),
            "generators": [format_poly(g) for g in ideal.gens]}


def _ideal_text(ideal) -> str:
    return "ideal(" + ", ".join(format_poly(g) for g in ideal.gens) + ")"


def _region_payload(region) -> dict:
    return {
        "apex": list(region.apex),
        "generators": [list(g) for g in region.generators],
        "constraints": print_constraints(region.polyhedron).split("\n"),
    }


def _run_command(command: str, doc: dict, fmt: str) -> str:
    if command == "construct":
        v = _resolve_variety(doc)
        payload = {"fan": v.to_json()}
        if fmt == "text":
            return f"Normal toric variety of dimension {v.dim} from {len(v.rays)} rays"
        return _dump(payload)

    if command == "properties":
        v = _resolve_variety(doc)
        payload = {
            "affine": v.is_affine,
            "complete": v.is_complete(),
            "dim": v.dim,
            "projective": v.is_projective(),
            "simplicial": v.is_simplicial(),
            "smooth": v.is_smooth(),
        }
        if fmt == "text":
            return "\n".join(f"{k} = {str(val).lower()}" if isinstance(val, bool)
                             else f"{k} = {val}" for k, val in sorted(payload.items()))
        return _dump(payload)

    if command == "hilbert-basis":
        if "cone" not in doc:
            raise ValidationError("hilbert-basis needs a 'cone' object")
        rays = doc["cone"]["rays"]
        if not rays:
            raise ValidationError("cone needs at least one ray")
        cone = Cone(len(rays[0]), generators=rays)
        basis = hilbert_basis(cone)
        if fmt == "text":
            return "\n".join("[" + ", ".join(str(x) for x in h) + "]" for h in basis)
        return _dump({"hilbert_basis": [list(h) for h in basis]})

    if command in ("toric-ideal", "sr-ideal", "irrelevant-ideal",
                   "linear-relations", "chow-ring"):
        v = _resolve_variety(doc)
        if command == "toric-ideal":
            ideal = v.toric_ideal()
        elif command == "sr-ideal":
            ideal = v.stanley_reisner_ideal()
        elif command == "irrelevant-ideal":
            ideal = v.irrelevant_ideal()
        elif command == "linear-relations":
            ideal = v.ideal_of_linear_relations()
        else:
            ideal = chow_ring(v).ideal
        if fmt == "text":
            return _ideal_text(ideal)
        return _dump(_ideal_payload(ideal))

    if command == "intersection-form":
        v = _resolve_variety(doc)
        form = intersection_form(v)
        payload = {k: _rational_str(val) for k, val in form.items()}
        if fmt == "text":
            return "\n".join(f"{k} => {val}" for k, val in sorted(payload.items()))
        return _dump({"intersection_form": payload})

    if command == "degree":
        v = _resolve_variety(doc)
        if "poly" not in doc:
            raise ValidationError("degree needs --poly")
        cls = rational_equivalence_class(v, doc["poly"])
        deg = degree(cls)
        if fmt == "text":
            if cls.is_trivial:
                head = "Trivial rational equivalence class on a normal toric variety"
            else:
                head = ("Rational equivalence class on a normal toric variety "
                        f"represented by {cls.cycle_string()}")
            return f"{head}\ndegree: {_rational_str(deg)}"
        return _dump({"degree": _rational_str(deg),
                      "trivial": cls.is_trivial,
                      "representative": cls.cycle_string()})

    if command == "cohomology":
        v = _resolve_variety(doc)
        if "class" not in doc or "i" not in doc:
            raise ValidationError("cohomology needs --class and --i")
        from .cohomology import cohomology_dim
        d = v.divisor_class(doc["class"])
        dim = cohomology_dim(v, d, doc["i"])
        if fmt == "text":
            return str(dim)
        return _dump({"class": list(doc["class"]), "i": doc["i"], "dim": dim})

    if command == "vanishing-sets":
        v = _resolve_variety(doc)
        sets = vanishing_sets(v)
        payload = [{"i": vs.index,
                    "polyhedra": [_region_payload(r) for r in vs.regions]}
                   for vs in sets]
        if fmt == "text":
            lines = []
            for vs in sets:
                lines.append(f"V^{vs.index}: complement of {len(vs.regions)} polyhedra")
                for r in vs.regions:
                    lines.append("  apex " + str(list(r.apex)))
                    for line in print_constraints(r.polyhedron).split("\n"):
                        lines.append("    " + line)
            return "\n".join(lines)
        return _dump({"vanishing_sets": payload})

    if command == "print-constraints":
        if "polyhedron" in doc:
            ineqs = [(item["normal"], item["offset"])
                     for item in doc["polyhedron"]["inequalities"]]
            if not ineqs:
                raise ValidationError("empty inequality list")
            poly = Polyhedron.from_inequalities(ineqs, len(ineqs[0][0]))
            polys = [poly]
        else:
            v = _resolve_variety(doc)
            if "i" not in doc:
                raise ValidationError("print-constraints needs --i (or a polyhedron)")
            vs = vanishing_sets(v)[doc["i"]]
            regions = vs.regions
            if "m" in doc:
                if not (1 <= doc["m"] <= len(regions)):
                    raise ValidationError("polyhedron index m out of range")
                regions = [regions[doc["m"] - 1]]
            polys = [r.polyhedron for r in regions]
        blocks = [print_constraints(p) for p in polys]
        if fmt == "text":
            return "\n\n".join(blocks)
        return _dump({"constraints": [b.split("\n") for b in blocks]})

    if command == "triangulate":
        if "points" not in doc:
            raise ValidationError("triangulate needs a 'points' list")
        config = PointConfiguration.from_points(doc["points"])
        tris = frst_enumerate(config)
        varieties = varieties_from_star_triangulations(config)
        payload = {
            "origin_index": config.origin_index + 1,
            "triangulations": [[[i + 1 for i in s] for s in t.simplices]
                               for t in tris],
            "varieties": [v.to_json() for v in varieties],
        }
        if fmt == "text":
            lines = [f"{len(tris)} fine regular star triangulation(s)"]
            for t in tris:
                lines.append("  " + " ".join(str([i + 1 for i in s])
                                             for s in t.simplices))
            return "\n".join(lines)
        return _dump(payload)

    raise ValidationError(f"unknown command {command!r}")


def _dump(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _load_document(args) -> dict:
    doc: dict = {}
    if args.input:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.input, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise ValidationError(f"cannot read input: {exc}") from exc
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid JSON input: {exc}") from exc
        if not isinstance(doc, dict):
            raise ValidationError("input document must be a JSON object")

    construct_flags = {}
    for key in ("n", "k", "r", "q"):
        val = getattr(args, key)
        if val is not None:
            construct_flags[key] = val
    if args.name is not None:
        if "construct" in doc or "fan" in doc:
            raise ValidationError("--name conflicts with the input document")
        doc["construct"] = {"name": args.name, **construct_flags}
    elif construct_flags:
        raise ValidationError("constructor parameters need --name")

    for key, val in (("class", args.cls), ("i", args.i),
                     ("m", args.m), ("poly", args.poly)):
        if val is None:
            continue
        if key in doc:
            raise ValidationError(f"--{key} duplicates a document key")
        doc[key] = val

    try:
        jsonschema.validate(doc, _DOC_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise ValidationError(f"input document rejected: {exc.message}") from exc
    return doc


def _parse_class(text: str):
    try:
        val = json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"not a JSON list: {text!r}") from exc
    if not isinstance(val, list) or not all(isinstance(x, int) for x in val):
        raise argparse.ArgumentTypeError("--class expects a JSON list of integers")
    return val


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricgeom",
        description="Exact toric geometry computations with deterministic output.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", help="JSON input document (path or - for stdin)")
    parser.add_argument("--format", dest="fmt", choices=("json", "text"),
                        default="json")
    parser.add_argument("--name", help="named constructor")
    parser.add_argument("--n", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--r", type=int)
    parser.add_argument("--q", type=int)
    parser.add_argument("--class", dest="cls", type=_parse_class,
                        help="divisor class, e.g. [0,0]")
    parser.add_argument("--i", type=int, help="cohomology index")
    parser.add_argument("--m", type=int, help="1-based polyhedron index")
    parser.add_argument("--poly", help="cycle polynomial, e.g. e1*e1")
    return parser


def _emit_error(kind: str, message: str):
    sys.stderr.write(_dump({"error": {"kind": kind, "message": message}}) + "\n")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = _load_document(args)
        output = _run_command(args.command, doc, args.fmt)
    except ValidationError as exc:
        _emit_error("validation", str(exc))
        return 2
    except UnsupportedInputError as exc:
        _emit_error("unsupported", str(exc))
        return 3
    sys.stdout.write(output + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
