"""Command line surface: ring-spec files in, deterministic reports out.

A ring-spec file is YAML with three keys: group {rank, torsion}, a list
of variables carrying degree coordinates, and an optional monomial list
B restricting the model.  Every command parses the file, delegates to
one library operation, and emits either a short human rendering or a
byte-stable JSON report {command, digest, payload}.

Exit codes: 0 success, 2 usage, 3 invalid input, 4 internal invariant
violation or fixture mismatch.
"""

from __future__ import annotations

import hashlib
import json
import sys
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

import click
import yaml

from projd.charts import (
    MonomialPrime,
    PrimeMeetsF,
    chart_algebra,
    chart_intersection_check,
    cover_decomposition,
    psi_image,
    v_plus,
)
from projd.fgab import FgAbGroup, GroupElement
from projd.ringspec import (
    BadConicalIdeal,
    Monomial,
    NotEffective,
    NotRelevant,
    RingSpec,
    degree_zero_companion,
)
from projd.separation import is_separated, classify_dependencies, weak_pairs, \
    separated_submodels
from projd.sheaves import global_sections, is_invertible


class ParseError(ValueError):
    """Malformed ring-spec input; the message names the offending part."""


VALIDATION_ERRORS = (ParseError, NotEffective, BadConicalIdeal, NotRelevant,
                     PrimeMeetsF, ValueError)


# ---------------------------------------------------------------------------
# ring-spec files

def _expect(condition: bool, where: str, what: str):
    if not condition:
        raise ParseError(f"{where}: {what}")


def _int_list(value, where, length=None) -> list[int]:
    _expect(isinstance(value, list), where, "expected a list of integers")
    out = []
    for i, v in enumerate(value):
        _expect(isinstance(v, int) and not isinstance(v, bool),
                f"{where}[{i}]", f"expected an integer, got {v!r}")
        out.append(v)
    if length is not None:
        _expect(len(out) == length, where,
                f"expected {length} entries, got {len(out)}")
    return out


def parse_ring_spec(source) -> RingSpec:
    """Build a validated RingSpec from a file path or YAML text.

    >>> R = parse_ring_spec('''
    ... group: {rank: 2, torsion: []}
    ... variables:
    ...   - {name: x, degree: {free: [1, 0], torsion: []}}
    ...   - {name: y, degree: {free: [0, 1], torsion: []}}
    ...   - {name: z, degree: {free: [1, 1], torsion: []}}
    ... ''')
    >>> [m.render(R.variables) for m in R.irrelevant_generators()]
    ['yz', 'xz', 'xy']
    """
    if isinstance(source, Path):
        text = source.read_text(encoding="utf-8")
    elif isinstance(source, bytes):
        text = source.decode("utf-8")
    elif "\n" not in source and Path(source).exists():
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = (f"line {mark.line + 1}, column {mark.column + 1}"
                 if mark else "document")
        problem = getattr(exc, "problem", None) or str(exc)
        raise ParseError(f"{where}: {problem}") from exc
    return ring_spec_from_dict(data)


def ring_spec_from_dict(data) -> RingSpec:
    _expect(isinstance(data, dict), "document", "expected a mapping")
    unknown = set(data) - {"group", "variables", "B"}
    _expect(not unknown, "document", f"unknown keys {sorted(unknown)}")
    group_data = data.get("group")
    _expect(isinstance(group_data, dict), "group", "expected a mapping")
    rank = group_data.get("rank")
    _expect(isinstance(rank, int) and not isinstance(rank, bool) and rank >= 0,
            "group.rank", f"expected a nonnegative integer, got {rank!r}")
    torsion = _int_list(group_data.get("torsion", []), "group.torsion")
    for i, m in enumerate(torsion):
        _expect(m >= 1, f"group.torsion[{i}]", f"order must be >= 1, got {m}")
    group = FgAbGroup(rank, torsion)

    entries = data.get("variables", [])
    _expect(isinstance(entries, list), "variables", "expected a list")
    names, degrees = [], []
    for i, entry in enumerate(entries):
        where = f"variables[{i}]"
        _expect(isinstance(entry, dict), where, "expected a mapping")
        name = entry.get("name")
        _expect(isinstance(name, str) and name.isidentifier(), f"{where}.name",
                f"expected an identifier, got {name!r}")
        _expect(name not in names, f"{where}.name", f"duplicate name {name!r}")
        deg = entry.get("degree")
        _expect(isinstance(deg, dict), f"{where}.degree", "expected a mapping")
        free = _int_list(deg.get("free", []), f"{where}.degree.free", rank)
        tors = _int_list(deg.get("torsion", []), f"{where}.degree.torsion",
                         len(torsion))
        names.append(name)
        degrees.append(group.element(free, tors))

    B = data.get("B")
    if B is not None:
        _expect(isinstance(B, list) and all(isinstance(b, str) for b in B),
                "B", "expected a list of monomial strings")
    return RingSpec(group, names, degrees, conical_ideal=B)


def ring_spec_to_dict(spec: RingSpec) -> dict:
    """Plain-data form of a RingSpec, in canonical torsion coordinates."""
    out = {
        "group": {"rank": spec.group.rank, "torsion": list(spec.group.torsion)},
        "variables": [
            {"name": name,
             "degree": {"free": list(d.free), "torsion": list(d.torsion)}}
            for name, d in zip(spec.variables, spec.degrees)
        ],
    }
    if spec.conical_ideal is not None:
        out["B"] = [monomial_text(b, spec.variables) for b in spec.conical_ideal]
    return out


def serialize_ring_spec(spec: RingSpec) -> str:
    return yaml.safe_dump(ring_spec_to_dict(spec), sort_keys=False)


# ---------------------------------------------------------------------------
# renderings

def monomial_text(m: Monomial, names: Sequence[str]) -> str:
    """Unambiguous '*'-joined form, e.g. "x*z^2"; "1" for the unit."""
    parts = []
    for name, e in zip(names, m.exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def laurent_text(vec: Sequence[int], names: Sequence[str]) -> str:
    """Fraction form of an integer exponent vector, e.g. "z/(xy)"."""
    num = Monomial(tuple(max(e, 0) for e in vec))
    den = Monomial(tuple(max(-e, 0) for e in vec))
    top = num.render(names)
    if not den.support:
        return top
    bottom = den.render(names)
    if len(den.support) > 1:
        bottom = f"({bottom})"
    return f"{top}/{bottom}"


def relation_text(vec: Sequence[int], names: Sequence[str]) -> str:
    pos = Monomial(tuple(max(e, 0) for e in vec)).render(names)
    neg = Monomial(tuple(max(-e, 0) for e in vec)).render(names)
    return f"deg({pos}) = deg({neg})"


def group_text(group: FgAbGroup) -> str:
    parts = []
    if group.rank == 1:
        parts.append("Z")
    elif group.rank > 1:
        parts.append(f"Z^{group.rank}")
    parts.extend(f"Z/{m}" for m in group.torsion)
    return " x ".join(parts) if parts else "0"


def parse_degree(group: FgAbGroup, text: str) -> GroupElement:
    """Degree from text like "(2, 0 | 1 mod 2)", "2,0|1" or "2,0".

    Coordinates are read in the canonical presentation (as printed);
    an omitted torsion part defaults to zero.
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    free_part, _, torsion_part = body.partition("|")

    def ints(chunk, count, what):
        pieces = [p.strip() for p in chunk.split(",")] if chunk.strip() else []
        pieces = [p.split("mod")[0].strip() for p in pieces]
        if not pieces:
            return [0] * count
        if len(pieces) != count:
            raise ParseError(
                f"degree {text!r}: expected {count} {what} coordinates")
        try:
            return [int(p) for p in pieces]
        except ValueError:
            raise ParseError(f"degree {text!r}: bad {what} coordinate")

    if group.rank == 0 and "|" not in body:
        torsion_part, free_part = free_part, ""
    free = ints(free_part, group.rank, "free")
    tors = ints(torsion_part, len(group.torsion), "torsion")
    return group.from_lift(free + tors)


def parse_prime(spec: RingSpec, text: str) -> MonomialPrime:
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    body = body.strip()
    if body in ("", "0"):
        return MonomialPrime(())
    indices = []
    lookup = {name: i for i, name in enumerate(spec.variables)}
    for piece in body.split(","):
        name = piece.strip()
        if name not in lookup:
            raise ParseError(f"prime {text!r}: unknown variable {name!r}")
        indices.append(lookup[name])
    return MonomialPrime(tuple(indices))


# ---------------------------------------------------------------------------
# command execution (pure: spec + args -> JSON-ready payload)

def _mono(spec, text) -> Monomial:
    return spec.monomial(text)


def _payload_check(spec: RingSpec) -> dict:
    return {
        "effective": True,
        "group": group_text(spec.group),
        "rank": spec.group.rank,
        "torsion": list(spec.group.torsion),
        "variables": list(spec.variables),
        "degrees": [str(d) for d in spec.degrees],
        "B": (None if spec.conical_ideal is None
              else [monomial_text(b, spec.variables) for b in spec.conical_ideal]),
    }


def _payload_gens(spec: RingSpec) -> dict:
    gens = spec.irrelevant_generators()
    return {
        "generators": [m.render(spec.variables) for m in gens],
        "single_chart": spec.group.rank == 0,
    }


def _payload_chart(spec: RingSpec, f: str) -> dict:
    chart = chart_algebra(spec, f)
    return {
        "f": monomial_text(chart.f, spec.variables),
        "inverted": [spec.variables[i] for i in sorted(chart.free_coords)],
        "units": [list(u) for u in chart.units],
        "unit_renders": [laurent_text(u, spec.variables) for u in chart.units],
        "generators": [list(g) for g in chart.generators],
        "generator_renders": [laurent_text(g, spec.variables)
                              for g in chart.generators],
    }


def _payload_intersect(spec: RingSpec, f: str, g: str) -> dict:
    report = chart_intersection_check(spec, f, g)
    return {
        "f": monomial_text(report.f, spec.variables),
        "g": monomial_text(report.g, spec.variables),
        "ok": report.ok,
        "inverted": [list(v) for v in report.inverted],
        "inverted_renders": [laurent_text(v, spec.variables)
                             for v in report.inverted],
        "decompositions": [
            {"target": list(t), "render": laurent_text(t, spec.variables),
             "coefficients": list(c)}
            for t, c in report.decompositions
        ],
    }


def _payload_psi(spec: RingSpec, f: str, prime_text: str) -> dict:
    prime = parse_prime(spec, prime_text)
    image = psi_image(spec, f, prime)
    return {
        "f": monomial_text(_mono(spec, f), spec.variables),
        "prime": prime.render(spec.variables),
        "image": [list(v) for v in image],
        "image_renders": [laurent_text(v, spec.variables) for v in image],
    }


def _payload_cover(spec: RingSpec, h: str) -> dict:
    cover = cover_decomposition(spec, h)
    return {
        "h": monomial_text(_mono(spec, h), spec.variables),
        "cover": [m.render(spec.variables) for m in cover],
        "covered": bool(cover),
    }


def _payload_vplus(spec: RingSpec, ideal_text: str) -> dict:
    pieces = [p.strip() for p in ideal_text.split(",") if p.strip()]
    primes = v_plus(spec, pieces)
    return {
        "ideal": [monomial_text(_mono(spec, p), spec.variables) for p in pieces],
        "primes": [p.render(spec.variables) for p in primes],
    }


def _pair_entries(spec: RingSpec, reports) -> list[dict]:
    return [
        {"pair": [m.render(spec.variables) for m in r.pair],
         "witness": list(r.witness),
         "witness_render": laurent_text(r.witness, spec.variables)}
        for r in reports
    ]


def _payload_weak_pairs(spec: RingSpec) -> dict:
    return {"pairs": _pair_entries(spec, weak_pairs(spec))}


def _payload_separated(spec: RingSpec) -> dict:
    verdict = is_separated(spec)
    return {
        "separated": verdict.separated,
        "dependency_class": verdict.dependency_class,
        "pairs": _pair_entries(spec, verdict.weak_pairs),
    }


def _payload_deps(spec: RingSpec) -> dict:
    report = classify_dependencies(spec)
    return {
        "class": report.klass,
        "scope": report.scope,
        "witness": None if report.witness is None else list(report.witness),
        "witness_equation": (None if report.witness is None
                             else relation_text(report.witness, spec.variables)),
        "relations": [list(a) for a in report.relations],
        "equations": [relation_text(a, spec.variables) for a in report.relations],
    }


def _payload_submodels(spec: RingSpec) -> dict:
    subs = separated_submodels(spec)
    return {"submodels": [[m.render(spec.variables) for m in sub]
                          for sub in subs]}


def _payload_sheaf(spec: RingSpec, degree_text: str) -> dict:
    d = parse_degree(spec.group, degree_text)
    report = is_invertible(spec, d)
    if report.free != report.invertible:
        raise AssertionError(
            f"freeness and invertibility disagree on {d}")
    return {
        "degree": str(d),
        "free": report.free,
        "invertible": report.invertible,
        "obstruction": report.obstruction,
        "chart_units": [
            {"chart": name, "unit": None if u is None else list(u),
             "render": None if u is None else laurent_text(u, spec.variables)}
            for name, u in report.chart_units
        ],
    }


def _payload_sections(spec: RingSpec, degree_text: str, bound: int) -> dict:
    d = parse_degree(spec.group, degree_text)
    report = global_sections(spec, d, bound)
    return {
        "degree": str(d),
        "bound": bound,
        "monomials": [m.render(spec.variables) for m in report.monomials],
        "complete": report.complete,
    }


def _payload_companion(spec: RingSpec, h: str, f: str) -> dict:
    h, f = _mono(spec, h), _mono(spec, f)
    result = degree_zero_companion(spec, h, f)
    payload = {
        "h": monomial_text(h, spec.variables),
        "f": monomial_text(f, spec.variables),
        "found": result is not None,
        "power": None,
        "cofactor": None,
        "chart_power": None,
    }
    if result is not None:
        N, g, k = result
        payload.update(power=N, cofactor=monomial_text(g, spec.variables),
                       chart_power=k)
    return payload


def execute(spec: RingSpec, command: str, args: Sequence[str],
            bound: Optional[int] = None) -> dict:
    """Dispatch one command to its library operation; returns the payload."""
    if command == "check":
        return _payload_check(spec)
    if command == "gens":
        return _payload_gens(spec)
    if command == "chart":
        return _payload_chart(spec, args[0])
    if command == "intersect":
        return _payload_intersect(spec, args[0], args[1])
    if command == "psi":
        return _payload_psi(spec, args[0], args[1])
    if command == "cover":
        return _payload_cover(spec, args[0])
    if command == "vplus":
        return _payload_vplus(spec, args[0])
    if command == "weak-pairs":
        return _payload_weak_pairs(spec)
    if command == "separated":
        return _payload_separated(spec)
    if command == "deps":
        return _payload_deps(spec)
    if command == "submodels":
        return _payload_submodels(spec)
    if command == "sheaf":
        return _payload_sheaf(spec, args[0])
    if command == "sections":
        return _payload_sections(spec, args[0], 6 if bound is None else bound)
    if command == "companion":
        return _payload_companion(spec, args[0], args[1])
    raise ParseError(f"unknown command {command!r}")


# ---------------------------------------------------------------------------
# human renderings

def human_lines(command: str, payload: dict) -> list[str]:
    if command == "check":
        count = len(payload["variables"])
        noun = "variable" if count == 1 else "variables"
        lines = [f"OK: {count} {noun} graded by {payload['group']}"]
        for name, deg in zip(payload["variables"], payload["degrees"]):
            lines.append(f"  deg({name}) = {deg}")
        if payload["B"] is not None:
            lines.append("  B = (" + ", ".join(payload["B"]) + ")")
        return lines
    if command == "gens":
        listed = "{" + ", ".join(payload["generators"]) + "}"
        if payload["single_chart"]:
            return [f"Gen = {listed} - Proj = Spec(S_0), a single affine chart"]
        return [f"Gen = {listed}"]
    if command == "chart":
        units = ", ".join(payload["unit_renders"]) or "none"
        gens = ", ".join(payload["generator_renders"]) or "none"
        inverted = ", ".join(payload["inverted"]) or "none"
        return [f"Q_({payload['f']}): units: {units}; generators: {gens}; "
                f"inverted variables: {inverted}"]
    if command == "intersect":
        status = "ok" if payload["ok"] else "FAILED"
        inverted = ", ".join(payload["inverted_renders"]) or "none"
        return [f"intersection of Q_({payload['f']}) and Q_({payload['g']}): "
                f"{status}; newly inverted: {inverted}; "
                f"{len(payload['decompositions'])} decompositions"]
    if command == "psi":
        image = "{" + ", ".join(payload["image_renders"]) + "}"
        return [f"psi_({payload['f']}) maps {payload['prime']} to {image}"]
    if command == "cover":
        if payload["covered"]:
            parts = " u ".join(f"D+({g})" for g in payload["cover"])
            return [f"D+({payload['h']}) = {parts}"]
        return [f"D+({payload['h']}) is not a union of generator charts"]
    if command == "vplus":
        primes = "; ".join(payload["primes"]) or "none"
        return [f"minimal relevant primes over ({', '.join(payload['ideal'])})"
                f": {primes}"]
    if command == "weak-pairs":
        if not payload["pairs"]:
            return ["no weak pairs"]
        return [f"weak pair ({p['pair'][0]}, {p['pair'][1]}); "
                f"witness {p['witness_render']}" for p in payload["pairs"]]
    if command == "separated":
        if payload["separated"]:
            return [f"SEPARATED; no weak pairs; dependency class: "
                    f"{payload['dependency_class']}"]
        lines = ["NOT SEPARATED; dependency class: "
                 f"{payload['dependency_class']}"]
        for p in payload["pairs"]:
            lines.append(f"  weak pair ({p['pair'][0]}, {p['pair'][1]}); "
                         f"witness {p['witness_render']}")
        return lines
    if command == "deps":
        lines = [f"dependency class: {payload['class']} "
                 f"(scope: {payload['scope']})"]
        if payload["witness_equation"]:
            lines.append(f"  witness: {payload['witness_equation']}")
        lines.extend(f"  relation: {eq}" for eq in payload["equations"])
        return lines
    if command == "submodels":
        return ["separated submodel: {" + ", ".join(sub) + "}"
                for sub in payload["submodels"]]
    if command == "sheaf":
        free = "yes" if payload["free"] else "no"
        inv = "yes" if payload["invertible"] else "no"
        line = f"twist by {payload['degree']}: free: {free}; invertible: {inv}"
        if payload["invertible"]:
            units = " | ".join(u["render"] for u in payload["chart_units"])
            line += f"; witnesses {units}"
        else:
            line += f"; obstruction chart {payload['obstruction']}"
        return [line]
    if command == "sections":
        listed = "{" + ", ".join(payload["monomials"]) + "}"
        status = "complete" if payload["complete"] else "partial list"
        return [f"sections of degree {payload['degree']} up to total degree "
                f"{payload['bound']}: {listed} ({status})"]
    if command == "companion":
        if not payload["found"]:
            return [f"no degree-zero companion for ({payload['h']}, "
                    f"{payload['f']})"]

        def powered(text, k):
            base = f"({text})" if ("*" in text or "^" in text) else text
            return base if k == 1 else f"{base}^{k}"

        top = powered(payload["h"], payload["power"])
        if payload["cofactor"] != "1":
            top = f"{top} * {payload['cofactor']}"
        if payload["chart_power"] == 0:
            return [f"{top} has degree zero"]
        bottom = powered(payload["f"], payload["chart_power"])
        return [f"({top}) / {bottom} has degree zero"]
    raise AssertionError(f"no rendering for command {command!r}")


# ---------------------------------------------------------------------------
# fixture corpus

def fixture_text(name: str) -> str:
    path = resources.files("projd") / "fixtures" / f"{name}.yaml"
    return path.read_text(encoding="utf-8")


def load_corpus() -> list[dict]:
    path = resources.files("projd") / "fixtures" / "expected" / "corpus.json"
    return json.loads(path.read_text(encoding="utf-8"))


def run_fixture_corpus(echo=print) -> int:
    """Re-run every stored corpus command and diff against expectations."""
    failures = 0
    specs: dict[str, RingSpec] = {}
    for entry in load_corpus():
        name = entry["fixture"]
        if name not in specs:
            specs[name] = parse_ring_spec(fixture_text(name))
        label = " ".join([name, entry["command"], *entry.get("args", [])])
        try:
            payload = execute(specs[name], entry["command"],
                              entry.get("args", []), entry.get("bound"))
        except Exception as exc:
            echo(f"{label}: ERROR {exc}")
            failures += 1
            continue
        if payload == entry["payload"]:
            echo(f"{label}: ok")
        else:
            echo(f"{label}: MISMATCH")
            echo(f"  expected: {json.dumps(entry['payload'], sort_keys=True)}")
            echo(f"  got:      {json.dumps(payload, sort_keys=True)}")
            failures += 1
    echo(f"{failures} mismatching corpus entries" if failures
         else "fixture corpus: all entries match")
    return 4 if failures else 0


# ---------------------------------------------------------------------------
# click wiring

def _emit(command: str, spec_path: str, as_json: bool,
          args: Sequence[str] = (), bound: Optional[int] = None) -> None:
    try:
        raw = Path(spec_path).read_bytes()
        spec = parse_ring_spec(raw)
        payload = execute(spec, command, list(args), bound)
    except NotRelevant as exc:
        click.echo(f"error: {exc} is not relevant", err=True)
        sys.exit(3)
    except PrimeMeetsF as exc:
        click.echo(f"error: prime {exc} meets the chart monomial", err=True)
        sys.exit(3)
    except VALIDATION_ERRORS as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(3)
    except Exception as exc:
        click.echo(f"internal error: {exc}", err=True)
        sys.exit(4)
    if as_json:
        report = {"command": command,
                  "digest": hashlib.sha256(raw).hexdigest(),
                  "payload": payload}
        click.echo(json.dumps(report, sort_keys=True, separators=(",", ":")))
    else:
        for line in human_lines(command, payload):
            click.echo(line)


def _spec_options(f):
    f = click.option("--json", "as_json", is_flag=True,
                     help="emit the machine-readable report")(f)
    f = click.option("--spec", "spec_path", required=True,
                     type=click.Path(exists=True, dir_okay=False),
                     help="ring-spec YAML file")(f)
    return f


@click.group(invoke_without_command=True)
@click.option("--fixtures", "fixtures_flag", is_flag=True,
              help="run the built-in example corpus against stored expectations")
@click.pass_context
def main(ctx, fixtures_flag):
    """Exact combinatorics of multigraded Proj models."""
    if fixtures_flag:
        ctx.exit(run_fixture_corpus(echo=click.echo))
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())
        ctx.exit(2)


@main.command("check", help="validate a ring-spec file")
@_spec_options
def cmd_check(spec_path, as_json):
    _emit("check", spec_path, as_json)


@main.command("gens", help="minimal relevant monomial generators")
@_spec_options
def cmd_gens(spec_path, as_json):
    _emit("gens", spec_path, as_json)


@main.command("chart", help="degree-zero chart algebra of F")
@click.argument("f")
@_spec_options
def cmd_chart(f, spec_path, as_json):
    _emit("chart", spec_path, as_json, [f])


@main.command("intersect", help="consistency of the chart overlap of F and G")
@click.argument("f")
@click.argument("g")
@_spec_options
def cmd_intersect(f, g, spec_path, as_json):
    _emit("intersect", spec_path, as_json, [f, g])


@main.command("psi", help="image of a monomial prime in the chart of F")
@click.argument("f")
@click.argument("prime")
@_spec_options
def cmd_psi(f, prime, spec_path, as_json):
    _emit("psi", spec_path, as_json, [f, prime])


@main.command("cover", help="express D+(H) through generator charts")
@click.argument("h")
@_spec_options
def cmd_cover(h, spec_path, as_json):
    _emit("cover", spec_path, as_json, [h])


@main.command("vplus", help="minimal relevant primes over a monomial ideal")
@click.argument("ideal")
@_spec_options
def cmd_vplus(ideal, spec_path, as_json):
    _emit("vplus", spec_path, as_json, [ideal])


@main.command("weak-pairs", help="weak pairs among the model's generators")
@_spec_options
def cmd_weak_pairs(spec_path, as_json):
    _emit("weak-pairs", spec_path, as_json)


@main.command("separated", help="separatedness verdict for the model")
@_spec_options
def cmd_separated(spec_path, as_json):
    _emit("separated", spec_path, as_json)


@main.command("deps", help="classify the variable-degree relations")
@_spec_options
def cmd_deps(spec_path, as_json):
    _emit("deps", spec_path, as_json)


@main.command("submodels", help="maximal separated generator subsets")
@_spec_options
def cmd_submodels(spec_path, as_json):
    _emit("submodels", spec_path, as_json)


@main.command("sheaf", help="freeness and invertibility of the twist by D")
@click.argument("degree")
@_spec_options
def cmd_sheaf(degree, spec_path, as_json):
    _emit("sheaf", spec_path, as_json, [degree])


@main.command("sections", help="monomial sections of the twist by D")
@click.argument("degree")
@click.option("--bound", type=int, default=6, show_default=True,
              help="total-degree cutoff for the listing")
@_spec_options
def cmd_sections(degree, bound, spec_path, as_json):
    _emit("sections", spec_path, as_json, [degree], bound=bound)


@main.command("companion", help="least power of H reaching degree zero over F")
@click.argument("h")
@click.argument("f")
@_spec_options
def cmd_companion(h, f, spec_path, as_json):
    _emit("companion", spec_path, as_json, [h, f])


if __name__ == "__main__":
    main()
