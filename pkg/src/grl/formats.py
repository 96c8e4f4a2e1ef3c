"""JSON documents: capacity files, scenario files and integral reports.

Rationals are written as ``"p/q"`` or integer strings, never as JSON
numbers with a fractional part.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .alpha import AlphaCapacity, Segment
from .capacity import Capacity, GroundSpace
from .curve import ScenarioInterval
from .errors import GRLError, ScenarioError
from .extended import format_ext, parse_rational
from .integral import GRLReport, Scenario, ScenarioFinite


def _q(x) -> str:
    return format_ext(Fraction(x))


def _rat(value, path: str) -> Fraction:
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise ScenarioError(f"malformed rational: {exc}", path) from None


def _req(doc: dict, key: str, path: str):
    if not isinstance(doc, dict):
        raise ScenarioError("expected an object", path)
    if key not in doc:
        raise ScenarioError(f"missing field {key!r}", f"{path}.{key}" if path else key)
    return doc[key]


# capacities


def space_from_dict(doc: dict, path: str = "space") -> GroundSpace:
    size = _req(doc, "size", path)
    if not isinstance(size, int) or isinstance(size, bool) or size < 1:
        raise ScenarioError("size must be a positive integer", f"{path}.size")
    labels = doc.get("labels")
    try:
        return GroundSpace(size, tuple(labels) if labels is not None else None)
    except GRLError as exc:
        raise ScenarioError(str(exc), path) from None


def capacity_values_from_dict(space: GroundSpace, values: Any, path: str) -> Capacity:
    if not isinstance(values, dict):
        raise ScenarioError("values must map subset bit masks to rationals", path)
    table: dict[int, Fraction] = {}
    for key, val in values.items():
        try:
            mask = int(key)
        except ValueError:
            raise ScenarioError(f"subset key {key!r} is not a decimal bit mask", f"{path}.{key}") from None
        if mask < 0 or mask >> space.size:
            raise ScenarioError(f"subset {mask} is not contained in a space of size {space.size}", f"{path}.{key}")
        table[mask] = _rat(val, f"{path}.{key}")
    missing = [m for m in space.subsets() if m not in table]
    if missing:
        shown = ", ".join(str(m) for m in missing[:8])
        more = "" if len(missing) <= 8 else f" and {len(missing) - 8} more"
        raise ScenarioError(f"capacity map is not total: missing subsets {shown}{more}", path)
    try:
        return Capacity(space, tuple(table[m] for m in space.subsets()))
    except GRLError as exc:
        raise ScenarioError(str(exc), path) from None


def capacity_from_dict(doc: dict) -> Capacity:
    space = space_from_dict(_req(doc, "space", ""))
    return capacity_values_from_dict(space, _req(doc, "values", ""), "values")


def capacity_to_dict(c: Capacity) -> dict:
    space: dict = {"size": c.space.size}
    if c.space.labels is not None:
        space["labels"] = list(c.space.labels)
    return {"space": space, "values": {str(m): _q(v) for m, v in enumerate(c.values)}}


# half-line set functions


def nu_from_dict(doc: dict, path: str = "nu") -> AlphaCapacity:
    kind = _req(doc, "kind", path)
    try:
        if kind == "lebesgue":
            upto = doc.get("upto")
            return AlphaCapacity.lebesgue(None if upto is None else _rat(upto, f"{path}.upto"))
        if kind == "sigma_additive":
            atoms = [
                (_rat(_req(a, "at", f"{path}.atoms"), f"{path}.atoms"), _rat(_req(a, "mass", f"{path}.atoms"), f"{path}.atoms"))
                for a in doc.get("atoms", [])
            ]
            segs = []
            for s in doc.get("segments", []):
                hi = s.get("hi")
                segs.append(
                    Segment(
                        _rat(_req(s, "lo", f"{path}.segments"), f"{path}.segments"),
                        None if hi is None else _rat(hi, f"{path}.segments"),
                        _rat(_req(s, "density", f"{path}.segments"), f"{path}.segments"),
                    )
                )
            return AlphaCapacity.sigma_additive(atoms, segs)
        if kind == "dirac":
            return AlphaCapacity.dirac(_rat(_req(doc, "location", path), f"{path}.location"))
        if kind == "vanishing_on_bounded":
            return AlphaCapacity.vanishing_on_bounded(_rat(doc.get("level", "1"), f"{path}.level"))
        if kind == "distorted_power":
            return AlphaCapacity.distorted_power(_rat(_req(doc, "p", path), f"{path}.p"))
    except GRLError as exc:
        if isinstance(exc, ScenarioError):
            raise
        raise ScenarioError(str(exc), path) from None
    raise ScenarioError(f"unknown nu kind {kind!r}", f"{path}.kind")


def nu_to_dict(v: AlphaCapacity) -> dict:
    if v.kind == "sigma_additive":
        return {
            "kind": "sigma_additive",
            "atoms": [{"at": _q(x), "mass": _q(m)} for x, m in v.atoms],
            "segments": [
                {"lo": _q(s.lo), "hi": None if s.hi is None else _q(s.hi), "density": _q(s.density)}
                for s in v.segments
            ],
        }
    if v.kind == "dirac":
        return {"kind": "dirac", "location": _q(v.location)}
    if v.kind == "vanishing_on_bounded":
        return {"kind": "vanishing_on_bounded", "level": _q(v.level)}
    return {"kind": "distorted_power", "p": _q(v.exponent)}


# scenarios


def scenario_from_dict(doc: dict) -> Scenario:
    if not isinstance(doc, dict):
        raise ScenarioError("a scenario must be a JSON object")
    space = _req(doc, "space", "")
    kind = space.get("kind", "finite") if isinstance(space, dict) else None
    nu = nu_from_dict(_req(doc, "nu", ""))
    assume = doc.get("assume_nu_zero_at_origin", False)
    if not isinstance(assume, bool):
        raise ScenarioError("assume_nu_zero_at_origin must be a boolean", "assume_nu_zero_at_origin")
    if assume and nu.mass_at_origin() != 0:
        raise ScenarioError("assume_nu_zero_at_origin is set but nu({0}) > 0", "assume_nu_zero_at_origin")
    if kind == "finite":
        return _finite_from_dict(doc, space, nu, assume)
    if kind == "interval":
        return _interval_from_dict(doc, space, nu, assume)
    raise ScenarioError(f"unknown space kind {kind!r}", "space.kind")


def _finite_from_dict(doc, space_doc, nu, assume) -> ScenarioFinite:
    space = space_from_dict(space_doc)
    mu_doc = _req(doc, "mu", "")
    if isinstance(mu_doc, dict) and "masses" in mu_doc:
        masses = mu_doc["masses"]
        if not isinstance(masses, list) or len(masses) != space.size:
            raise ScenarioError("masses must list one rational per point", "mu.masses")
        mu = Capacity.from_masses(space, [_rat(m, f"mu.masses.{i}") for i, m in enumerate(masses)])
    else:
        mu = capacity_values_from_dict(space, _req(mu_doc, "values", "mu"), "mu.values")
    f_doc = _req(doc, "f", "")
    if not isinstance(f_doc, list) or len(f_doc) != space.size:
        raise ScenarioError(f"f must list {space.size} non-negative rationals", "f")
    f = tuple(_rat(x, f"f.{i}") for i, x in enumerate(f_doc))
    if any(x < 0 for x in f):
        raise ScenarioError("f must be non-negative", "f")
    a_doc = doc.get("A", "all")
    if a_doc == "all":
        A = space.full
    else:
        if not isinstance(a_doc, list):
            raise ScenarioError('A must be "all" or a list of point indices', "A")
        A = 0
        for i, pt in enumerate(a_doc):
            if not isinstance(pt, int) or isinstance(pt, bool) or not 0 <= pt < space.size:
                raise ScenarioError(f"A is not a subset of S: point {pt!r} is not in 0..{space.size - 1}", f"A.{i}")
            A |= 1 << pt
    return ScenarioFinite(mu, nu, f, A, assume)


def _interval_from_dict(doc, space_doc, nu, assume) -> ScenarioInterval:
    d = _rat(_req(space_doc, "domain", "space"), "space.domain")
    mu_doc = _req(doc, "mu", "")
    if _req(mu_doc, "kind", "mu") != "power":
        raise ScenarioError("interval scenarios need mu of kind 'power'", "mu.kind")
    p = _rat(_req(mu_doc, "p", "mu"), "mu.p")
    knots_doc = _req(_req(doc, "f", ""), "knots", "f")
    try:
        knots = tuple((_rat(x, f"f.knots.{i}"), _rat(y, f"f.knots.{i}")) for i, (x, y) in enumerate(knots_doc))
    except (TypeError, ValueError):
        raise ScenarioError("knots must be [x, y] pairs", "f.knots") from None
    a_doc = doc.get("A", "all")
    if a_doc == "all":
        A = ((Fraction(0), d),)
    else:
        try:
            A = tuple((_rat(a, f"A.{i}"), _rat(b, f"A.{i}")) for i, (a, b) in enumerate(a_doc))
        except (TypeError, ValueError):
            raise ScenarioError("A must be a list of [lo, hi] pairs", "A") from None
    try:
        return ScenarioInterval(d, p, nu, knots, A, assume)
    except GRLError as exc:
        raise ScenarioError(str(exc), "f" if "knot" in str(exc) or "f must" in str(exc) else "A") from None


def scenario_to_dict(sc: Scenario) -> dict:
    if isinstance(sc, ScenarioInterval):
        return {
            "space": {"kind": "interval", "domain": _q(sc.domain)},
            "mu": {"kind": "power", "p": _q(sc.exponent)},
            "nu": nu_to_dict(sc.nu),
            "f": {"knots": [[_q(x), _q(y)] for x, y in sc.knots]},
            "A": [[_q(a), _q(b)] for a, b in sc.A],
            "assume_nu_zero_at_origin": sc.assume_nu_zero_at_origin,
        }
    cap = capacity_to_dict(sc.mu)
    return {
        "space": {"kind": "finite", **cap["space"]},
        "mu": {"values": cap["values"]},
        "nu": nu_to_dict(sc.nu),
        "f": [_q(x) for x in sc.f],
        "A": sc.space.members(sc.A),
        "assume_nu_zero_at_origin": sc.assume_nu_zero_at_origin,
    }


def _locate(text: str, path: str):
    """Best-effort source line of a dotted JSON path.

    Each part is looked up as an object key after the previous match;
    parts not found that way (list indices) are skipped.
    """
    pos = start = 0
    found = False
    for part in path.split("."):
        if not part:
            continue
        m = re.compile(rf'"{re.escape(part)}"\s*:').search(text, start)
        if m:
            pos = start = m.start()
            found = True
    return text.count("\n", 0, pos) + 1 if found else None


def _load(text: str, build):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    try:
        return build(doc)
    except ScenarioError as exc:
        if exc.line is None and exc.path:
            exc.line = _locate(text, exc.path)
        raise
    except GRLError as exc:
        raise ScenarioError(str(exc)) from None


def loads_scenario(text: str) -> Scenario:
    return _load(text, scenario_from_dict)


def loads_capacity(text: str) -> Capacity:
    return _load(text, capacity_from_dict)


def load_scenario(path) -> Scenario:
    with open(path, encoding="utf-8") as fh:
        return loads_scenario(fh.read())


def load_capacity(path) -> Capacity:
    with open(path, encoding="utf-8") as fh:
        return loads_capacity(fh.read())


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def report_to_text(rep: GRLReport) -> str:
    lines = [
        f"value: {'undefined' if rep.value is None else format_ext(rep.value)}",
        f"integrable: {'yes' if rep.integrable else 'no'}",
        f"method: {rep.method}",
    ]
    if rep.error_bound is not None:
        lines.append(f"error bound: {rep.error_bound:.3g}")
    if rep.rl.note:
        lines.append(f"note: {rep.rl.note}")
    if rep.rl.trace is not None:
        t = rep.rl.trace
        lines.append(f"envelope verdict: {t.verdict} after depth {t.levels[-1].depth}")
    assumed = rep.diagnostics.get("assumptions", {}).get("nu_zero_at_origin")
    if assumed and assumed["declared"]:
        lines.append("assumption: nu({0}) = 0")
    return "\n".join(lines) + "\n"
