"""Reading problem instances from JSON.

An instance file is one JSON object; indices are 1-based throughout.

.. code-block:: json

    {
      "name": "coupled-demo",
      "n": 2,
      "star": {"preset": "coupled"},
      "partition": {"A": [1], "B": [2]},
      "space": {"real": {"dim": 1}},
      "F": {"builtin": "linear-combination", "coefficients": [0.25, -0.25]},
      "g": "identity",
      "phi": {"linear": {"alpha": "1/2"}},
      "contraction_form": "pointwise-sum",
      "initial": [-1, 1]
    }

``star`` is ``{"preset": name, ...params}`` or ``{"matrix": rows}``.
``partition`` may be omitted when the preset supplies one, or given as
``"odd-even"`` or ``"prefix:p"``.  ``space`` is ``{"finite": {...}}`` with
``elements``, ``dist`` and ``leq`` (or a ``chain`` / ``antichain`` shortcut),
or ``{"real": {"dim", "bounds"}}``.  ``F`` is ``{"table": [[args, value],
...]}`` or a builtin; ``g`` is ``"identity"``, ``{"table": [[x, gx], ...]}``
or a builtin.  Optional keys: ``weights``, ``mode``, ``assumptions``,
``initial``, ``E``, ``seed``, ``samples``.
"""

from __future__ import annotations

import json
import math
from importlib import resources
from pathlib import Path

from . import contractions
from .errors import NTupledError, ParseError
from .index_algebra import Partition, build_from_matrix, odd_even, prefix_partition, preset
from .solver import ProblemInstance
from .spaces import IDENTITY, AssumptionSet, FiniteOrderedMetricSpace, MappingTable, RealSpace, to_exact

__all__ = ["load_instance", "parse_instance", "bundled_instances", "resolve_instance_path",
           "parse_matrix_text", "parse_partition"]


def _label(v):
    # JSON has no tuples; nested lists become tuples so labels stay hashable
    return tuple(_label(x) for x in v) if isinstance(v, list) else v


def parse_partition(spec, n: int) -> Partition:
    if isinstance(spec, str):
        if spec == "odd-even":
            return odd_even(n)
        if spec.startswith("prefix:"):
            return prefix_partition(n, int(spec.split(":", 1)[1]))
        raise ParseError(f"unknown partition shorthand {spec!r}")
    if isinstance(spec, dict) and "A" in spec and "B" in spec:
        return Partition(n, spec["A"], spec["B"])
    raise ParseError("partition must be {\"A\": [...], \"B\": [...]}, \"odd-even\" or \"prefix:p\"")


def parse_matrix_text(text: str) -> list[list[int]]:
    """Rows separated by ``;`` or newlines, entries by spaces or commas.

    Raises :class:`ParseError` pointing at the first bad row/token.
    """
    rows = [r for r in (chunk.strip() for chunk in text.replace(";", "\n").splitlines()) if r]
    if not rows:
        raise ParseError("empty matrix")
    out = []
    for line, r in enumerate(rows, 1):
        tokens = r.replace(",", " ").split()
        row = []
        for pos, tok in enumerate(tokens, 1):
            try:
                row.append(int(tok))
            except ValueError:
                raise ParseError(f"matrix entry {tok!r} is not an integer", line, pos) from None
        out.append(row)
    width = len(out)
    for line, row in enumerate(out, 1):
        if len(row) != width:
            raise ParseError(f"row has {len(row)} entries, expected {width}", line, len(row))
    return out


def _parse_space(spec):
    if not isinstance(spec, dict) or len(spec) != 1:
        raise ParseError("space must be {\"finite\": {...}} or {\"real\": {...}}")
    kind, body = next(iter(spec.items()))
    if kind == "real":
        bounds = body.get("bounds")
        return RealSpace(int(body.get("dim", 1)), tuple(bounds) if bounds is not None else None)
    if kind != "finite":
        raise ParseError(f"unknown space kind {kind!r}")
    if "chain" in body:
        return FiniteOrderedMetricSpace.chain([_label(x) for x in body["chain"]], body.get("dist"))
    if "antichain" in body:
        return FiniteOrderedMetricSpace.antichain([_label(x) for x in body["antichain"]], body.get("dist"))
    try:
        elements = [_label(x) for x in body["elements"]]
        leq = [(_label(a), _label(b)) for a, b in body["leq"]]
        return FiniteOrderedMetricSpace(elements, body["dist"], leq)
    except KeyError as exc:
        raise ParseError(f"finite space is missing {exc}") from None


def _linear_combination(coefficients, constant=0.0):
    cs = [float(c) for c in coefficients]
    c0 = float(constant)

    def F(U):
        return sum(c * x for c, x in zip(cs, U)) + c0
    F.arity = len(cs)
    return F


def _product():
    def F(U):
        return math.prod(U)
    return F


def _constant(value):
    v = _label(value)

    def F(U):
        return v
    return F


F_BUILTINS = {"linear-combination": _linear_combination, "product": _product, "constant": _constant}


def _parse_F(spec, n, space):
    if "table" in spec:
        table = {tuple(_label(a) for a in args): _label(v) for args, v in spec["table"]}
        F = MappingTable(table, n)
        if space.is_finite:
            problems = F.problems(space)
            if problems:
                raise ParseError("F table: " + "; ".join(problems[:3]))
        return F
    if "builtin" in spec:
        params = {k: v for k, v in spec.items() if k != "builtin"}
        try:
            make = F_BUILTINS[spec["builtin"]]
        except KeyError:
            raise ParseError(f"unknown F builtin {spec['builtin']!r}; known: {sorted(F_BUILTINS)}") from None
        F = make(**params)
        if space.is_finite:
            F = MappingTable.from_function(space, F, n)
        return F
    raise ParseError("F must have \"table\" or \"builtin\"")


def _affine(slope, intercept=0.0):
    a, b = float(slope), float(intercept)
    if a == 0:
        raise ParseError("affine g needs a nonzero slope to have a section")

    def g(x):
        return a * x + b
    return g, (lambda y: (y - b) / a)


def _parse_g(spec, space):
    if spec is None or spec == "identity":
        return IDENTITY, None
    if isinstance(spec, dict) and "table" in spec:
        g = MappingTable({_label(x): _label(y) for x, y in spec["table"]}, 1)
        if space.is_finite:
            problems = g.problems(space)
            if problems:
                raise ParseError("g table: " + "; ".join(problems[:3]))
        return g, None
    if isinstance(spec, dict) and spec.get("builtin") == "affine":
        return _affine(spec["slope"], spec.get("intercept", 0.0))
    raise ParseError("g must be \"identity\", {\"table\": ...} or {\"builtin\": \"affine\", ...}")


def _parse_phi(spec):
    if spec is None:
        return None
    if "linear" in spec:
        return contractions.linear(to_exact(spec["linear"]["alpha"]))
    if "builtin" in spec:
        params = {k: v for k, v in spec.items() if k != "builtin"}
        return contractions.from_builtin(spec["builtin"], **params)
    raise ParseError("phi must be {\"linear\": {\"alpha\": a}} or {\"builtin\": name}")


def _parse_star(spec, n):
    if not isinstance(spec, dict):
        raise ParseError("star must be an object")
    if "matrix" in spec:
        rows = spec["matrix"]
        if isinstance(rows, str):
            rows = parse_matrix_text(rows)
        return build_from_matrix(n, rows), None
    if "preset" in spec:
        params = {k: v for k, v in spec.items() if k != "preset"}
        op, part = preset(spec["preset"], n, **params)
        return op, part
    raise ParseError("star must have \"preset\" or \"matrix\"")


def parse_instance(data: dict, name: str = "") -> ProblemInstance:
    """Build a :class:`ProblemInstance` from decoded JSON."""
    try:
        n = int(data["n"])
        op, part = _parse_star(data["star"], n)
        if "partition" in data:
            part = parse_partition(data["partition"], n)
        if part is None:
            raise ParseError("no partition given and the operation source supplies none")
        space = _parse_space(data["space"])
        F = _parse_F(data["F"], n, space)
        g, section = _parse_g(data.get("g"), space)
        assumptions = AssumptionSet()
        for flag, value in sorted((data.get("assumptions") or {}).items()):
            assumptions.declare(flag, bool(value))
        weights = data.get("weights")
        initial = data.get("initial")
        E = data.get("E")
        return ProblemInstance(
            space=space,
            F=F,
            g=g,
            g_section=section,
            op=op,
            part=part,
            phi=_parse_phi(data.get("phi")),
            contraction_form=data.get("contraction_form", "sum"),
            weights=tuple(to_exact(w) for w in weights) if weights is not None else None,
            assumptions=assumptions,
            mode=data.get("mode", "compatible"),
            E=frozenset(_label(x) for x in E) if E is not None else None,
            initial=tuple(_label(x) if space.is_finite else float(x) for x in initial)
            if initial is not None else None,
            samples=int(data.get("samples", 10_000)),
            seed=int(data.get("seed", 0)),
            name=data.get("name", name),
        )
    except ParseError:
        raise
    except KeyError as exc:
        raise ParseError(f"instance is missing field {exc}") from None
    except (NTupledError, ValueError, TypeError) as exc:
        raise ParseError(f"invalid instance: {exc}") from None


def bundled_instances() -> list[str]:
    root = resources.files("ntupled") / "instances"
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".json"))


def resolve_instance_path(path: str):
    """The file itself if it exists, else a bundled instance of that name."""
    p = Path(path)
    if p.exists():
        return p
    root = resources.files("ntupled") / "instances"
    for candidate in (p.name, p.name + ".json"):
        bundled = root / candidate
        if bundled.is_file():
            return bundled
    raise FileNotFoundError(2, "no such instance file or bundled instance", path)


def load_instance(path) -> ProblemInstance:
    """Read and parse an instance file (or a bundled instance by name).

    Raises ``FileNotFoundError``/``OSError`` for I/O problems and
    :class:`ParseError` (with line and column for malformed JSON) otherwise.
    """
    src = resolve_instance_path(str(path))
    text = src.read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("an instance file must hold a JSON object")
    return parse_instance(data, Path(str(src)).stem)
