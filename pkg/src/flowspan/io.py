"""Instance file formats.

Structured (JSON)::

    {"machines": 3, "processing_times": [9, 8, 7, 7, 6, 5, 5, 2, 1]}

Plain text, machine count on the first line and the times on the second::

    3
    9 8 7 7 6 5 5 2 1
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import Instance, InvalidInput, normalize


class ParseError(InvalidInput):
    pass


def _as_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInput(f"{where}: expected a nonnegative integer, got {value!r}")
    if value < 0:
        raise InvalidInput(f"{where}: expected a nonnegative integer, got {value}")
    return value


def _parse_json(text: str) -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}: invalid JSON ({exc.msg})") from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    for key in ("machines", "processing_times"):
        if key not in data:
            raise ParseError(f"missing field {key!r}")
    m = _as_int(data["machines"], "field 'machines'")
    times = data["processing_times"]
    if not isinstance(times, list):
        raise ParseError("field 'processing_times' must be a list")
    times = [_as_int(p, f"field 'processing_times'[{i}]") for i, p in enumerate(times)]
    return normalize(m, times)


def _parse_text(text: str) -> Instance:
    lines = [(no, line.strip()) for no, line in enumerate(text.splitlines(), 1) if line.strip()]
    if len(lines) != 2:
        raise ParseError(f"expected 2 non-empty lines (m, then times), found {len(lines)}")
    (m_no, m_line), (t_no, t_line) = lines

    def number(token, no):
        try:
            return int(token)
        except ValueError:
            raise InvalidInput(f"line {no}: {token!r} is not an integer") from None

    m = number(m_line, m_no)
    times = [number(tok, t_no) for tok in t_line.split()]
    if any(p < 0 for p in times):
        raise InvalidInput(f"line {t_no}: processing times must be nonnegative")
    return normalize(m, times)


def parse_instance(text: str) -> Instance:
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_text(text)


def parse_instance_file(path) -> Instance:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None
    return parse_instance(text)


def emit_instance(inst: Instance, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps({"machines": inst.m, "processing_times": list(inst.times)}) + "\n"
    if fmt == "text":
        return f"{inst.m}\n{' '.join(map(str, inst.times))}\n"
    raise InvalidInput(f"unknown format {fmt!r}")
