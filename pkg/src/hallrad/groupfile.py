"""Plain-text group files.

    # comment
    degree: 5
    gen: (0 1 2 3 4)
    gen: (0 1 2)

Points are 0-based; ``gen: ()`` is the identity.
"""

from __future__ import annotations

import hashlib
from pathlib import Path
from typing import Union

from .perm import format_cycles, parse_cycles
from .permgroup import PermGroup


class GroupFileError(ValueError):
    pass


def parse_group_text(text: str, source: str = "<text>") -> PermGroup:
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key, value = key.strip().lower(), value.strip()
        if not sep:
            raise GroupFileError(f"{source}:{lineno}: expected 'key: value'")
        if key == "degree":
            if degree is not None:
                raise GroupFileError(f"{source}:{lineno}: degree given twice")
            try:
                degree = int(value)
            except ValueError:
                raise GroupFileError(f"{source}:{lineno}: degree must be an integer") from None
            if degree < 1:
                raise GroupFileError(f"{source}:{lineno}: degree must be positive")
        elif key == "gen":
            if degree is None:
                raise GroupFileError(f"{source}:{lineno}: gen before degree")
            try:
                gens.append(parse_cycles(value, degree))
            except ValueError as exc:
                raise GroupFileError(f"{source}:{lineno}: {exc}") from None
        else:
            raise GroupFileError(f"{source}:{lineno}: unknown key {key!r}")
    if degree is None:
        raise GroupFileError(f"{source}: missing degree line")
    return PermGroup(degree, gens, check=False)


def parse_group_file(path: Union[str, Path]) -> PermGroup:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise GroupFileError(f"{path}: {exc.strerror or exc}") from None
    return parse_group_text(text, str(path))


def format_group(G: PermGroup, comment: str = "") -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.append(f"degree: {G.degree}")
    lines += [f"gen: {format_cycles(g)}" for g in G.gens]
    return "\n".join(lines) + "\n"


def write_group_file(path: Union[str, Path], G: PermGroup, comment: str = "") -> None:
    Path(path).write_text(format_group(G, comment), encoding="utf-8")


def digest(path: Union[str, Path]) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
