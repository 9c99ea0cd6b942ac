"""Text formats for families and chain covers.

Family file::

    n=5
    # comments are ignored
    -
    1,2
    1,2,5

Cover file: the same header, then one chain per block of lines, blocks
separated by a single blank line, sets inside a block in increasing size.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Union

from .chains import ChainCover
from .errors import AntisatError, ParseError
from .lattice import Family, elements_of, format_word

PathLike = Union[str, Path]


def _parse_header(line: str) -> int:
    key, sep, value = line.partition("=")
    if key.strip() != "n" or not sep:
        raise ParseError(f"expected header 'n=<int>', got {line!r}")
    try:
        n = int(value.strip())
    except ValueError:
        raise ParseError(f"bad universe size in header {line!r}") from None
    if n < 1:
        raise ParseError("universe size must be positive")
    return n


def parse_set(text: str, n: int) -> int:
    text = text.strip()
    if text == "-":
        return 0
    try:
        elems = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ParseError(f"bad set {text!r}") from None
    if any(b <= a for a, b in zip(elems, elems[1:])):
        raise ParseError(f"elements must be strictly increasing: {text!r}")
    if elems[0] < 1 or elems[-1] > n:
        raise ParseError(f"set {text!r} leaves [1, {n}]")
    word = 0
    for i in elems:
        word |= 1 << (i - 1)
    return word


def _content_lines(text: str) -> list[str]:
    return [ln.rstrip() for ln in text.splitlines() if not ln.lstrip().startswith("#")]


def parse_family(text: str) -> Family:
    lines = [ln for ln in _content_lines(text) if ln.strip()]
    if not lines:
        raise ParseError("empty family file")
    n = _parse_header(lines[0])
    words = [parse_set(ln, n) for ln in lines[1:]]
    if len(set(words)) != len(words):
        raise ParseError("duplicate set in family file")
    try:
        return Family(n, words)
    except AntisatError as exc:
        raise ParseError(str(exc)) from None


def format_family(family: Family) -> str:
    lines = [f"n={family.universe_size}"]
    lines.extend(format_word(w) for w in family.words)
    return "\n".join(lines) + "\n"


def parse_cover(text: str) -> ChainCover:
    lines = _content_lines(text)
    while lines and not lines[0].strip():
        lines.pop(0)
    if not lines:
        raise ParseError("empty cover file")
    n = _parse_header(lines[0])
    blocks: list[list[int]] = []
    current: list[int] = []
    for ln in lines[1:]:
        if ln.strip():
            current.append(parse_set(ln, n))
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    try:
        return ChainCover.of(n, blocks)
    except AntisatError as exc:
        raise ParseError(str(exc)) from None


def format_cover(cover: ChainCover) -> str:
    parts = [f"n={cover.universe_size}"]
    for i, chain in enumerate(cover.chains):
        if i:
            parts.append("")
        parts.extend(format_word(w) for w in chain.words)
    return "\n".join(parts) + "\n"


def read_family(path: PathLike) -> Family:
    return parse_family(Path(path).read_text())


def write_family(path: PathLike, family: Family) -> None:
    Path(path).write_text(format_family(family))


def read_cover(path: PathLike) -> ChainCover:
    return parse_cover(Path(path).read_text())


def write_cover(path: PathLike, cover: ChainCover) -> None:
    Path(path).write_text(format_cover(cover))


def words_as_lists(words: Iterable[int]) -> list[list[int]]:
    return [list(elements_of(w)) for w in words]
