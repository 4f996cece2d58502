"""Reading and writing contexts in the Burmeister CXT format.

Layout: a literal ``B`` line, a blank line, the object count, the
attribute count, another blank line, one name per line for objects then
attributes, and finally one ``.``/``X`` row per object.  Files are
written with LF line endings; CRLF input is accepted.
"""

from __future__ import annotations

from .context import FormalContext
from .errors import ParseError


def parse_cxt(text: str) -> FormalContext:
    lines = text.split("\n")
    lines = [ln[:-1] if ln.endswith("\r") else ln for ln in lines]
    # A trailing newline produces one empty tail element; drop just that.
    if lines and lines[-1] == "":
        lines.pop()

    def need(idx: int, what: str) -> str:
        if idx >= len(lines):
            raise ParseError(f"unexpected end of file, expected {what}", len(lines) + 1)
        return lines[idx]

    if need(0, "format tag 'B'") != "B":
        raise ParseError("expected format tag 'B'", 1)
    if need(1, "blank line") != "":
        raise ParseError("expected blank line after format tag", 2)

    def count(idx: int, what: str) -> int:
        raw = need(idx, what)
        try:
            value = int(raw)
        except ValueError:
            raise ParseError(f"expected {what}, got {raw!r}", idx + 1) from None
        if value < 0:
            raise ParseError(f"{what} must be non-negative", idx + 1)
        return value

    n_objects = count(2, "object count")
    n_attributes = count(3, "attribute count")
    if need(4, "blank line") != "":
        raise ParseError("expected blank line after counts", 5)

    base = 5
    objects = [need(base + i, "object name") for i in range(n_objects)]
    base += n_objects
    attributes = [need(base + i, "attribute name") for i in range(n_attributes)]
    base += n_attributes

    rows = []
    for i in range(n_objects):
        raw = need(base + i, "incidence row")
        if len(raw) != n_attributes:
            raise ParseError(
                f"row has {len(raw)} cells, expected {n_attributes}", base + i + 1)
        mask = 0
        for j, ch in enumerate(raw):
            if ch == "X":
                mask |= 1 << j
            elif ch != ".":
                raise ParseError(f"illegal incidence character {ch!r}", base + i + 1)
        rows.append(mask)
    base += n_objects
    if base < len(lines):
        raise ParseError("unexpected trailing content", base + 1)

    try:
        return FormalContext(objects, attributes, rows)
    except Exception as exc:
        raise ParseError(str(exc), base) from None


def write_cxt(ctx: FormalContext) -> str:
    out = ["B", "", str(len(ctx.objects)), str(len(ctx.attributes)), ""]
    out.extend(ctx.objects)
    out.extend(ctx.attributes)
    for r in ctx.rows:
        out.append("".join("X" if r >> j & 1 else "."
                           for j in range(len(ctx.attributes))))
    return "\n".join(out) + "\n"
