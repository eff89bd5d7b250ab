"""Text format for ideals.

A file holds one or more blocks separated by blank lines::

    # comment
    ring n=4 field=GF(32003)
    label skew-lines
    ideal(X1*X3, X1*X4, X2*X3, X2*X4)

``field`` defaults to GF(LEXCOH_PRIME); ``label`` is optional.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from . import config
from .groebner import PolyIdeal
from .monomial_ideal import MonomialIdeal
from .ring import Field, Polynomial, RingContext, RingError

_RING = re.compile(r"ring\s+n\s*=\s*(\d+)(?:\s+field\s*=\s*(\S+))?\s*$")


class IdealFormatError(RingError):
    pass


@dataclass(frozen=True)
class IdealFile:
    ctx: RingContext
    gens: tuple  # Polynomials
    label: str | None = None

    @classmethod
    def from_ideal(cls, I, label: str | None = None, field: Field | None = None) -> "IdealFile":
        if isinstance(I, MonomialIdeal):
            ctx = RingContext(I.n, field or config.default_field())
            return cls(ctx, tuple(Polynomial.monomial(ctx, g) for g in I.gens), label)
        return cls(I.ctx, tuple(I.gens), label)

    @property
    def n(self) -> int:
        return self.ctx.n

    def is_monomial(self) -> bool:
        return all(f.is_monomial() for f in self.gens)

    def ideal(self):
        """MonomialIdeal when every generator is a term, PolyIdeal otherwise."""
        if self.is_monomial():
            return MonomialIdeal(self.n, [next(iter(f.terms)) for f in self.gens])
        return PolyIdeal(self.ctx, self.gens)

    def body(self) -> str:
        if self.is_monomial():
            return str(self.ideal())
        return "ideal(" + ", ".join(str(f) for f in self.gens) + ")"

    def to_text(self) -> str:
        lines = [f"ring n={self.n} field={self.ctx.field}"]
        if self.label:
            lines.append(f"label {self.label}")
        lines.append(self.body())
        return "\n".join(lines) + "\n"

    def canonical(self) -> "IdealFile":
        return parse_ideal_file(self.to_text())


def _split_generators(body: str) -> list:
    body = body.strip()
    if not (body.startswith("ideal(") and body.endswith(")")):
        raise IdealFormatError(f"expected ideal(...), got {body[:40]!r}")
    inner = body[6:-1].strip()
    return [s.strip() for s in inner.split(",") if s.strip()] if inner else []


def parse_ideal_files(text: str) -> list:
    blocks, cur = [], []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            if cur:
                blocks.append(cur)
                cur = []
            continue
        cur.append(line)
    if cur:
        blocks.append(cur)
    return [_parse_block(b) for b in blocks]


def _parse_block(lines: list) -> IdealFile:
    m = _RING.match(lines[0])
    if not m:
        raise IdealFormatError(f"expected a 'ring n=...' header, got {lines[0]!r}")
    field = Field.parse(m.group(2)) if m.group(2) else config.default_field()
    ctx = RingContext(int(m.group(1)), field)
    label = None
    rest = lines[1:]
    if rest and rest[0].startswith("label"):
        label = rest[0][5:].strip() or None
        rest = rest[1:]
    body = " ".join(rest)
    if not body:
        raise IdealFormatError("missing ideal(...) body")
    gens = tuple(f for f in (Polynomial.parse(ctx, s) for s in _split_generators(body)) if f)
    return IdealFile(ctx, gens, label)


def parse_ideal_file(text: str) -> IdealFile:
    files = parse_ideal_files(text)
    if len(files) != 1:
        raise IdealFormatError(f"expected one ideal, found {len(files)}")
    return files[0]


def read_ideal_files(path) -> list:
    return parse_ideal_files(Path(path).read_text())


def write_ideal_files(path, files) -> None:
    Path(path).write_text("\n".join(f.to_text() for f in files))
