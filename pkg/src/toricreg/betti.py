"""Graded Betti tables and their JSON / text renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .errors import ZeroIdealError


@dataclass(frozen=True)
class BettiTable:
    """Nonzero graded Betti numbers ``beta[i, j]``; absent keys are zero.

    ``truncated_at`` records a cutoff D when only internal degrees j <= D were
    computed.  ``zero_ideal`` marks tables of the zero ideal, which are empty
    for a reason other than truncation.
    """

    entries: Mapping[tuple[int, int], int] = field(default_factory=dict)
    truncated_at: int | None = None
    zero_ideal: bool = False

    def __post_init__(self):
        clean = {}
        for (i, j), v in self.entries.items():
            if v < 0:
                raise ValueError(f"negative Betti number at {(i, j)}")
            if v:
                clean[(int(i), int(j))] = int(v)
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if isinstance(other, BettiTable):
            return self.entries == other.entries
        if isinstance(other, Mapping):
            return self.entries == {k: v for k, v in other.items() if v}
        return NotImplemented

    def items(self):
        return self.entries.items()

    def restricted(self, max_j: int) -> BettiTable:
        return BettiTable({k: v for k, v in self.entries.items() if k[1] <= max_j}, truncated_at=max_j)

    def regularity(self) -> int:
        if not self.entries:
            raise ZeroIdealError("empty Betti table: the ideal is zero and has no regularity")
        return max(j - i for i, j in self.entries)

    def to_json_obj(self) -> list[dict[str, int]]:
        return [{"i": i, "j": j, "value": v} for (i, j), v in self.entries.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str | list) -> BettiTable:
        obj = json.loads(text) if isinstance(text, str) else text
        return cls({(e["i"], e["j"]): e["value"] for e in obj})

    def to_text(self) -> str:
        """Macaulay2-like layout: columns are i, rows are j - i (from the lowest
        occupied row), ``-`` marks zero."""
        if not self.entries:
            return "(zero)\n"
        max_i = max(i for i, _ in self.entries)
        min_row = min(j - i for i, j in self.entries)
        max_row = max(j - i for i, j in self.entries)
        cols = list(range(max_i + 1))
        rows = range(min_row, max_row + 1)
        cells = [[str(self[(i, r + i)]) if self[(i, r + i)] else "-" for i in cols] for r in rows]
        width = max(len(c) for row in cells for c in row)
        width = max(width, len(str(max_i)))
        lw = len(str(max_row))
        lines = [" " * lw + " |" + "".join(f" {i:>{width}}" for i in cols)]
        lines.append("-" * (lw + 1) + "+" + "-" * ((width + 1) * len(cols)))
        for r, row in zip(rows, cells):
            lines.append(f"{r:>{lw}} |" + "".join(f" {c:>{width}}" for c in row))
        return "\n".join(lines) + "\n"

    def __str__(self):
        return self.to_text()


def dominates(upper: BettiTable, lower: BettiTable, max_j: int | None = None) -> list[tuple[int, int]]:
    """Keys where ``lower`` exceeds ``upper`` (restricted to j <= max_j)."""
    keys = set(upper.entries) | set(lower.entries)
    if max_j is not None:
        keys = {k for k in keys if k[1] <= max_j}
    return sorted(k for k in keys if lower[k] > upper[k])
