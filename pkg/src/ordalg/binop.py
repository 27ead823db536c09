"""Partial binary operation tables; None is the in-band undefined value."""

from dataclasses import dataclass


@dataclass(frozen=True)
class BinOp:
    """n-by-n table of element indices; a None cell means undefined."""

    n: int
    table: tuple

    def __post_init__(self):
        if len(self.table) != self.n:
            raise ValueError("table must have one row per element")
        for row in self.table:
            if len(row) != self.n:
                raise ValueError("table rows must all have length n")
            for cell in row:
                if cell is not None and not 0 <= cell < self.n:
                    raise ValueError(f"cell {cell!r} outside the carrier")

    @classmethod
    def from_rows(cls, rows):
        return cls(len(rows), tuple(tuple(row) for row in rows))

    @classmethod
    def from_flat(cls, n, flat, undefined=-1):
        return cls(n, tuple(
            tuple(None if flat[i * n + j] == undefined else flat[i * n + j] for j in range(n))
            for i in range(n)
        ))

    @property
    def is_total(self):
        return all(cell is not None for row in self.table for cell in row)

    def value(self, a, b):
        return self.table[a][b]

    def defined(self, a, b):
        return self.table[a][b] is not None

    def undefined_cells(self):
        return tuple(
            (a, b) for a in range(self.n) for b in range(self.n) if self.table[a][b] is None
        )

    def flat(self, undefined=-1):
        return [undefined if cell is None else cell for row in self.table for cell in row]
