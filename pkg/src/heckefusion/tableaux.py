"""Partitions and standard Young tableaux.

Partitions are weakly decreasing tuples of positive ints; cells are 1-based
``(row, column)`` pairs; tableau text is rows separated by ``/`` with
space-separated entries, e.g. ``"1 2 / 3"``.
"""
from dataclasses import dataclass
from functools import cached_property
from math import factorial, prod

from .errors import ParseError
from .scalar import QRat, ONE, qint


def partition(parts):
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"not a partition: {parts}")
    return parts


def parse_partition(text):
    try:
        fields = text.replace(" ", "").split(",")
        if not all(fields):
            raise ValueError("empty part")
        return partition(int(x) for x in fields)
    except ValueError as exc:
        raise ParseError(f"bad partition {text!r}: {exc}") from None


def partition_str(la):
    return ",".join(str(p) for p in la)


def conjugate(la):
    if not la:
        return ()
    return tuple(sum(1 for p in la if p > j) for j in range(la[0]))


def cells(la):
    return [(i + 1, j + 1) for i, p in enumerate(la) for j in range(p)]


def content(cell):
    i, j = cell
    return j - i


def addable_cells(mu):
    """Cells whose addition to ``mu`` gives a diagram, top to bottom."""
    out = []
    for i in range(len(mu) + 1):
        row = mu[i] if i < len(mu) else 0
        if i == 0 or mu[i - 1] > row:
            out.append((i + 1, row + 1))
    return out


def removable_cells(la):
    out = []
    for i, p in enumerate(la):
        if i + 1 == len(la) or la[i + 1] < p:
            out.append((i + 1, p))
    return out


def add_cell(mu, cell):
    i, j = cell
    parts = list(mu) + [0]
    if parts[i - 1] != j - 1 or cell not in addable_cells(mu):
        raise ValueError(f"cell {cell} is not addable to {mu}")
    parts[i - 1] += 1
    return tuple(p for p in parts if p)


def hook(la, cell):
    i, j = cell
    return la[i - 1] + conjugate(la)[j - 1] - i - j + 1


def hooks(la):
    """Hook lengths, one per cell in row-major order."""
    conj = conjugate(la)
    return [la[i - 1] + conj[j - 1] - i - j + 1 for i, j in cells(la)]


def b_lambda(la):
    return sum(p * (p - 1) for p in la)


def f_lambda(la):
    """Normalization ``prod over cells of q^{content} / [hook]_q``."""
    out = ONE
    conj = conjugate(la)
    for i, j in cells(la):
        h = la[i - 1] + conj[j - 1] - i - j + 1
        out = out * QRat.q_power(j - i) / qint(h)
    return out


def f_lambda_alt(la):
    """``q^{b(la)} (1 - q^2)^n prod (1 - q^{2h})^{-1}``, the second product form."""
    n = sum(la)
    one_minus_q2 = QRat.laurent({0: 1, 2: -1})
    out = QRat.q_power(b_lambda(la)) * one_minus_q2 ** n
    for h in hooks(la):
        out = out / QRat.laurent({0: 1, 2 * h: -1})
    return out


def count_syt(la):
    """Hook length formula."""
    return factorial(sum(la)) // prod(hooks(la))


def enumerate_partitions(n):
    """Partitions of n in reverse lexicographic order: (n), (n-1, 1), ..."""
    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in gen(rest - p, p):
                yield (p,) + tail
    if n == 0:
        return [()]
    return list(gen(n, n))


@dataclass(frozen=True)
class Tableau:
    """Filling of a diagram by 1..n, rows top to bottom."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        partition(len(r) for r in rows)
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError(f"entries must be 1..n exactly once: {rows}")

    @classmethod
    def parse(cls, text):
        try:
            rows = [tuple(int(x) for x in r.split()) for r in text.split("/")]
            if any(not r for r in rows):
                raise ValueError("empty row")
            return cls(tuple(rows))
        except ValueError as exc:
            raise ParseError(f"bad tableau {text!r}: {exc}") from None

    def __str__(self):
        return " / ".join(" ".join(str(x) for x in r) for r in self.rows)

    @property
    def shape(self):
        return tuple(len(r) for r in self.rows)

    @property
    def n(self):
        return sum(len(r) for r in self.rows)

    @cached_property
    def positions(self):
        return {x: (i + 1, j + 1) for i, r in enumerate(self.rows) for j, x in enumerate(r)}

    def cell_of(self, k):
        return self.positions[k]

    def is_standard(self):
        rows = self.rows
        for i, r in enumerate(rows):
            if any(a >= b for a, b in zip(r, r[1:])):
                return False
            if i and any(rows[i - 1][j] >= x for j, x in enumerate(r)):
                return False
        return True

    def contents(self):
        """``c_k = column - row`` of the cell holding k, for k = 1..n."""
        if not self.is_standard():
            raise ValueError(f"tableau {self} is not standard")
        return tuple(content(self.cell_of(k)) for k in range(1, self.n + 1))

    def q_contents(self):
        return tuple(QRat.q_power(2 * c) for c in self.contents())

    def remove_max(self):
        """The tableau with the entry n removed."""
        n = self.n
        rows = [tuple(x for x in r if x != n) for r in self.rows]
        return Tableau(tuple(r for r in rows if r))

    def extensions(self):
        """Standard tableaux obtained by adding a cell holding n + 1."""
        out = []
        for i, _ in addable_cells(self.shape):
            rows = [list(r) for r in self.rows] + [[]]
            rows[i - 1].append(self.n + 1)
            out.append(Tableau(tuple(tuple(r) for r in rows if r)))
        return out


def content_sequence(T):
    return T.contents()


def row_tableau(la):
    rows, k = [], 1
    for p in la:
        rows.append(tuple(range(k, k + p)))
        k += p
    return Tableau(tuple(rows))


def enumerate_syt(la):
    """All standard tableaux of shape ``la``, ordered by their row reading word."""
    la = partition(la)
    n = sum(la)
    if n == 0:
        return []
    found = []

    def grow(T):
        if T.n == n:
            found.append(T)
            return
        for ext in T.extensions():
            sh = ext.shape
            if len(sh) <= len(la) and all(a <= b for a, b in zip(sh, la)):
                grow(ext)

    grow(Tableau(((1,),)))
    return sorted(found, key=lambda T: tuple(x for r in T.rows for x in r))


def all_syt(n):
    return [T for la in enumerate_partitions(n) for T in enumerate_syt(la)]
