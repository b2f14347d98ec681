"""Exact truncated bivariate power series in q and z.

Coefficients are Python integers (exact, unbounded).  A series is stored
as a tuple of rows, one per power of z up to the truncation degree; row n
lists the coefficients of q^0, q^1, ... with trailing zeros trimmed.
Operations never consult terms beyond the truncation degree.

Five named series are exposed:

* ``series_des_321`` — descent counts over 321-avoiders: the unique
  power-series solution G of z(1 - z + qz) G^2 - G + 1 = 0 with G(0) = 1,
  obtained by fixed-point iteration.
* ``series_pk_321`` — peak counts over 321-avoiders, 1 + z G^2.
* ``series_indec_uud`` — UUD counts over indecomposable Dyck words,
  (G - 1) / G.
* ``series_indec_interior_uud`` — interior UUD counts over indecomposable
  Dyck words, z G.
* ``series_ddes_132_213`` — double-descent counts over {132,213}-avoiders:
  the rational function (1 - qz) / (1 - z - z^2 - qz + qz^2) expanded via
  its row recurrence.
"""

from __future__ import annotations

Row = tuple[int, ...]


def _trim(row) -> Row:
    row = list(row)
    while row and row[-1] == 0:
        row.pop()
    return tuple(row)


def _poly_add(a, b) -> Row:
    size = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                 for i in range(size))


def _poly_sub(a, b) -> Row:
    size = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
                 for i in range(size))


def _poly_mul(a, b) -> Row:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


class BivariateSeries:
    """Truncated series sum_{n <= degree} row_n(q) z^n with integer rows."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(_trim(r) for r in rows)

    @property
    def degree(self) -> int:
        return len(self.rows) - 1

    def coeff(self, n: int, k: int) -> int:
        """Coefficient of z^n q^k; exact, never a truncated guess."""
        if not 0 <= n <= self.degree:
            raise IndexError(f"z-degree {n} outside truncation 0..{self.degree}")
        row = self.rows[n]
        return row[k] if 0 <= k < len(row) else 0

    def row_counts(self, n: int) -> dict[int, int]:
        """Row n as a sparse map k -> coefficient (zeros omitted)."""
        if not 0 <= n <= self.degree:
            raise IndexError(f"z-degree {n} outside truncation 0..{self.degree}")
        return {k: c for k, c in enumerate(self.rows[n]) if c}

    def row_sum(self, n: int) -> int:
        return sum(self.rows[n])

    def __eq__(self, other) -> bool:
        return isinstance(other, BivariateSeries) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"BivariateSeries(degree={self.degree})"


def _mul(x: list[Row], y: list[Row], n_max: int) -> list[Row]:
    out: list[Row] = [()] * (n_max + 1)
    for a in range(n_max + 1):
        if not x[a]:
            continue
        for b in range(n_max + 1 - a):
            if y[b]:
                out[a + b] = _poly_add(out[a + b], _poly_mul(x[a], y[b]))
    return out


def _add(x: list[Row], y: list[Row]) -> list[Row]:
    return [_poly_add(a, b) for a, b in zip(x, y)]


def _div(x: list[Row], y: list[Row], n_max: int) -> list[Row]:
    # requires y to have constant term 1 (as a polynomial in q)
    assert y[0] == (1,)
    out: list[Row] = []
    for n in range(n_max + 1):
        acc = x[n]
        for m in range(1, n + 1):
            if y[m] and out[n - m]:
                acc = _poly_sub(acc, _poly_mul(y[m], out[n - m]))
        out.append(acc)
    return out


def _des_321_rows(max_n: int) -> list[Row]:
    w: list[Row] = [()] * (max_n + 1)
    if max_n >= 1:
        w[1] = (1,)
    if max_n >= 2:
        w[2] = (-1, 1)
    one: list[Row] = [(1,)] + [()] * max_n
    g = list(one)
    for _ in range(max_n + 1):
        g = _add(one, _mul(w, _mul(g, g, max_n), max_n))
    return g


def series_des_321(max_n: int) -> BivariateSeries:
    """Coefficient of z^n q^k counts 321-avoiders of length n with k descents.

    Equivalently, Dyck words of semilength n with k UUD factors.
    """
    return BivariateSeries(_des_321_rows(max_n))


def series_pk_321(max_n: int) -> BivariateSeries:
    """Coefficient of z^n q^k counts 321-avoiders of length n with k peaks.

    Equivalently, Dyck words of semilength n with k interior UUD factors.
    """
    g = _des_321_rows(max_n)
    g2 = _mul(g, g, max_n)
    rows: list[Row] = [(1,)] + [g2[n - 1] for n in range(1, max_n + 1)]
    return BivariateSeries(rows)


def series_indec_uud(max_n: int) -> BivariateSeries:
    """Coefficient of z^n q^k counts indecomposable words with k UUD factors."""
    g = _des_321_rows(max_n)
    g_minus_1 = [_poly_sub(g[0], (1,))] + list(g[1:])
    return BivariateSeries(_div(g_minus_1, g, max_n))


def series_indec_interior_uud(max_n: int) -> BivariateSeries:
    """Coefficient of z^n q^k counts indecomposable words with k interior UUDs.

    This is the z-shift of :func:`series_des_321`.
    """
    g = _des_321_rows(max_n)
    rows: list[Row] = [()] + g[:max_n]
    return BivariateSeries(rows)


def series_ddes_132_213(max_n: int) -> BivariateSeries:
    """Coefficient of z^n q^k counts {132,213}-avoiders with k double descents.

    Rows follow the recurrence F_n = (1 + q) F_{n-1} + (1 - q) F_{n-2}
    with corrections +1 at n = 0 and -q at n = 1, which expands the
    rational form (1 - qz) / (1 - z - z^2 - qz + qz^2).
    """
    rows: list[Row] = []
    for n in range(max_n + 1):
        if n == 0:
            rows.append((1,))
            continue
        acc = _poly_mul((1, 1), rows[n - 1])
        if n >= 2:
            acc = _poly_add(acc, _poly_mul((1, -1), rows[n - 2]))
        if n == 1:
            acc = _poly_sub(acc, (0, 1))
        rows.append(acc)
    return BivariateSeries(rows)
