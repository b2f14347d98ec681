"""Exhaustive generation of permutations, pattern classes, Dyck words, and bits.

Everything is a generator with a fixed, documented order so that results
are reproducible: full symmetric groups and binary words come out in
lexicographic order, Dyck words in lexicographic order with D < U, and
structured class generators in a fixed recursive order of their own.

Generation caps are configuration, not hard constants; every function
takes an optional ``cap`` overriding the module default.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from . import bijections
from .perms import Perm, avoids_all, normalize_basis

GEN_ALL_CAP = 10
DYCK_CAP = 14
BITS_CAP = 30
STRUCTURED_CAP = 14


class CapExceededError(ValueError):
    """Requested size is beyond the configured generation cap."""


class UnsupportedBasisError(ValueError):
    """No structured generator is registered for the basis."""


def _check_cap(n: int, cap: int, what: str) -> None:
    if n < 0:
        raise ValueError(f"{what} size must be nonnegative: {n}")
    if n > cap:
        raise CapExceededError(f"{what} size {n} exceeds cap {cap}")


def gen_all(n: int, cap: int | None = None) -> Iterator[Perm]:
    """All n! permutations of 1..n in lexicographic order."""
    _check_cap(n, GEN_ALL_CAP if cap is None else cap, "permutation")
    return iter(itertools.permutations(range(1, n + 1)))


def gen_bits(length: int, cap: int | None = None) -> Iterator[str]:
    """All binary words of the given length in lexicographic order."""
    _check_cap(length, BITS_CAP if cap is None else cap, "binary word")
    return ("".join(bits) for bits in itertools.product("01", repeat=length))


def gen_dyck(n: int, cap: int | None = None) -> Iterator[str]:
    """All Dyck words of semilength n, lexicographically with D < U."""
    _check_cap(n, DYCK_CAP if cap is None else cap, "Dyck word")

    steps: list[str] = []

    def rec(ups: int, downs: int) -> Iterator[str]:
        if downs == 0:
            yield "".join(steps)
            return
        if downs > ups:
            steps.append("D")
            yield from rec(ups, downs - 1)
            steps.pop()
        if ups > 0:
            steps.append("U")
            yield from rec(ups - 1, downs)
            steps.pop()

    return rec(n, n)


def gen_indec(n: int, cap: int | None = None) -> Iterator[str]:
    """All indecomposable Dyck words of semilength n (none for n = 0)."""
    _check_cap(n, DYCK_CAP if cap is None else cap, "Dyck word")
    if n == 0:
        return iter(())
    return ("U" + d + "D" for d in gen_dyck(n - 1, cap=cap))


# -- structured class generators ---------------------------------------------

def _gen_231(n: int) -> Iterator[Perm]:
    # split at the maximum: prefix on 1..i-1, suffix on i..n-1
    if n == 0:
        yield ()
        return
    for i in range(1, n + 1):
        for a in _gen_231(i - 1):
            for b in _gen_231(n - i):
                yield a + (n,) + tuple(x + i - 1 for x in b)


def _gen_321(n: int) -> Iterator[Perm]:
    for d in gen_dyck(n, cap=STRUCTURED_CAP):
        yield bijections.from_dyck_321(d)


def _gen_213_312(n: int) -> Iterator[Perm]:
    # increasing prefix, the maximum, then a decreasing suffix
    if n == 0:
        yield ()
        return
    values = range(1, n)
    for r in range(n):
        for prefix in itertools.combinations(values, r):
            suffix = tuple(sorted(set(values) - set(prefix), reverse=True))
            yield prefix + (n,) + suffix


def _gen_132_213(n: int) -> Iterator[Perm]:
    if n == 0:
        yield ()
        return
    for bits in gen_bits(n - 1):
        yield bijections.decode_132_213(bits)


def _gen_213_231(n: int) -> Iterator[Perm]:
    if n == 0:
        yield ()
        return
    for bits in gen_bits(n - 1):
        yield bijections.decode_213_231(bits)


def _gen_123_132(n: int) -> Iterator[Perm]:
    if n == 0:
        yield ()
        return
    for bits in gen_bits(n - 1):
        yield bijections.decode_123_132(bits)


def _gen_132_321(n: int) -> Iterator[Perm]:
    # the identity, plus one permutation per choice of a descending cut
    if n == 0:
        yield ()
        return
    yield tuple(range(1, n + 1))
    for a in range(1, n):
        for b in range(1, n - a + 1):
            yield (tuple(range(b + 1, b + a + 1)) + tuple(range(1, b + 1))
                   + tuple(range(a + b + 1, n + 1)))


STRUCTURED = {
    normalize_basis([(2, 3, 1)]): _gen_231,
    normalize_basis([(3, 2, 1)]): _gen_321,
    normalize_basis([(2, 1, 3), (3, 1, 2)]): _gen_213_312,
    normalize_basis([(1, 3, 2), (2, 1, 3)]): _gen_132_213,
    normalize_basis([(2, 1, 3), (2, 3, 1)]): _gen_213_231,
    normalize_basis([(1, 2, 3), (1, 3, 2)]): _gen_123_132,
    normalize_basis([(1, 3, 2), (3, 2, 1)]): _gen_132_321,
}


def structured_bases() -> tuple[tuple[Perm, ...], ...]:
    return tuple(STRUCTURED)


def gen_class(n: int, basis, method: str = "auto",
              cap: int | None = None) -> Iterator[Perm]:
    """All permutations of length n avoiding every pattern in ``basis``.

    ``method`` is "filter" (scan the full symmetric group), "structured"
    (use a registered class-specific generator), or "auto" (structured
    when available).  Filter output is lexicographic; structured output
    order is generator-specific but fixed.
    """
    key = normalize_basis(basis)
    if method == "auto":
        method = "structured" if key in STRUCTURED else "filter"
    if method == "structured":
        if key not in STRUCTURED:
            raise UnsupportedBasisError(
                f"no structured generator for basis {key!r}")
        _check_cap(n, STRUCTURED_CAP if cap is None else cap, "class")
        return STRUCTURED[key](n)
    if method != "filter":
        raise ValueError(f"unknown method {method!r}")
    return (p for p in gen_all(n, cap=cap) if avoids_all(p, key))
