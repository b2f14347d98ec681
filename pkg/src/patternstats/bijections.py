"""Bijections between restricted permutations, Dyck words, and binary words.

Seven maps, each with its inverse where the map is not an involution:

* ``to_dyck_231`` / ``from_dyck_231`` — S_n(231) <-> Dyck words of
  semilength n, by recursive splitting at the maximum.  Peaks correspond
  to DUU factors of the image.
* ``to_dyck_321`` / ``from_dyck_321`` — S_n(321) <-> Dyck words of
  semilength n, via the lattice path through the non-left-to-right-maxima
  points.  Peaks correspond to UUD factors strictly before the last
  up-step.
* ``to_indec_dyck_321`` — S_n(321) -> indecomposable words of semilength
  n + 1, by wrapping the previous image in U...D.  Descents correspond to
  UUD factors strictly before the last up-step.
* ``rewrite_312_to_321`` / ``rewrite_321_to_312`` — S_n(312) <-> S_n(321),
  fixing every left-to-right maximum in position and value.  Preserves
  peaks.
* ``uud_des_involution`` — an involution on Dyck words of semilength n
  exchanging the populations {uud = k, des = k+1} and {uud = k+1, des = k},
  where des is taken of the 321-avoiding preimage.  Fixed points are
  exactly the words with uud count equal to that descent count.
* ``encode_132_213`` / ``decode_132_213`` — S_n(132,213) <-> binary words
  of length n - 1 (ascent indicators; members are skew sums of increasing
  runs).
* ``encode_213_231`` / ``decode_213_231`` — S_n(213,231) <-> binary words
  of length n - 1 (each entry is the minimum or the maximum of its
  suffix).
* ``encode_123_132`` / ``decode_123_132`` — S_n(123,132) <-> binary words
  of length n - 1, built by repeatedly removing the entry 1 from the last
  or second-to-last position.

All forward maps validate their avoidance precondition eagerly and raise
:class:`PatternViolation` otherwise.
"""

from __future__ import annotations

from bisect import bisect_left

from .dyck import check_dyck, decompose, semilength, uud_count
from .perms import Perm, check_perm, contains, format_perm, ltr_maxima, reduce_word
from .stats import des


class PatternViolation(ValueError):
    """Input permutation contains a pattern the map's domain forbids."""

    def __init__(self, perm: Perm, pattern: Perm):
        super().__init__(
            f"permutation {format_perm(perm)} contains {format_perm(pattern)}")
        self.perm = perm
        self.pattern = pattern


class InvalidBitsError(ValueError):
    """Input is not a word over {0, 1}."""


def _require_avoiding(p: Perm, *patterns: Perm) -> Perm:
    p = check_perm(p)
    for pattern in patterns:
        if contains(p, pattern):
            raise PatternViolation(p, pattern)
    return p


def check_bits(bits: str) -> str:
    if any(ch not in "01" for ch in bits):
        raise InvalidBitsError(f"expected a word over {{0,1}}: {bits!r}")
    return bits


# -- S_n(231) <-> Dyck ------------------------------------------------------

def to_dyck_231(p: Perm) -> str:
    """Map a 231-avoiding permutation to a Dyck word of equal semilength.

    The word for ``a (max) b`` is ``word(a) U word(b) D``; singletons map
    to UD and the empty permutation to the empty word.
    """
    p = _require_avoiding(p, (2, 3, 1))
    return _dyck_231(p)


def _dyck_231(p: Perm) -> str:
    if not p:
        return ""
    i = p.index(len(p))
    left = reduce_word(p[:i])
    right = reduce_word(p[i + 1:])
    return _dyck_231(left) + "U" + _dyck_231(right) + "D"


def from_dyck_231(d: str) -> Perm:
    """Inverse of :func:`to_dyck_231`."""
    check_dyck(d)
    return _perm_231(d)


def _perm_231(d: str) -> Perm:
    if not d:
        return ()
    parts = decompose(d)
    left = _perm_231("".join(parts[:-1]))
    right = _perm_231(parts[-1][1:-1])
    a = len(left)
    n = a + len(right) + 1
    # entries before the maximum are exactly 1..a in a 231-avoider
    return left + (n,) + tuple(x + a for x in right)


# -- S_n(321) <-> Dyck ------------------------------------------------------

def to_dyck_321(p: Perm) -> str:
    """Map a 321-avoiding permutation to a Dyck word of equal semilength.

    Walk the lattice points (position, value) of the entries that are not
    left-to-right maxima: each contributes the E steps needed to reach its
    column followed by the N steps to reach its row, with a final run to
    the corner (n + 1, n); then read E as U and N as D.
    """
    p = _require_avoiding(p, (3, 2, 1))
    n = len(p)
    if n == 0:
        return ""
    maxima = {pos for pos, _ in ltr_maxima(p)}
    out = []
    x, y = 1, 0
    for pos in range(1, n + 1):
        if pos in maxima:
            continue
        val = p[pos - 1]
        out.append("U" * (pos - x))
        out.append("D" * (val - y))
        x, y = pos, val
    out.append("U" * (n + 1 - x))
    out.append("D" * (n - y))
    return "".join(out)


def from_dyck_321(d: str) -> Perm:
    """Inverse of :func:`to_dyck_321`."""
    check_dyck(d)
    n = semilength(d)
    if n == 0:
        return ()
    # corners of the U-run/D-run blocks are the non-left-to-right-maxima
    # points (position, value); the final corner at column n + 1 is not one
    placed = []
    x, y = 1, 0
    i = 0
    while i < len(d):
        j = i
        while j < len(d) and d[j] == "U":
            j += 1
        k = j
        while k < len(d) and d[k] == "D":
            k += 1
        x += j - i
        y += k - j
        if x <= n:
            placed.append((x, y))
        i = k
    out = [0] * n
    for pos, val in placed:
        out[pos - 1] = val
    rest = iter(sorted(set(range(1, n + 1)) - {val for _, val in placed}))
    for idx in range(n):
        if out[idx] == 0:
            out[idx] = next(rest)
    return tuple(out)


def to_indec_dyck_321(p: Perm) -> str:
    """Wrap the Dyck image of a 321-avoider in U...D.

    The result is an indecomposable word of semilength n + 1 whose
    interior UUD count equals the number of descents of ``p``.
    """
    return "U" + to_dyck_321(p) + "D"


# -- S_n(312) <-> S_n(321) --------------------------------------------------

def rewrite_312_to_321(p: Perm) -> Perm:
    """Rewrite a 312-avoider as the 321-avoider with the same maxima.

    Left-to-right maxima keep position and value; the remaining entries
    are rearranged into increasing order.  Peak count is preserved.
    """
    p = _require_avoiding(p, (3, 1, 2))
    maxpos = {pos for pos, _ in ltr_maxima(p)}
    others = iter(sorted(v for i, v in enumerate(p, start=1) if i not in maxpos))
    return tuple(p[i - 1] if i in maxpos else next(others)
                 for i in range(1, len(p) + 1))


def rewrite_321_to_312(p: Perm) -> Perm:
    """Inverse of :func:`rewrite_312_to_321`.

    Each non-maximum position receives the largest unused value below the
    most recent left-to-right maximum.
    """
    p = _require_avoiding(p, (3, 2, 1))
    maxima = dict(ltr_maxima(p))
    avail = sorted(v for i, v in enumerate(p, start=1) if i not in maxima)
    out = []
    current = 0
    for i in range(1, len(p) + 1):
        if i in maxima:
            current = maxima[i]
            out.append(current)
        else:
            j = bisect_left(avail, current) - 1
            out.append(avail.pop(j))
    return tuple(out)


# -- the UUD/descent involution ---------------------------------------------

def uud_des_involution(d: str) -> str:
    """Involution on Dyck words trading a leading UD run for a terminal rise.

    Writing s = uud count of ``d`` and t = descent count of the
    321-avoiding preimage of ``d``:

    * s == t: ``d`` is fixed.
    * s == t - 1: ``d`` = (UD)^i d' D U D^j with i maximal and d' not
      beginning in UD; the image is d' D U U^i D^i D^j.  The all-UD word
      (UD)^n, whose middle part is empty, maps to U^n D^n.
    * s == t + 1: ``d`` = d' D U^i D^j with i >= 2 the terminal rise and
      j the terminal fall; the image is (UD)^(i-1) d' D U D^(j-i+1).  The
      pyramid U^n D^n, which has no step before its rise, maps to (UD)^n.
    """
    check_dyck(d)
    n = semilength(d)
    s = uud_count(d)
    t = des(from_dyck_321(d))
    if s == t:
        return d
    if s == t - 1:
        if d == "UD" * n:
            return "U" * n + "D" * n
        i = 0
        while d.startswith("UD", 2 * i):
            i += 1
        body = d[2 * i:]
        j = len(body) - len(body.rstrip("D"))
        core = body[:len(body) - j]
        assert i >= 1 and j >= 1 and core.endswith("DU")
        return core[:-2] + "DU" + "U" * i + "D" * (i + j)
    # s == t + 1
    if d == "U" * n + "D" * n:
        return "UD" * n
    j = len(d) - len(d.rstrip("D"))
    rest = d[:len(d) - j]
    i = len(rest) - len(rest.rstrip("U"))
    head = rest[:len(rest) - i]
    assert i >= 2 and j >= i and head.endswith("D")
    return "UD" * (i - 1) + head[:-1] + "DU" + "D" * (j - i + 1)


# -- binary encodings of the two-pattern classes -----------------------------

def encode_132_213(p: Perm) -> str:
    """Ascent-indicator word of a {132,213}-avoider (1 = ascent)."""
    p = _require_avoiding(p, (1, 3, 2), (2, 1, 3))
    return "".join("1" if p[i] < p[i + 1] else "0" for i in range(len(p) - 1))


def decode_132_213(bits: str) -> Perm:
    """Inverse of :func:`encode_132_213`.

    The maximal runs of 1s give the lengths of increasing blocks, stacked
    so that each block sits below its predecessor.
    """
    check_bits(bits)
    runs = [len(part) + 1 for part in bits.split("0")]
    out = []
    top = sum(runs)
    for r in runs:
        out.extend(range(top - r + 1, top + 1))
        top -= r
    return tuple(out)


def encode_213_231(p: Perm) -> str:
    """Suffix-extreme word of a {213,231}-avoider.

    Bit i is 0 when position i holds the maximum of the remaining suffix
    and 1 when it holds the minimum.
    """
    p = _require_avoiding(p, (2, 1, 3), (2, 3, 1))
    lo, hi = 1, len(p)
    out = []
    for v in p[:-1]:
        if v == hi:
            out.append("0")
            hi -= 1
        else:
            assert v == lo
            out.append("1")
            lo += 1
    return "".join(out)


def decode_213_231(bits: str) -> Perm:
    """Inverse of :func:`encode_213_231`."""
    check_bits(bits)
    lo, hi = 1, len(bits) + 1
    out = []
    for b in bits:
        if b == "0":
            out.append(hi)
            hi -= 1
        else:
            out.append(lo)
            lo += 1
    out.append(lo)
    return tuple(out)


def encode_123_132(p: Perm) -> str:
    """Binary word of a {123,132}-avoider.

    In such a permutation the entry 1 sits in one of the last two
    positions.  Working from the full permutation down to a singleton,
    record 1 when the last entry is 1 (and drop it), or 0 when the
    second-to-last entry is 1 (drop that entry); the recorded bits, read
    from the innermost step outward, form the word.

    >>> encode_123_132((6, 5, 3, 2, 4, 1))
    '11001'
    """
    p = _require_avoiding(p, (1, 2, 3), (1, 3, 2))
    bits = []
    q = p
    while len(q) > 1:
        if q[-1] == 1:
            bits.append("1")
            q = reduce_word(q[:-1])
        else:
            assert q[-2] == 1
            bits.append("0")
            q = reduce_word(q[:-2] + (q[-1],))
    return "".join(reversed(bits))


def decode_123_132(bits: str) -> Perm:
    """Inverse of :func:`encode_123_132`.

    Reading the word left to right starting from the single entry n: bit 1
    appends the next unused value (n - i) at the end, bit 0 inserts it
    immediately before the current last entry.

    >>> decode_123_132("11001")
    (6, 5, 3, 2, 4, 1)
    """
    check_bits(bits)
    n = len(bits) + 1
    out = [n]
    for i, b in enumerate(bits, start=1):
        if b == "1":
            out.append(n - i)
        else:
            out.insert(len(out) - 1, n - i)
    return tuple(out)
