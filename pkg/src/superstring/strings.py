"""Exact string primitives: overlaps, merges, occurrence counts, and
substring-free input sets.

Strings are plain ``str`` restricted to printable ASCII without spaces
(0x21..0x7E).  ``$`` is reserved for the sentinel transformation and is
rejected by :func:`normalize` unless explicitly allowed.  The empty
string is representable only as an overlap value, never as a set member.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import kernels
from .errors import EmptyInstanceError, InvalidInputError

SENTINEL = "$"

_MIN_CODE = 0x21
_MAX_CODE = 0x7E


def _check_string(s: str, allow_sentinel: bool) -> None:
    if not s:
        raise InvalidInputError("strings must be non-empty")
    for ch in s:
        code = ord(ch)
        if code < _MIN_CODE or code > _MAX_CODE:
            raise InvalidInputError(f"symbol {ch!r} is not printable ASCII (no spaces)")
    if not allow_sentinel and SENTINEL in s:
        raise InvalidInputError(f"{SENTINEL!r} is reserved for the sentinel transformation")


@lru_cache(maxsize=65536)
def _overlap_len(s: str, t: str) -> int:
    return kernels.overlap_len(s.encode("ascii"), t.encode("ascii"))


@dataclass(frozen=True)
class OverlapSplit:
    """Decomposition of an ordered pair (s, t): ``pref + ov == s`` and
    ``ov + suff == t``, with ``ov`` the longest string allowing non-empty
    ``pref`` and ``suff``."""

    pref: str
    ov: str
    suff: str

    @property
    def distance(self) -> int:
        return len(self.pref)


def overlap_length(s: str, t: str) -> int:
    """Length of the maximal overlap of the ordered pair (s, t)."""
    if not s or not t:
        raise InvalidInputError("overlap requires non-empty strings")
    return _overlap_len(s, t)


def split(s: str, t: str) -> OverlapSplit:
    """Maximal overlap decomposition of the ordered pair (s, t).

    ``split(s, s)`` computes the longest proper border of ``s``.
    """
    if not s or not t:
        raise InvalidInputError("split requires non-empty strings")
    k = _overlap_len(s, t)
    return OverlapSplit(pref=s[: len(s) - k], ov=s[len(s) - k :], suff=t[k:])


def merge(s: str, t: str) -> str:
    """Shortest string with prefix ``s`` and suffix ``t``."""
    if not s or not t:
        raise InvalidInputError("merge requires non-empty strings")
    return s + t[_overlap_len(s, t) :]


def count_occurrences(s: str, p: str) -> int:
    """Number of positions of single symbol ``p`` in ``s``."""
    if len(p) != 1:
        raise InvalidInputError("occurrence counting is defined for single symbols")
    return s.count(p)


@dataclass(frozen=True)
class Instance:
    """A substring-free, duplicate-free ordered set of non-empty strings."""

    strings: tuple[str, ...]
    allow_sentinel: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if not self.strings:
            raise EmptyInstanceError("an instance needs at least one string")
        for s in self.strings:
            _check_string(s, self.allow_sentinel)
        if len(set(self.strings)) != len(self.strings):
            raise InvalidInputError("duplicate strings in instance")
        for i, s in enumerate(self.strings):
            for j, t in enumerate(self.strings):
                if i != j and s in t:
                    raise InvalidInputError(f"{s!r} is a substring of {t!r}")

    @property
    def n(self) -> int:
        return len(self.strings)

    @property
    def alphabet(self) -> tuple[str, ...]:
        return tuple(sorted(set("".join(self.strings))))

    def total_length(self) -> int:
        return sum(len(s) for s in self.strings)


def normalize(raw, allow_sentinel: bool = False) -> Instance:
    """Drop duplicates and strings contained in another; keep input order.

    Raises on empty member strings and on an empty result set.
    """
    seen: list[str] = []
    for s in raw:
        _check_string(s, allow_sentinel)
        if s not in seen:
            seen.append(s)
    survivors = [s for s in seen if not any(s != t and s in t for t in seen)]
    if not survivors:
        raise EmptyInstanceError("no strings left after normalization")
    return Instance(tuple(survivors), allow_sentinel=allow_sentinel)


def _check_permutation(perm, n: int) -> tuple[int, ...]:
    perm = tuple(perm)
    if sorted(perm) != list(range(n)):
        raise InvalidInputError(f"not a permutation of 0..{n - 1}: {perm}")
    return perm


def superstring_of_permutation(inst: Instance, perm) -> str:
    """Left-fold merge of the instance strings in permutation order."""
    perm = _check_permutation(perm, inst.n)
    out = inst.strings[perm[0]]
    for idx in perm[1:]:
        out = merge(out, inst.strings[idx])
    return out


def parse_instance_lines(text: str) -> list[str]:
    """Data lines of the instance text format, in order.

    One string per line; lines starting with ``#`` are comments, blank
    lines are ignored.
    """
    raw = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped != line.rstrip("\n"):
            raise InvalidInputError(f"line {lineno}: leading/trailing whitespace")
        raw.append(stripped)
    if not raw:
        raise EmptyInstanceError("no strings in input")
    return raw


def parse_instance_text(text: str, allow_sentinel: bool = False) -> Instance:
    """Parse the text format into a validated instance (strict: the file
    must already be duplicate- and substring-free)."""
    return Instance(tuple(parse_instance_lines(text)), allow_sentinel=allow_sentinel)


def serialize_instance_text(inst: Instance) -> str:
    for s in inst.strings:
        if s.startswith("#"):
            raise InvalidInputError("strings starting with '#' cannot be serialized")
    return "\n".join(inst.strings) + "\n"
