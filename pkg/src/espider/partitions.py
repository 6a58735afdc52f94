"""Integer partitions: canonical value objects, streams, and small helpers.

A partition is stored weakly decreasing with every part >= 1; construction is
the single normalization point, so everything downstream (expansion keys, leg
lists, connected-partition types) may assume sortedness.
"""

from __future__ import annotations

import re
from math import factorial
from typing import Iterable, Iterator


class Partition:
    """A partition of a nonnegative integer, parts stored weakly decreasing."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(sorted(parts, reverse=True))
        for p in ps:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
        object.__setattr__(self, "parts", ps)

    @property
    def n(self) -> int:
        """Weight: the integer this object partitions."""
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        # Tuple order on parts; descending sort of equal-weight partitions
        # gives the reverse-lexicographic stream order used everywhere.
        return self.parts < other.parts

    def __le__(self, other):
        return self.parts <= other.parts

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def exponential_form(self) -> list[tuple[int, int]]:
        """Regroup as (part value, multiplicity) pairs, values decreasing."""
        out: list[tuple[int, int]] = []
        for p in self.parts:
            if out and out[-1][0] == p:
                out[-1] = (p, out[-1][1] + 1)
            else:
                out.append((p, 1))
        return out

    def exponential_str(self) -> str:
        """Render like ``3^2 2 1^4`` (empty partition renders as '')."""
        bits = []
        for value, mult in self.exponential_form():
            bits.append(f"{value}^{mult}" if mult > 1 else f"{value}")
        return " ".join(bits)

    def residue_vector(self, m: int) -> tuple[int, ...]:
        """Entrywise residues of the parts modulo m (m > 1 required)."""
        if m <= 1:
            raise ValueError(f"modulus must exceed 1, got {m}")
        return tuple(p % m for p in self.parts)

    def combine_parts(self, i: int, j: int) -> "Partition":
        """Replace parts i and j by their sum; result re-sorted."""
        if i == j:
            raise IndexError("combine_parts needs two distinct indices")
        a, b = self.parts[i], self.parts[j]  # IndexError propagates
        rest = [p for k, p in enumerate(self.parts) if k not in (i, j)]
        return Partition(rest + [a + b])

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse either bracket form ``[4,3,3]`` or exponential ``3^2 2 1^4``."""
        text = text.strip()
        if text.startswith("[") and text.endswith("]"):
            inner = text[1:-1].strip()
            if not inner:
                return cls()
            return cls(int(tok) for tok in inner.split(","))
        if text == "":
            return cls()
        parts: list[int] = []
        for tok in text.split():
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise ValueError(f"cannot parse partition token {tok!r}")
            value = int(m.group(1))
            mult = int(m.group(2)) if m.group(2) else 1
            parts.extend([value] * mult)
        return cls(parts)


def partitions_of(n: int, length: int | None = None,
                  max_part: int | None = None) -> Iterator[Partition]:
    """Yield every partition of n exactly once, reverse-lexicographically.

    The stream starts at (n) and ends at (1^n); n = 0 yields the empty
    partition once.  ``length`` restricts to exactly that many parts,
    ``max_part`` bounds the largest part; both preserve the order.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    cap = n if max_part is None else min(max_part, n)
    for parts in _gen_parts(n, cap, length):
        yield Partition._raw(parts)


def _gen_parts(n, cap, length):
    if n == 0:
        if length in (None, 0):
            yield ()
        return
    if n < 0 or length == 0 or cap <= 0:
        return
    if length is None:
        lo = 1
        hi = min(cap, n)
    else:
        # Each of the remaining `length` parts is >= 1 and <= first.
        lo = -(-n // length)
        hi = min(cap, n - (length - 1))
    for first in range(hi, lo - 1, -1):
        sub = None if length is None else length - 1
        for rest in _gen_parts(n - first, first, sub):
            yield (first,) + rest


def _raw(cls, parts: tuple[int, ...]) -> Partition:
    # Internal fast path: parts already sorted and validated.
    obj = object.__new__(cls)
    object.__setattr__(obj, "parts", parts)
    return obj


Partition._raw = classmethod(_raw)


def multinomial(counts: Iterable[int]) -> int:
    """(sum counts)! / prod(counts_i!), exactly."""
    cs = list(counts)
    total = sum(cs)
    out = factorial(total)
    for c in cs:
        out //= factorial(c)
    return out
