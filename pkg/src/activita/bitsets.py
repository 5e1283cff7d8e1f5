"""Subsets of a ground set {1..n} encoded as machine-word bitmasks.

Element e occupies bit e-1, so masks compare and combine with plain integer
operations.  The string form is ascending digit concatenation for n <= 9
(e.g. "245") and comma-separated integers otherwise; the empty set is "".
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_GROUND = 64


def mask_of(elems: Iterable[int]) -> int:
    """Bitmask of a collection of elements (1-based)."""
    m = 0
    for e in elems:
        m |= 1 << (e - 1)
    return m


def elems_of(mask: int) -> tuple[int, ...]:
    """Ascending tuple of elements in a mask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def min_elem(mask: int) -> int:
    if not mask:
        raise ValueError("empty subset has no minimum")
    return (mask & -mask).bit_length()


def max_elem(mask: int) -> int:
    if not mask:
        raise ValueError("empty subset has no maximum")
    return mask.bit_length()


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def subset_str(mask: int, n: int) -> str:
    """Machine string form of a subset ("" for the empty set)."""
    elems = elems_of(mask)
    if n <= 9:
        return "".join(str(e) for e in elems)
    return ",".join(str(e) for e in elems)


def subset_label(mask: int, n: int) -> str:
    """Display form: like subset_str but the empty set prints as a symbol."""
    return subset_str(mask, n) or "∅"


def parse_subset(text: str, n: int) -> int:
    """Parse the string form back into a mask; accepts "" and the empty-set symbol."""
    text = text.strip()
    if text in ("", "∅"):
        return 0
    if "," in text or n > 9:
        elems = [int(part) for part in text.split(",")]
    else:
        elems = [int(ch) for ch in text]
    for e in elems:
        if not 1 <= e <= n:
            raise ValueError(f"element {e} outside ground set 1..{n}")
    return mask_of(elems)
