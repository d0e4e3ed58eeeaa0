"""Python ints as vertex/element bitsets.

Bit ``i`` set means index ``i`` is a member. Conversions to and from index
arrays go through numpy so that large sets (tens of thousands of bits)
stay cheap to iterate.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np


def indices(bits: int) -> list[int]:
    """Sorted member indices of ``bits``."""
    if bits == 0:
        return []
    if bits < 1 << 64:
        out = []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out
    raw = bits.to_bytes((bits.bit_length() + 7) // 8, "little")
    arr = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return np.flatnonzero(arr).tolist()


def from_indices(idx: Iterable[int]) -> int:
    idx = list(idx)
    if len(idx) < 64:
        out = 0
        for i in idx:
            out |= 1 << i
        return out
    arr = np.zeros(max(idx) + 1, dtype=np.uint8)
    arr[idx] = 1
    return int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")


def permute(bits: int, perm: list[int] | tuple[int, ...]) -> int:
    """Image ``{perm[i] : i in bits}``."""
    return from_indices(perm[i] for i in indices(bits))


def lowest(bits: int) -> int:
    return (bits & -bits).bit_length() - 1
