# src/core/seeding.py
"""64-bit seed derivation.

Trial seeds are folded from a master seed and the fields that identify a trial
with the splitmix64 finalizer, so any single trial can be re-run in isolation:

    h = mix64(master_seed)
    for each field word w:  h = mix64(h ^ w)

Integers contribute their value modulo 2**64, floats their IEEE-754 bit
pattern, strings their UTF-8 bytes in little-endian 8-byte words.
"""

import struct
from typing import Iterator

MASK64 = (1 << 64) - 1


def mix64(x: int) -> int:
    """splitmix64 finalizer."""
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def _words(field: object) -> Iterator[int]:
    if isinstance(field, bool):
        yield int(field)
    elif isinstance(field, int):
        yield field & MASK64
    elif isinstance(field, float):
        yield struct.unpack("<Q", struct.pack("<d", field))[0]
    elif isinstance(field, str):
        raw = field.encode("utf-8")
        yield len(raw)
        for i in range(0, len(raw), 8):
            yield int.from_bytes(raw[i:i + 8].ljust(8, b"\0"), "little")
    elif field is None:
        yield MASK64
    else:
        raise TypeError(f"cannot fold {type(field).__name__} into a seed")


def derive_seed(master_seed: int, *fields: object) -> int:
    """Fold ``fields`` into ``master_seed``; returns an unsigned 64-bit seed."""
    h = mix64(master_seed & MASK64)
    for field in fields:
        for word in _words(field):
            h = mix64(h ^ word)
    return h
