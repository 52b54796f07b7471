"""Conversions between python-int bitsets and numpy index/boolean arrays."""
import numpy as np


def mask_from_bool(flags):
    flags = np.asarray(flags, dtype=bool)
    if flags.size == 0:
        return 0
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def mask_from_indices(indices, size):
    flags = np.zeros(size, dtype=bool)
    flags[np.asarray(list(indices), dtype=np.int64)] = True
    return mask_from_bool(flags)


def bool_from_mask(mask, size):
    nbytes = (size + 7) // 8
    raw = np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:size].astype(bool)


def indices_from_mask(mask, size):
    return np.flatnonzero(bool_from_mask(mask, size))


def popcount(mask):
    return bin(mask).count("1")
