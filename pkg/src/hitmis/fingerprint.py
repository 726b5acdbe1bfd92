"""Canonical 64-bit fingerprints of serialized instances (FNV-1a)."""

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK64 = (1 << 64) - 1


def fnv1a64(data: bytes) -> int:
    h = _FNV_OFFSET
    for byte in data:
        h ^= byte
        h = (h * _FNV_PRIME) & _MASK64
    return h


def fingerprint(text: str) -> str:
    """Hex fingerprint of a canonical serialization string."""
    return f"{fnv1a64(text.encode('utf-8')):016x}"
