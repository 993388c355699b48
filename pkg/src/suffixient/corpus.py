"""Deterministic text generators used by the CLI and the acceptance suite."""
from __future__ import annotations

import numpy as np

from .errors import BadParameter

LETTERS = b"abcdefghijklmnopqrstuvwxyz"


def alphabet(sigma: int) -> bytes:
    if not 1 <= sigma <= 255:
        raise BadParameter(f"sigma must lie in [1, 255], got {sigma}")
    return LETTERS[:sigma] if sigma <= len(LETTERS) else bytes(range(1, sigma + 1))


def random_text(n: int, sigma: int, seed: int = 0) -> bytes:
    if n < 1:
        raise BadParameter(f"n must be positive, got {n}")
    symbols = np.frombuffer(alphabet(sigma), dtype=np.uint8)
    rng = np.random.default_rng(seed)
    return symbols[rng.integers(0, sigma, size=n)].tobytes()


def fibonacci_word(n: int) -> bytes:
    """Length-``n`` prefix of the Fibonacci word ``abaababaabaab...``."""
    if n < 1:
        raise BadParameter(f"n must be positive, got {n}")
    prev, word = b"a", b"ab"
    while len(word) < n:
        prev, word = word, word + prev
    return word[:n]


def periodic_text(n: int, period: bytes = b"ab") -> bytes:
    if n < 1:
        raise BadParameter(f"n must be positive, got {n}")
    return (period * (n // len(period) + 1))[:n]


def generate(kind: str, n: int, sigma: int = 2, seed: int = 0) -> bytes:
    if kind == "random":
        return random_text(n, sigma, seed)
    if kind == "fibonacci":
        return fibonacci_word(n)
    if kind == "periodic":
        return periodic_text(n)
    raise BadParameter(f"unknown corpus kind {kind!r}")
