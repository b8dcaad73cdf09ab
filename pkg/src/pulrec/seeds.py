"""Deterministic seed derivation.

Every random choice in the package flows from one master seed so that any
command re-run with identical inputs is byte-identical. Two derivations:

* fold seeds mix the fold index into the master seed with a fixed odd
  64-bit multiplier (golden-ratio constant), so fold 0 equals the master
  seed and all folds are reproducible from it alone;
* labelled sub-seeds (per MP, per purpose) hash the master seed and the
  labels with blake2b, so adding a new MP never perturbs the randomness
  consumed by another.
"""

import hashlib

_FOLD_MIX = 0x9E3779B97F4A7C15  # odd, so f -> f * _FOLD_MIX is a bijection mod 2**64
_MASK = 0xFFFFFFFFFFFFFFFF


def fold_seed(master_seed: int, fold: int) -> int:
    """Seed for one holdout fold: master XOR (fold * odd constant) mod 2**64."""
    return (master_seed ^ ((fold * _FOLD_MIX) & _MASK)) & _MASK


def derive_seed(master_seed: int, *labels) -> int:
    """Stable 64-bit sub-seed from the master seed and string labels."""
    h = hashlib.blake2b(digest_size=8)
    h.update(str(int(master_seed)).encode("ascii"))
    for label in labels:
        h.update(b"\x1f")
        h.update(str(label).encode("utf-8"))
    return int.from_bytes(h.digest(), "big")
