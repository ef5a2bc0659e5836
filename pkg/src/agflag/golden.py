"""Hermitian curve over F_16 and five reference jump sets."""

from __future__ import annotations

import json
from importlib import resources

# y^5 = x^4 + x over F_16 = F_2[w]/(w^4 + w + 1); roots 0, 1, w^5, w^10.
HERMITIAN16 = {"field": {"p": 2, "k": 4, "modulus": [1, 1, 0, 0, 1]}, "m": 5, "roots": [0, 1, 6, 7]}

# a0, the small part A, the consecutive middle block [lo, hi], and the mirrored tail.
EXAMPLE_CASES = [
    {"t": 4, "beta": [1, 1, 1, 1], "a0": -5, "A": [-4, 0, 1, 4, 5, 6], "middle": [8, 55],
     "tail": [57, 58, 59, 62, 63, 67]},
    {"t": 4, "beta": [2, 2, -1, -1], "a0": 1, "A": [2, 4, 6, 7, 8, 9], "middle": [10, 57],
     "tail": [58, 59, 60, 61, 63, 65]},
    {"t": 3, "beta": [2, 2, 2], "a0": -4, "A": [-3, 0, 1, 2, 4, 5], "middle": [6, 54],
     "tail": [55, 56, 58, 59, 60, 63]},
    {"t": 3, "beta": [-3, -3, 7], "a0": 1, "A": [2, 5, 6, 7, 9, 10], "middle": [11, 59],
     "tail": [60, 61, 63, 64, 65, 68]},
    {"t": 3, "beta": [-3, 7, 7], "a0": -9, "A": [-8, -5, -4, -3, -1, 0], "middle": [1, 49],
     "tail": [50, 51, 53, 54, 55, 58]},
]


def full_set(case: dict) -> list[int]:
    lo, hi = case["middle"]
    return sorted(set(case["A"]) | set(range(lo, hi + 1)) | set(case["tail"]))


def builtin_config(name: str) -> dict | None:
    """Configs shipped with the package: ``hermitian16`` and ``c7``."""
    stem = name[:-5] if name.endswith(".json") else name
    res = resources.files("agflag").joinpath("data", f"{stem}.json")
    if not res.is_file():
        return None
    text = res.read_text()
    return json.loads(text)
