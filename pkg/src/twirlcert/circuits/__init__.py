"""Bundled example circuits shipped as plain text files."""

from __future__ import annotations

from importlib import resources

from ..tableau import Circuit

__all__ = ["BUNDLED", "load_bundled", "bundled_text"]

BUNDLED = ("encoder_3q_phase", "encoder_513")


def bundled_text(name: str) -> str:
    if name not in BUNDLED:
        raise KeyError(f"no bundled circuit named {name!r}; available: {', '.join(BUNDLED)}")
    return resources.files(__package__).joinpath(f"{name}.txt").read_text()


def load_bundled(name: str) -> Circuit:
    return Circuit.from_text(bundled_text(name))
