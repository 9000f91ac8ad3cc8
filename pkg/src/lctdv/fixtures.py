"""Locating and loading the bundled fixture catalog.

Fixtures live in the package's ``fixtures/`` directory: surface configs
(``surfaces/<id>.surface``), lemma scripts (``lemmas/<id>.lemma``) and the
expected-value tables.  The ``LCTDV_FIXTURES`` environment variable points
to an alternative catalog root with the same layout.
"""

from __future__ import annotations

import os
from pathlib import Path


class FixtureNotFound(FileNotFoundError):
    pass


def fixtures_root() -> Path:
    override = os.environ.get("LCTDV_FIXTURES")
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "fixtures"


def surface_path(name: str) -> Path:
    return fixtures_root() / "surfaces" / f"{name}.surface"


def lemma_path(name: str) -> Path:
    return fixtures_root() / "lemmas" / f"{name}.lemma"


def _read(path: Path) -> str:
    if not path.is_file():
        raise FixtureNotFound(str(path))
    return path.read_text(encoding="utf-8")


def load_surface_fixture(name: str):
    from .surface import load_surface
    return load_surface(_read(surface_path(name)), name_hint=name)


def load_lemma_fixture(name: str):
    from .certify import parse_lemma_script
    return parse_lemma_script(_read(lemma_path(name)), name_hint=name)


def list_surfaces() -> list[str]:
    root = fixtures_root() / "surfaces"
    if not root.is_dir():
        return []
    return sorted(p.stem for p in root.glob("*.surface"))


def list_lemmas() -> list[str]:
    root = fixtures_root() / "lemmas"
    if not root.is_dir():
        return []
    return sorted(p.stem for p in root.glob("*.lemma"))
