from __future__ import annotations

from pathlib import Path

import pytest

from georeverse import Gazetteer, SearchIndex, build_index, load_gazetteer
from georeverse.synthetic import synthetic_gazetteer

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURE_A_CSV = REPO_ROOT / "data" / "fixture_a.csv"

# The canonical hand-checkable data set: two regions, three provinces,
# four districts, with a deliberate homonym ("San Juan" in two provinces)
# and a shared-prefix pair ("Pampas" / "Pampas Verdes").
FIXTURE_A_ROWS = [
    ("01", "Alpha"),
    ("0101", "Alpha Norte"),
    ("010101", "Pampas"),
    ("010102", "San Juan"),
    ("0102", "Alpha Sur"),
    ("010201", "San Juan"),
    ("02", "Beta"),
    ("0201", "Beta Centro"),
    ("020101", "Pampas Verdes"),
]


@pytest.fixture(scope="session")
def fixture_a() -> Gazetteer:
    return load_gazetteer(FIXTURE_A_ROWS)


@pytest.fixture(scope="session")
def district_index(fixture_a: Gazetteer) -> SearchIndex:
    return build_index(fixture_a, fixture_a.leaf_level)


@pytest.fixture(scope="session")
def desk_scale() -> Gazetteer:
    """25 regions x 8 provinces x 9 districts: 1,800 leaves."""
    return synthetic_gazetteer()


@pytest.fixture(scope="session")
def desk_scale_index(desk_scale: Gazetteer) -> SearchIndex:
    return build_index(desk_scale, desk_scale.leaf_level)
