import json
from importlib import resources

import pytest

from quandlehom import Chain, Quandle, dataset_from_json


def trivial_table(n):
    return [[x] * n for x in range(n)]


# the order-4 Alexander quandle on GF(4) with t a generator; validated at
# construction like everything else in the inventory
S4_TABLE = [
    [0, 3, 1, 2],
    [2, 1, 3, 0],
    [3, 0, 2, 1],
    [1, 2, 0, 3],
]


def quandle_inventory():
    """Every quandle of order <= 4 exercised by the property suites."""
    return [
        ("R1", Quandle.dihedral(1)),
        ("T2", Quandle.from_table(trivial_table(2))),
        ("T3", Quandle.from_table(trivial_table(3))),
        ("T4", Quandle.from_table(trivial_table(4))),
        ("R3", Quandle.dihedral(3)),
        ("R4", Quandle.dihedral(4)),
        ("S4", Quandle.from_table(S4_TABLE)),
    ]


def load_bundled(name):
    raw = resources.files("quandlehom.data").joinpath(name).read_text()
    return dataset_from_json(json.loads(raw))


@pytest.fixture(scope="session")
def r3():
    return Quandle.dihedral(3)


@pytest.fixture(scope="session")
def inventory():
    return quandle_inventory()


@pytest.fixture(scope="session")
def d_dataset():
    return load_bundled("yashiro_d.json")


@pytest.fixture(scope="session")
def dprime_dataset():
    return load_bundled("yashiro_dprime.json")


@pytest.fixture
def cbar1():
    return Chain.generator((2, 0, 2)) + Chain.generator((2, 1, 0))
