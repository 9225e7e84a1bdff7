"""Deterministic synthetic dataset generators for the savings benchmarks.

Three shapes: employee records (string-heavy, 4 columns), product inventory
(mixed types, 5 columns), and server metrics (number-heavy, 4 columns).
Generation is a pure function of (shape, rows, seed). Name pools and
numeric ranges are fixed constants so savings curves reproduce exactly
run to run.

Employee rows are fixed-width on purpose: ids are 8 digits, every full name
is 19 characters, every department 11, every salary 6 digits. That makes
the byte cost per row constant, which keeps the measured savings curve
exactly on the closed-form prediction and monotone in the row count.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

# every entry exactly 19 characters
EMPLOYEE_NAMES = (
    "Alexandra Fernandez",
    "Sebastian Gutierrez",
    "Gabriella Hernandez",
    "Jefferson Armstrong",
    "Annabelle Frederick",
)
# every entry exactly 11 characters, identifier-shaped so bare_strings applies
EMPLOYEE_DEPTS = ("Engineering", "Procurement", "Advertising", "Maintenance")

PRODUCT_NAMES = (
    "Wireless Mouse", "Mechanical Keyboard", "Laptop Stand", "USB Hub",
    "Desk Lamp", "Monitor Arm", "Webcam Cover", "Cable Organizer",
)
PRODUCT_CATEGORIES = ("Electronics", "Accessories", "Furniture", "Lighting")

SHAPES = ("employees", "products", "metrics")


@dataclass
class DatasetSpec:
    shape: str
    rows: int
    seed: int = 0

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise ValueError(f"unknown shape {self.shape!r}; pick one of {SHAPES}")
        if self.rows < 1:
            raise ValueError("rows must be >= 1")


def generate_dataset(spec: DatasetSpec) -> list:
    if spec.shape == "employees":
        return _employees(spec.rows, spec.seed)
    if spec.shape == "products":
        return _products(spec.rows, spec.seed)
    return _metrics(spec.rows, spec.seed)


def generate(shape: str, rows: int, seed: int = 0) -> list:
    return generate_dataset(DatasetSpec(shape, rows, seed))


def _employees(rows: int, seed: int) -> list:
    rng = random.Random(seed)
    return [
        {
            "id": 10000001 + i,
            "name": EMPLOYEE_NAMES[(seed + i) % len(EMPLOYEE_NAMES)],
            "dept": EMPLOYEE_DEPTS[(seed + i) % len(EMPLOYEE_DEPTS)],
            "salary": rng.randrange(100000, 1000000),
        }
        for i in range(rows)
    ]


def _products(rows: int, seed: int) -> list:
    rng = random.Random(seed)
    return [
        {
            "sku": f"SKU-{100000 + i}",
            "name": PRODUCT_NAMES[(seed + i) % len(PRODUCT_NAMES)],
            "category": PRODUCT_CATEGORIES[(seed + i) % len(PRODUCT_CATEGORIES)],
            "price": round(rng.uniform(5.0, 500.0), 2),
            "stock": rng.randrange(0, 10000),
        }
        for i in range(rows)
    ]


def _metrics(rows: int, seed: int) -> list:
    rng = random.Random(seed)
    return [
        {
            "timestamp": 1700000000 + 60 * i,
            "cpu": round(rng.uniform(1.0, 99.0), 4),
            "memory": round(rng.uniform(256.0, 16384.0), 4),
            "requests": rng.randrange(100, 1000000),
        }
        for i in range(rows)
    ]
