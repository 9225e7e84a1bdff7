import pytest

from jton.accounting import ByteCounter, savings_report
from jton.datasets import (
    DatasetSpec,
    EMPLOYEE_DEPTS,
    EMPLOYEE_NAMES,
    generate,
    generate_dataset,
)
from jton.values import values_equal


def test_employees_shape():
    rows = generate("employees", 3, 0)
    assert len(rows) == 3
    assert all(list(r) == ["id", "name", "dept", "salary"] for r in rows)
    assert [r["id"] for r in rows] == [10000001, 10000002, 10000003]
    assert all(isinstance(r["salary"], int) for r in rows)
    assert all(r["name"] in EMPLOYEE_NAMES for r in rows)
    assert all(r["dept"] in EMPLOYEE_DEPTS for r in rows)


def test_pools_are_fixed_width():
    # constant row width keeps the measured savings curve on the closed form
    assert {len(n) for n in EMPLOYEE_NAMES} == {19}
    assert {len(d) for d in EMPLOYEE_DEPTS} == {11}
    for r in generate("employees", 50, 7):
        assert len(str(r["id"])) == 8
        assert len(str(r["salary"])) == 6


def test_products_shape():
    rows = generate("products", 4, 1)
    assert all(list(r) == ["sku", "name", "category", "price", "stock"] for r in rows)
    assert all(isinstance(r["price"], float) for r in rows)
    assert all(isinstance(r["stock"], int) for r in rows)


def test_metrics_shape():
    rows = generate("metrics", 4, 1)
    assert all(list(r) == ["timestamp", "cpu", "memory", "requests"] for r in rows)
    assert all(len(str(r["timestamp"])) == 10 for r in rows)
    assert all(isinstance(r["cpu"], float) for r in rows)


def test_determinism():
    for shape in ("employees", "products", "metrics"):
        a = generate(shape, 25, 9)
        b = generate_dataset(DatasetSpec(shape, 25, 9))
        assert values_equal(a, b)
    assert not values_equal(generate("employees", 5, 1), generate("employees", 5, 2))


def test_spec_validation():
    with pytest.raises(ValueError):
        DatasetSpec("users", 5, 0)
    with pytest.raises(ValueError):
        DatasetSpec("employees", 0, 0)


def test_metrics_savings_band():
    # byte-level band frozen from the calibration run of the committed pools
    r = savings_report(generate("metrics", 100, 1), ByteCounter())
    assert -60.0 <= r.delta_vs_compact["zen"] <= -45.0
