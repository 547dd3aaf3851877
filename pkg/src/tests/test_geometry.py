import numpy as np
import pytest

from src.domain.bounding_box_domain import BoundingBox
from src.exception.io_exceptions import ValidationException
from src.utils.geometry import area, boxes_to_array, iou, iou_matrix


def grid_iou(a: BoundingBox, b: BoundingBox) -> float:
    """ 정수 격자에 두 박스를 칠해 교집합/합집합 셀 수로 계산한 IoU """
    size = int(max(a.x2, b.x2, a.y2, b.y2)) + 1
    grid_a = np.zeros((size, size), dtype=bool)
    grid_b = np.zeros((size, size), dtype=bool)
    grid_a[int(a.y):int(a.y2), int(a.x):int(a.x2)] = True
    grid_b[int(b.y):int(b.y2), int(b.x):int(b.x2)] = True
    return np.count_nonzero(grid_a & grid_b) / np.count_nonzero(grid_a | grid_b)


def random_box(rng: np.random.Generator, integer: bool = False) -> BoundingBox:
    if integer:
        x, y = rng.integers(0, 12, size=2)
        w, h = rng.integers(1, 10, size=2)
        return BoundingBox(float(x), float(y), float(w), float(h))
    x, y = rng.uniform(0, 100, size=2)
    w, h = rng.uniform(0.01, 60, size=2)
    return BoundingBox(float(x), float(y), float(w), float(h))


@pytest.mark.parametrize("box, expected", [
    ((0, 0, 2, 2), 4),
    ((5, 5, 1, 1), 1),
    ((0, 0, 3, 7), 21),
])
def test_area(box, expected):
    assert area(BoundingBox(*box)) == expected


def test_iou_examples():
    a = BoundingBox(0, 0, 2, 2)
    assert iou(a, BoundingBox(0, 0, 2, 2)) == 1.0
    assert iou(a, BoundingBox(10, 10, 2, 2)) == 0.0
    assert iou(a, BoundingBox(1, 1, 2, 2)) == pytest.approx(1 / 7, abs=1e-12)


def test_touching_boxes_do_not_overlap():
    assert iou(BoundingBox(0, 0, 2, 2), BoundingBox(2, 0, 2, 2)) == 0.0


@pytest.mark.parametrize("values", [
    (0, 0, 0, 2),
    (0, 0, 2, -1),
    (-1, 0, 2, 2),
    (0, float("nan"), 2, 2),
    (0, 0, float("inf"), 2),
])
def test_invalid_box_is_rejected(values):
    with pytest.raises(ValidationException):
        BoundingBox(*values)


def test_iou_symmetry_identity_and_range():
    rng = np.random.default_rng(20240101)
    for _ in range(100_000):
        a, b = random_box(rng), random_box(rng)
        value = iou(a, b)
        assert value == iou(b, a)
        assert 0.0 <= value <= 1.0
        assert iou(a, a) == 1.0


def test_iou_matches_pixel_grid_oracle():
    rng = np.random.default_rng(7)
    for _ in range(2_000):
        a, b = random_box(rng, integer=True), random_box(rng, integer=True)
        assert abs(iou(a, b) - grid_iou(a, b)) < 1e-12


def test_iou_matrix_matches_scalar_iou():
    rng = np.random.default_rng(3)
    boxes_a = [random_box(rng) for _ in range(30)]
    boxes_b = [random_box(rng) for _ in range(20)]
    matrix = iou_matrix(boxes_to_array(boxes_a), boxes_to_array(boxes_b))
    assert matrix.shape == (30, 20)
    for i, a in enumerate(boxes_a):
        for j, b in enumerate(boxes_b):
            assert matrix[i, j] == iou(a, b)


def test_iou_matrix_with_empty_input():
    assert iou_matrix(boxes_to_array([]), boxes_to_array([BoundingBox(0, 0, 1, 1)])).shape == (0, 1)
