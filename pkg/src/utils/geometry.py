import numpy as np

from src.domain.bounding_box_domain import BoundingBox


def area(box: BoundingBox) -> float:
    """
    박스 넓이 w·h (항상 양수).
    """
    return box.w * box.h


def iou(a: BoundingBox, b: BoundingBox) -> float:
    """
    두 박스의 IoU(intersection / union)를 계산합니다.

    연산 순서를 고정하기 위해 피연산자를 좌표 사전순으로 정렬한 뒤 계산하므로
    iou(a, b) == iou(b, a)가 비트 단위로 성립합니다.
    넓이는 변(edge) 차이로 계산하여 iou(a, a) == 1.0이 정확히 성립합니다.

    Args:
        a (BoundingBox): 첫 번째 박스
        b (BoundingBox): 두 번째 박스

    Returns:
        float: [0, 1] 범위의 IoU (겹치지 않으면 0.0)
    """
    if (b.x, b.y, b.w, b.h) < (a.x, a.y, a.w, a.h):
        a, b = b, a

    ax2, ay2 = a.x + a.w, a.y + a.h
    bx2, by2 = b.x + b.w, b.y + b.h

    inter_w = min(ax2, bx2) - max(a.x, b.x)
    inter_h = min(ay2, by2) - max(a.y, b.y)
    if inter_w <= 0 or inter_h <= 0:
        return 0.0

    inter = inter_w * inter_h
    area_a = (ax2 - a.x) * (ay2 - a.y)
    area_b = (bx2 - b.x) * (by2 - b.y)
    union = area_a + area_b - inter
    return min(1.0, inter / union)


def boxes_to_array(boxes: list[BoundingBox]) -> np.ndarray:
    """ BoundingBox 목록을 (N, 4) xywh 배열로 변환합니다. """
    if not boxes:
        return np.zeros((0, 4), dtype=np.float64)
    return np.array([[b.x, b.y, b.w, b.h] for b in boxes], dtype=np.float64)


def iou_matrix(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    (N, 4), (M, 4) xywh 배열 사이의 IoU 행렬 (N, M).
    원소별 연산은 iou()와 동일한 IEEE 연산 순서를 따릅니다.
    """
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros((a.shape[0], b.shape[0]), dtype=np.float64)

    ax1, ay1 = a[:, 0:1], a[:, 1:2]
    ax2, ay2 = ax1 + a[:, 2:3], ay1 + a[:, 3:4]
    bx1, by1 = b[:, 0], b[:, 1]
    bx2, by2 = bx1 + b[:, 2], by1 + b[:, 3]

    inter_w = np.minimum(ax2, bx2) - np.maximum(ax1, bx1)
    inter_h = np.minimum(ay2, by2) - np.maximum(ay1, by1)
    overlap = (inter_w > 0) & (inter_h > 0)

    inter = np.where(overlap, inter_w * inter_h, 0.0)
    area_a = (ax2 - ax1) * (ay2 - ay1)
    area_b = (bx2 - bx1) * (by2 - by1)
    union = area_a + area_b - inter
    return np.where(overlap, np.minimum(1.0, inter / union), 0.0)
