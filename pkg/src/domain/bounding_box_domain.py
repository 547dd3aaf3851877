import math
from dataclasses import dataclass

from src.exception.io_exceptions import ValidationException


@dataclass(frozen=True)
class BoundingBox:
    """
    절대 픽셀 좌표계의 축 정렬 박스 (x, y, w, h).
    생성 시점에 유효성을 검사하므로 이후 모든 연산은 유효한 박스를 가정합니다.
    """
    x: float
    y: float
    w: float
    h: float

    def __post_init__(self):
        values = (self.x, self.y, self.w, self.h)
        if not all(math.isfinite(v) for v in values):
            raise ValidationException(f"박스 좌표는 유한한 수여야 합니다: {values}")
        if self.w <= 0 or self.h <= 0:
            raise ValidationException(f"박스의 너비와 높이는 0보다 커야 합니다: {values}")
        if self.x < 0 or self.y < 0:
            raise ValidationException(f"박스 좌상단 좌표는 0 이상이어야 합니다: {values}")

    @property
    def x2(self) -> float:
        return self.x + self.w

    @property
    def y2(self) -> float:
        return self.y + self.h

    def as_list(self) -> list[float]:
        return [self.x, self.y, self.w, self.h]
