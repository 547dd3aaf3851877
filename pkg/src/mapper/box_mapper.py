import math
from contextlib import suppress

from src.domain.bounding_box_domain import BoundingBox
from src.domain.dataset_domain import ImageInfo
from src.enum.io_enums import BoxFormatEnum
from src.exception.io_exceptions import ValidationException
from src.logging.context.run_logging_context import RunLoggingContext

# 이미지 경계를 이 값(px) 이하로 벗어난 박스는 경고와 함께 잘라냄
CLAMP_TOLERANCE_PX = 2.0


def raw_to_box(values: list[float], image: ImageInfo, box_format: BoxFormatEnum = BoxFormatEnum.XYWH) -> BoundingBox:
    """
    (파일 원본 좌표 → BoundingBox 변환)
    좌표쌍 형식이면 (x, y, w, h)로 변환하고 이미지 경계 정책을 적용합니다.

    - 경계를 2px 이하로 벗어나면 잘라내고 WARNING 로그를 남깁니다.
    - 2px 초과로 벗어나거나 크기가 0 이하이면 ValidationException을 발생시킵니다.
    - 경계 안의 박스는 값을 그대로 유지합니다 (round-trip 보존).

    Args:
        values (list[float]): bbox 4개 값
        image (ImageInfo): 박스가 속한 이미지
        box_format (BoxFormatEnum): 입력 좌표 형식

    Returns:
        BoundingBox: 검증된 박스
    """
    if not all(math.isfinite(v) for v in values):
        raise ValidationException(f"박스 좌표는 유한한 수여야 합니다: {values}", image_id=image.image_id)

    if box_format == BoxFormatEnum.XYXY:
        x1, y1, x2, y2 = values
        x, y, w, h = x1, y1, x2 - x1, y2 - y1
    else:
        x, y, w, h = values
        x2, y2 = x + w, y + h

    if w <= 0 or h <= 0:
        raise ValidationException(f"크기가 0 이하인 박스입니다: {values}", image_id=image.image_id)

    overrun = max(-x, -y, x2 - image.width, y2 - image.height)
    if overrun <= 0:
        return BoundingBox(x=x, y=y, w=w, h=h)
    if overrun > CLAMP_TOLERANCE_PX:
        raise ValidationException(
            f"박스가 이미지 경계를 {overrun:.3f}px 벗어났습니다 (허용 {CLAMP_TOLERANCE_PX}px): {values}",
            image_id=image.image_id,
        )

    cx1, cy1 = max(0.0, x), max(0.0, y)
    cx2, cy2 = min(image.width, x2), min(image.height, y2)
    if cx2 <= cx1 or cy2 <= cy1:
        raise ValidationException(f"경계 보정 후 크기가 0 이하인 박스입니다: {values}", image_id=image.image_id)

    with suppress(LookupError):
        RunLoggingContext.get().warning_structured(
            "이미지 경계를 벗어난 박스를 잘라냈습니다.",
            context={"image_id": image.image_id, "bbox": list(values), "overrun_px": round(overrun, 6)},
        )
    return BoundingBox(x=cx1, y=cy1, w=cx2 - cx1, h=cy2 - cy1)
