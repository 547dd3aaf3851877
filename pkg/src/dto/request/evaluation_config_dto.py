from typing import Optional

from pydantic import Field, field_validator

from src.domain.evaluation_domain import CANONICAL_IOU_THRESHOLDS
from src.dto.request.base_config_dto import BaseConfigDto
from src.dto.request.nms_config_dto import NmsConfigDto
from src.enum.evaluation_enums import ApInterpolationEnum

class EvaluationConfigDto(BaseConfigDto):
    thresholds: tuple[float, ...]       = Field(CANONICAL_IOU_THRESHOLDS, min_length=1, description="IoU 임계값 목록")
    interpolation: ApInterpolationEnum  = Field(ApInterpolationEnum.ALL_POINT,          description="AP 보간 방식")
    nms: Optional[NmsConfigDto]         = Field(None,                                   description="평가 전 NMS (기본 생략)")

    @field_validator("thresholds")
    @classmethod
    def validate_thresholds(cls, thresholds: tuple[float, ...]) -> tuple[float, ...]:
        for value in thresholds:
            if not 0.0 < value <= 1.0:
                raise ValueError(f"IoU 임계값은 (0, 1] 범위여야 합니다: {value}")
        if len(set(thresholds)) != len(thresholds):
            raise ValueError(f"IoU 임계값이 중복되었습니다: {thresholds}")
        return thresholds
