from pydantic import Field

from src.dto.request.base_config_dto import BaseConfigDto
from src.enum.nms_enums import NmsModeEnum

class NmsConfigDto(BaseConfigDto):
    iou_threshold: float = Field(0.5,                     ge=0.0, le=1.0, description="억제 IoU 임계값 (IoU >= 임계값이면 억제)")
    mode: NmsModeEnum    = Field(NmsModeEnum.CLASS_AWARE,                 description="aware: 같은 클래스끼리, agnostic: 클래스 무관")
    score_floor: float   = Field(0.0,                     ge=0.0, le=1.0, description="이 점수 미만 검출은 먼저 제거")
