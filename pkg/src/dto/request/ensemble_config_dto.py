from typing import Optional

from pydantic import Field

from src.dto.request.base_config_dto import BaseConfigDto
from src.dto.request.nms_config_dto import NmsConfigDto
from src.enum.ensemble_enums import VotingStrategyEnum

class EnsembleConfigDto(BaseConfigDto):
    strategy: VotingStrategyEnum = Field(VotingStrategyEnum.CONSENSUS,             description="투표 전략")
    group_iou: float             = Field(0.5, ge=0.0, le=1.0,                      description="같은 객체 판정 IoU (시드 박스 기준)")
    nms: Optional[NmsConfigDto]  = Field(default_factory=NmsConfigDto,             description="모델별 사전 NMS (None이면 생략)")
