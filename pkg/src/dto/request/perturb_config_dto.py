from pydantic import Field

from src.dto.request.base_config_dto import BaseConfigDto

class ScoreModelDto(BaseConfigDto):
    base_score: float   = Field(0.95, ge=0.0, le=1.0, description="지터 0일 때 신뢰도")
    decay: float        = Field(4.0,  ge=0.0,         description="지터 크기에 따른 지수 감쇠율")
    fp_score_max: float = Field(0.3,  ge=0.0, le=1.0, description="오검출(FP) 신뢰도 상한")

class PerturbConfigDto(BaseConfigDto):
    seed: int                 = Field(0,   ge=0,                             description="난수 시드 (0 이상)")
    jitter: float             = Field(0.0, ge=0.0,                           description="박스 크기 대비 좌표 지터 진폭")
    drop_rate: float          = Field(0.0, ge=0.0, le=1.0,                   description="정답 박스 누락 확률")
    fp_rate: float            = Field(0.0, ge=0.0,                           description="이미지당 기대 오검출 수 (Poisson)")
    score_model: ScoreModelDto = Field(default_factory=ScoreModelDto,         description="지터 → 신뢰도 매핑 파라미터")
