from pydantic import BaseModel, ConfigDict, Field
from typing import List, Optional

class ClassEvaluationDto(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    class_id: int                       = Field(...,                 description="dense class id")
    class_name: str                     = Field(..., alias="class",  description="클래스 라벨")
    n_gt: int                           = Field(...,                 description="정답 인스턴스 수")
    tp: int                             = Field(...,                 description="참 양성 수")
    fp: int                             = Field(...,                 description="거짓 양성 수")
    ap: Optional[float]                 = Field(None,                description="AP [0, 1] (정답이 없으면 null)")
    pr_curve: List[List[float]]         = Field(default_factory=list, description="[recall, precision] 샘플")

class ThresholdEvaluationDto(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    iou: float                          = Field(...,                 description="IoU 임계값")
    map_value: float                    = Field(..., alias="map",    description="mAP [0, 1]")
    tp: int                             = Field(...,                 description="전체 참 양성 수")
    fp: int                             = Field(...,                 description="전체 거짓 양성 수")
    classes: List[ClassEvaluationDto]   = Field(...,                 description="클래스별 평가")

class EvalReportDto(BaseModel):
    model_config = ConfigDict(protected_namespaces=())

    model_id: str                           = Field(..., description="평가 대상 검출 파일의 model_id")
    manifest_id: str                        = Field(..., description="매니페스트 내용 해시")
    config_hash: str                        = Field(..., description="평가 설정 해시")
    tool_version: str                       = Field(..., description="도구 버전")
    interpolation: str                      = Field(..., description="AP 보간 방식")
    thresholds: List[ThresholdEvaluationDto] = Field(..., min_length=1, description="임계값별 결과")
