from pydantic import BaseModel, ConfigDict, Field
from typing import List, Optional

class DetectionRecordDto(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    image_id: str     = Field(..., min_length=1,               description="이미지 식별자")
    label: str        = Field(..., alias="class",              description="클래스 라벨")
    bbox: List[float] = Field(..., min_length=4, max_length=4, description="[x, y, w, h] 또는 [x1, y1, x2, y2] (px)")
    score: float      = Field(...,                             description="신뢰도 [0, 1]")

class DetectionFileDto(BaseModel):
    model_config = ConfigDict(protected_namespaces=())

    model_id: str                        = Field(..., min_length=1,          description="검출기 식별자 (예: yolov4, yolact)")
    classes: Optional[List[str]]         = Field(None,                       description="파일 레벨 클래스 라벨 (미지정 시 매니페스트 레지스트리)")
    detections: List[DetectionRecordDto] = Field(default_factory=list,       description="검출 목록")
