from pydantic import BaseModel, ConfigDict, Field
from typing import List, Optional

class ImageFileDto(BaseModel):
    id: str       = Field(..., min_length=1, description="이미지 식별자")
    width: float  = Field(...,               description="이미지 너비 (px)")
    height: float = Field(...,               description="이미지 높이 (px)")

class AnnotationFileDto(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    image_id: str     = Field(..., min_length=1,               description="이미지 식별자")
    label: str        = Field(..., alias="class",              description="클래스 라벨")
    bbox: List[float] = Field(..., min_length=4, max_length=4, description="[x, y, w, h] 또는 [x1, y1, x2, y2] (px)")

class ManifestFileDto(BaseModel):
    images: List[ImageFileDto]            = Field(...,                   description="이미지 목록")
    classes: Optional[List[str]]          = Field(None,                  description="클래스 라벨 (미지정 시 EAD 8개 클래스)")
    annotations: List[AnnotationFileDto]  = Field(default_factory=list,  description="정답 어노테이션 목록")
