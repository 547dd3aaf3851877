from pydantic import BaseModel, ConfigDict, Field
from typing import List, Optional

class GroupMemberDto(BaseModel):
    model_config = ConfigDict(protected_namespaces=())

    model_id: str     = Field(..., description="멤버 검출의 모델")
    bbox: List[float] = Field(..., description="[x, y, w, h] (px)")
    score: float      = Field(..., description="멤버 신뢰도")

class FusedGroupDto(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    image_id: str                   = Field(...,                description="이미지 식별자")
    label: str                      = Field(..., alias="class", description="클래스 라벨")
    supporting_models: List[str]    = Field(...,                description="지지 모델 (정렬됨)")
    kept: bool                      = Field(...,                description="투표 통과 여부")
    members: List[GroupMemberDto]   = Field(...,                description="그룹 멤버")
    fused_bbox: Optional[List[float]] = Field(None,             description="융합 박스 (통과한 그룹만)")
    fused_score: Optional[float]    = Field(None,               description="융합 신뢰도 (통과한 그룹만)")
