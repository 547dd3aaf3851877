from pydantic import BaseModel, Field
from typing import Dict, List, Optional

class BenchmarkRowDto(BaseModel):
    method: str               = Field(...,  description="방법 이름 (예: YOLACT, YOLOv4, CEM)")
    run: Optional[str]        = Field(None, description="실행 라벨 (예: 데이터 증강 전략)")
    section: Optional[str]    = Field(None, description="표 구역 (예: reference, ours)")
    maps: List[float]         = Field(...,  description="임계값 순서의 mAP [0, 1]")

class BenchmarkTableDto(BaseModel):
    thresholds: List[float]           = Field(...,                 description="IoU 임계값 (열 순서)")
    rows: List[BenchmarkRowDto]       = Field(default_factory=list, description="표 행")
    best_by_threshold: Dict[str, str] = Field(default_factory=dict, description="임계값별 최고 mAP 방법")
    config_hash: Optional[str]        = Field(None,                 description="실행 설정 해시")
    tool_version: Optional[str]       = Field(None,                 description="도구 버전")
