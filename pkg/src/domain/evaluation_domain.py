import math
from dataclasses import dataclass
from typing import Optional

from src.exception.config_exceptions import ConfigException

# 평가에 사용하는 표준 IoU 임계값 3종
CANONICAL_IOU_THRESHOLDS = (0.25, 0.50, 0.75)


@dataclass(frozen=True)
class IouThreshold:
    value: float

    def __post_init__(self):
        if not math.isfinite(self.value) or not 0.0 < self.value <= 1.0:
            raise ConfigException(f"IoU 임계값은 (0, 1] 범위여야 합니다: {self.value}")


@dataclass(frozen=True)
class MatchVerdict:
    """ 검출 하나에 대한 판정 (TP면 매칭된 정답 인덱스와 IoU 포함) """
    detection_index: int
    image_id: str
    score: float
    is_tp: bool
    gt_index: Optional[int] = None
    iou: Optional[float] = None


@dataclass(frozen=True)
class MatchResult:
    verdicts: tuple[MatchVerdict, ...]
    gt_matched: tuple[bool, ...]


@dataclass(frozen=True)
class ClassEvaluation:
    class_id: int
    class_name: str
    n_gt: int
    tp: int
    fp: int
    ap: Optional[float]                             # 정답이 없으면 None (mAP 제외)
    pr_curve: tuple[tuple[float, float], ...] = ()  # (recall, precision)


@dataclass(frozen=True)
class ThresholdEvaluation:
    threshold: float
    map_value: float
    classes: tuple[ClassEvaluation, ...]

    @property
    def tp(self) -> int:
        return sum(c.tp for c in self.classes)

    @property
    def fp(self) -> int:
        return sum(c.fp for c in self.classes)


@dataclass(frozen=True)
class EvalReport:
    """
    임계값별 클래스 AP, mAP, PR 곡선과 출처(provenance) 메타데이터.
    mAP는 정답이 1개 이상인 클래스의 AP 산술 평균입니다.
    """
    model_id: str
    manifest_id: str
    config_hash: str
    tool_version: str
    interpolation: str
    thresholds: tuple[ThresholdEvaluation, ...]
