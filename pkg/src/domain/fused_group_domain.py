from dataclasses import dataclass
from typing import Optional

from src.domain.detection_domain import Detection, DetectionFile


@dataclass(frozen=True)
class FusedGroup:
    """
    같은 객체에 투표한 모델 간 검출 묶음과 융합 결과.
    모든 멤버는 같은 image_id, class_id를 가집니다.
    """
    members: tuple[Detection, ...]
    fused: Optional[Detection] = None

    @property
    def supporting_models(self) -> frozenset[str]:
        return frozenset(member.model_id for member in self.members)

    @property
    def image_id(self) -> str:
        return self.members[0].image_id

    @property
    def class_id(self) -> int:
        return self.members[0].class_id


@dataclass(frozen=True)
class EnsembleOutcome:
    """ 앙상블 실행 결과: 융합 검출 파일과 투표 전 그룹 전체(통과 여부 포함) """
    detection_file: DetectionFile
    groups: tuple[FusedGroup, ...]
    kept: tuple[bool, ...]
