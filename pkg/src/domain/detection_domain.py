import math
from dataclasses import dataclass

from src.domain.bounding_box_domain import BoundingBox
from src.domain.class_registry_domain import ClassRegistry
from src.exception.io_exceptions import ValidationException

ENSEMBLE_MODEL_ID = "ensemble"


@dataclass(frozen=True)
class Detection:
    image_id: str
    class_id: int
    box: BoundingBox
    score: float
    model_id: str

    def __post_init__(self):
        if not math.isfinite(self.score) or not 0.0 <= self.score <= 1.0:
            raise ValidationException(f"score는 [0, 1] 범위여야 합니다: {self.score}", image_id=self.image_id)


@dataclass(frozen=True)
class DetectionFile:
    """
    한 검출기(model_id)의 예측 묶음.
    모든 검출은 파일의 model_id를 가져야 합니다.
    """
    model_id: str
    detections: tuple[Detection, ...]
    registry: ClassRegistry

    def __post_init__(self):
        for detection in self.detections:
            if detection.model_id != self.model_id:
                raise ValidationException(
                    f"검출의 model_id({detection.model_id})가 파일의 model_id({self.model_id})와 다릅니다.",
                    image_id=detection.image_id,
                )
            if not self.registry.has_id(detection.class_id):
                raise ValidationException(f"유효하지 않은 class_id입니다: {detection.class_id}", image_id=detection.image_id)
