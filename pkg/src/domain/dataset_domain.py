import math
from dataclasses import dataclass
from functools import cached_property

from src.domain.bounding_box_domain import BoundingBox
from src.domain.class_registry_domain import ClassRegistry
from src.exception.io_exceptions import ValidationException


@dataclass(frozen=True)
class ImageInfo:
    image_id: str
    width: float
    height: float

    def __post_init__(self):
        if not (math.isfinite(self.width) and math.isfinite(self.height)):
            raise ValidationException(
                f"이미지 크기는 유한한 수여야 합니다: {self.width}x{self.height}", image_id=self.image_id
            )
        if self.width <= 0 or self.height <= 0:
            raise ValidationException("이미지 크기는 0보다 커야 합니다.", image_id=self.image_id)


@dataclass(frozen=True)
class GroundTruthAnnotation:
    image_id: str
    class_id: int
    box: BoundingBox


@dataclass(frozen=True)
class DatasetManifest:
    """
    이미지 목록과 정답 어노테이션을 담는 평가 기준 데이터셋.
    로드 이후에는 변경되지 않습니다.
    """
    images: tuple[ImageInfo, ...]
    annotations: tuple[GroundTruthAnnotation, ...]
    registry: ClassRegistry

    def __post_init__(self):
        seen: set[str] = set()
        for image in self.images:
            if image.image_id in seen:
                raise ValidationException("image_id가 중복되었습니다.", image_id=image.image_id)
            seen.add(image.image_id)
        for annotation in self.annotations:
            if annotation.image_id not in seen:
                raise ValidationException("어노테이션이 매니페스트에 없는 이미지를 참조합니다.", image_id=annotation.image_id)
            if not self.registry.has_id(annotation.class_id):
                raise ValidationException(f"유효하지 않은 class_id입니다: {annotation.class_id}", image_id=annotation.image_id)

    @cached_property
    def image_index(self) -> dict[str, ImageInfo]:
        return {image.image_id: image for image in self.images}

    def has_image(self, image_id: str) -> bool:
        return image_id in self.image_index


@dataclass(frozen=True)
class ClassDistribution:
    """ 클래스별 인스턴스 수 (레지스트리 순서, 0개 클래스 포함) """
    counts: tuple[tuple[str, int], ...]
    total: int
