from src.domain.class_registry_domain import ClassRegistry
from src.domain.dataset_domain import DatasetManifest, GroundTruthAnnotation, ImageInfo
from src.dto.file.manifest_file_dto import AnnotationFileDto, ImageFileDto, ManifestFileDto
from src.enum.io_enums import BoxFormatEnum
from src.exception.io_exceptions import ValidationException
from src.mapper.box_mapper import raw_to_box


def dto_to_domain(manifest_dto: ManifestFileDto, box_format: BoxFormatEnum = BoxFormatEnum.XYWH) -> DatasetManifest:
    """
    (파일 DTO → 도메인 객체 변환)
    스키마 검증을 통과한 매니페스트 DTO를 도메인 불변식까지 검증된 DatasetManifest로 변환합니다.

    Raises:
        ValidationException: 중복 image_id, 알 수 없는 클래스, 잘못된 박스 등.
    """
    registry = ClassRegistry(names=tuple(manifest_dto.classes)) if manifest_dto.classes is not None else ClassRegistry.default()

    images: list[ImageInfo] = []
    index: dict[str, ImageInfo] = {}
    for image_dto in manifest_dto.images:
        if image_dto.id in index:
            raise ValidationException("image_id가 중복되었습니다.", image_id=image_dto.id)
        image = ImageInfo(image_id=image_dto.id, width=image_dto.width, height=image_dto.height)
        images.append(image)
        index[image.image_id] = image

    annotations: list[GroundTruthAnnotation] = []
    for annotation_dto in manifest_dto.annotations:
        image = index.get(annotation_dto.image_id)
        if image is None:
            raise ValidationException("어노테이션이 매니페스트에 없는 이미지를 참조합니다.", image_id=annotation_dto.image_id)
        annotations.append(GroundTruthAnnotation(
            image_id = image.image_id,
            class_id = registry.id_of(annotation_dto.label, image_id=image.image_id),
            box      = raw_to_box(annotation_dto.bbox, image, box_format),
        ))

    return DatasetManifest(images=tuple(images), annotations=tuple(annotations), registry=registry)


def domain_to_dto(manifest: DatasetManifest) -> ManifestFileDto:
    """
    (도메인 객체 → 파일 DTO 변환)
    저장은 항상 정규 형식 [x, y, w, h]를 사용합니다.
    """
    return ManifestFileDto(
        images      = [ImageFileDto(id=i.image_id, width=i.width, height=i.height) for i in manifest.images],
        classes     = list(manifest.registry.names),
        annotations = [
            AnnotationFileDto(image_id=a.image_id, label=manifest.registry.name_of(a.class_id), bbox=a.box.as_list())
            for a in manifest.annotations
        ],
    )
