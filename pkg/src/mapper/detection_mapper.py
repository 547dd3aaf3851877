from src.domain.dataset_domain import DatasetManifest
from src.domain.detection_domain import Detection, DetectionFile
from src.dto.file.detection_file_dto import DetectionFileDto, DetectionRecordDto
from src.enum.io_enums import BoxFormatEnum
from src.exception.config_exceptions import RegistryMismatchException
from src.exception.io_exceptions import UnknownImageException
from src.mapper.box_mapper import raw_to_box


def dto_to_domain(
    detection_dto: DetectionFileDto,
    manifest: DatasetManifest,
    box_format: BoxFormatEnum = BoxFormatEnum.XYWH,
) -> DetectionFile:
    """
    (파일 DTO → 도메인 객체 변환)
    검출 파일을 매니페스트 기준으로 검증합니다. 점수는 보정하지 않으며 범위를 벗어나면 오류입니다.

    Raises:
        RegistryMismatchException: 파일 레벨 클래스 목록이 매니페스트와 다를 경우.
        UnknownImageException: 매니페스트에 없는 이미지를 참조할 경우.
        ValidationException: 점수/박스/클래스가 잘못된 경우.
    """
    registry = manifest.registry
    if detection_dto.classes is not None and tuple(detection_dto.classes) != registry.names:
        raise RegistryMismatchException(detection_dto.model_id)

    detections: list[Detection] = []
    for record in detection_dto.detections:
        image = manifest.image_index.get(record.image_id)
        if image is None:
            raise UnknownImageException(record.image_id)
        detections.append(Detection(
            image_id = image.image_id,
            class_id = registry.id_of(record.label, image_id=image.image_id),
            box      = raw_to_box(record.bbox, image, box_format),
            score    = record.score,
            model_id = detection_dto.model_id,
        ))

    return DetectionFile(model_id=detection_dto.model_id, detections=tuple(detections), registry=registry)


def domain_to_dto(detection_file: DetectionFile) -> DetectionFileDto:
    """
    (도메인 객체 → 파일 DTO 변환)
    """
    registry = detection_file.registry
    return DetectionFileDto(
        model_id   = detection_file.model_id,
        classes    = list(registry.names),
        detections = [
            DetectionRecordDto(
                image_id = d.image_id,
                label    = registry.name_of(d.class_id),
                bbox     = d.box.as_list(),
                score    = d.score,
            )
            for d in detection_file.detections
        ],
    )
