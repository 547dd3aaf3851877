import numpy as np

from src.decorator.logged_stage import LoggedStage
from src.domain.detection_domain import Detection, DetectionFile
from src.dto.request.nms_config_dto import NmsConfigDto
from src.enum.nms_enums import NmsModeEnum
from src.exception.nms_exceptions import MixedImageException
from src.utils.geometry import boxes_to_array, iou_matrix


class NmsService:
    """
    모델별 Non-Maximum Suppression(NMS) 서비스 클래스.
    class-aware / class-agnostic 두 모드를 지원하며 박스 값은 변경하지 않습니다.
    """

    def nms(self, detections: list[Detection], config: NmsConfigDto) -> list[Detection]:
        """
        한 이미지의 검출에 greedy NMS를 적용합니다.

        1. score_floor 미만 검출 제거
        2. 점수 내림차순 정렬 (동점이면 입력 인덱스가 작은 쪽 우선)
        3. 이미 채택된 검출(비교 범위 내)과의 IoU가 iou_threshold 이상이면 억제

        Args:
            detections (list[Detection]): 한 이미지의 검출 목록
            config (NmsConfigDto): NMS 설정

        Returns:
            list[Detection]: 채택된 검출 (점수 내림차순)

        Raises:
            MixedImageException: 여러 image_id가 섞여 있는 경우.
        """
        image_ids = {d.image_id for d in detections}
        if len(image_ids) > 1:
            raise MixedImageException(list(image_ids))

        candidates = [(i, d) for i, d in enumerate(detections) if d.score >= config.score_floor]
        candidates.sort(key=lambda item: (-item[1].score, item[0]))
        if not candidates:
            return []

        ordered = [d for _, d in candidates]
        overlaps = iou_matrix(boxes_to_array([d.box for d in ordered]), boxes_to_array([d.box for d in ordered]))
        class_ids = np.array([d.class_id for d in ordered])
        if config.mode == NmsModeEnum.CLASS_AWARE:
            in_scope = class_ids[:, None] == class_ids[None, :]
        else:
            in_scope = np.ones_like(overlaps, dtype=bool)
        conflicts = in_scope & (overlaps >= config.iou_threshold)

        kept: list[int] = []
        for i in range(len(ordered)):
            if not any(conflicts[i, k] for k in kept):
                kept.append(i)
        return [ordered[i] for i in kept]

    @LoggedStage(
        stage="nms",
        summary=lambda result: {"model_id": result.model_id, "kept": len(result.detections)},
    )
    def apply_to_file(self, detection_file: DetectionFile, config: NmsConfigDto) -> DetectionFile:
        """
        파일의 검출을 이미지별로 나눠 NMS를 적용합니다.
        이미지는 첫 등장 순서, 이미지 내부는 점수 내림차순으로 반환합니다.
        """
        by_image: dict[str, list[Detection]] = {}
        for detection in detection_file.detections:
            by_image.setdefault(detection.image_id, []).append(detection)

        kept: list[Detection] = []
        for image_detections in by_image.values():
            kept.extend(self.nms(image_detections, config))
        return DetectionFile(model_id=detection_file.model_id, detections=tuple(kept), registry=detection_file.registry)
