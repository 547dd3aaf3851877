from pathlib import Path

from src.domain.dataset_domain import DatasetManifest
from src.domain.detection_domain import DetectionFile
from src.domain.fused_group_domain import FusedGroup
from src.dto.file.detection_file_dto import DetectionFileDto
from src.dto.response.fused_group_dto import FusedGroupDto, GroupMemberDto
from src.enum.io_enums import BoxFormatEnum
from src.mapper import detection_mapper
from src.repository.base_json_repository import BaseJsonRepository


class DetectionRepository(BaseJsonRepository[DetectionFileDto]):
    """
    모델별 검출 파일(detections.<model>.json) 리포지토리
    """

    def __init__(self):
        super().__init__(DetectionFileDto)

    def load_detections(
        self,
        path: str | Path,
        manifest: DatasetManifest,
        box_format: BoxFormatEnum = BoxFormatEnum.XYWH,
    ) -> DetectionFile:
        """
        검출 파일을 읽어 매니페스트 기준으로 검증합니다.

        Raises:
            IoException, ParseException, ValidationException,
            UnknownImageException, RegistryMismatchException
        """
        return detection_mapper.dto_to_domain(self.read_dto(path), manifest, box_format)

    def save_detections(self, detection_file: DetectionFile, path: str | Path):
        self.write_dto(detection_mapper.domain_to_dto(detection_file), path)

    def save_groups(self, groups: list[FusedGroup], kept: list[bool], detection_file: DetectionFile, path: str | Path):
        """
        투표 전 그룹 전체와 통과 여부, 융합 결과를 점검용 JSON으로 기록합니다.
        """
        registry = detection_file.registry
        payload = [
            FusedGroupDto(
                image_id          = group.image_id,
                label             = registry.name_of(group.class_id),
                supporting_models = sorted(group.supporting_models),
                kept              = is_kept,
                members           = [
                    GroupMemberDto(model_id=m.model_id, bbox=m.box.as_list(), score=m.score) for m in group.members
                ],
                fused_bbox        = group.fused.box.as_list() if group.fused else None,
                fused_score       = group.fused.score if group.fused else None,
            ).model_dump(mode="json", by_alias=True)
            for group, is_kept in zip(groups, kept)
        ]
        self.write_json(payload, path)
