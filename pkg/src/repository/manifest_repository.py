from pathlib import Path

from src.domain.dataset_domain import DatasetManifest
from src.dto.file.manifest_file_dto import ManifestFileDto
from src.enum.io_enums import BoxFormatEnum
from src.mapper import manifest_mapper
from src.repository.base_json_repository import BaseJsonRepository


class ManifestRepository(BaseJsonRepository[ManifestFileDto]):
    """
    데이터셋 매니페스트 파일(manifest.json) 리포지토리
    """

    def __init__(self):
        super().__init__(ManifestFileDto)

    def load_manifest(self, path: str | Path, box_format: BoxFormatEnum = BoxFormatEnum.XYWH) -> DatasetManifest:
        """
        매니페스트를 읽어 모든 도메인 불변식이 검증된 DatasetManifest를 반환합니다.

        Args:
            path (str | Path): 매니페스트 경로
            box_format (BoxFormatEnum): bbox 좌표 형식 (xywh | xyxy)

        Returns:
            DatasetManifest: 검증된 매니페스트

        Raises:
            IoException, ParseException, ValidationException
        """
        return manifest_mapper.dto_to_domain(self.read_dto(path), box_format)

    def save_manifest(self, manifest: DatasetManifest, path: str | Path):
        self.write_dto(manifest_mapper.domain_to_dto(manifest), path)

    def save_manifests(self, pairs: list[tuple[DatasetManifest, str | Path]]):
        """
        여러 매니페스트를 함께 저장합니다. 하나라도 쓰기에 실패하면 어떤 파일도 남기지 않습니다.
        """
        self.write_texts([
            (self.dumps_json(manifest_mapper.domain_to_dto(manifest).model_dump(mode="json", by_alias=True)), path)
            for manifest, path in pairs
        ])
