import hashlib
import json
from typing import Any

from src.domain.dataset_domain import DatasetManifest


class HashProvider:
    """
    리포트 출처(provenance) 표기에 사용하는 해시 유틸리티 클래스
    """

    @staticmethod
    def canonical_json(payload: Any) -> str:
        """ 키 정렬, 공백 없는 정규 JSON 문자열 """
        return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False, default=str)

    @staticmethod
    def config_hash(payload: Any) -> str:
        """
        정규 JSON으로 직렬화한 값의 sha256 해시를 반환합니다.
        키를 정렬해 직렬화하므로 플래그 순서와 무관합니다.
        """
        return hashlib.sha256(HashProvider.canonical_json(payload).encode("utf-8")).hexdigest()

    @staticmethod
    def manifest_id(manifest: DatasetManifest) -> str:
        """
        매니페스트 내용(이미지, 클래스, 어노테이션)의 sha256 해시 앞 16자리.
        """
        payload = [
            list(manifest.registry.names),
            [[image.image_id, image.width, image.height] for image in manifest.images],
            [[a.image_id, a.class_id, a.box.as_list()] for a in manifest.annotations],
        ]
        return HashProvider.config_hash(payload)[:16]
