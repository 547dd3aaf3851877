from typing import Any, Dict

from pydantic import Field

from src.dto.request.base_config_dto import BaseConfigDto
from src.provider.hash_provider import HashProvider

class RunConfigDto(BaseConfigDto):
    command: str            = Field(..., description="서브커맨드 (fuse, eval, benchmark, stats, split, gen)")
    options: Dict[str, Any] = Field(..., description="기본값이 해석된 플래그 (출력 경로, 로깅 플래그 제외)")
    version: str            = Field(..., description="도구 버전")

    def config_hash(self) -> str:
        """ 플래그 순서와 무관한 설정 해시 (sha256) """
        return HashProvider.config_hash({"command": self.command, "options": self.options, "version": self.version})
