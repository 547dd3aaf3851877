import json
import os
from pathlib import Path
from typing import Any, Generic, Type, TypeVar

from pydantic import BaseModel, ValidationError

from src.exception.io_exceptions import IoException, ParseException

# T는 항상 파일 스키마를 표현하는 pydantic 모델
T = TypeVar("T", bound=BaseModel)


class BaseJsonRepository(Generic[T]):
    """
    JSON 파일 입출력 공통 로직을 제공하는 기본 클래스.
    모든 파일 리포지토리는 이 클래스를 상속받아 읽기/검증/쓰기를 재사용합니다.

    - 읽기: UTF-8(BOM 불가) → JSON 파싱 → 스키마(DTO) 검증
    - 쓰기: 필드 선언 순서 유지, 들여쓰기 2칸, UTF-8, `\\n` 줄바꿈
    """

    def __init__(self, schema: Type[T]):
        """
        :param schema: 파일 스키마 DTO 클래스 (pydantic BaseModel)
        """
        self.schema = schema

    def read_dto(self, path: str | Path) -> T:
        """
        파일을 읽어 스키마 DTO로 검증합니다.

        Raises:
            IoException: 파일을 읽을 수 없는 경우.
            ParseException: UTF-8/JSON 문법 오류(줄/열 포함) 또는 스키마 위반(필드 경로 포함).
        """
        raw = self.read_text(path)
        try:
            payload = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseException(str(path), f"line {exc.lineno}, column {exc.colno}", exc.msg) from exc

        try:
            return self.schema.model_validate(payload)
        except ValidationError as exc:
            first = exc.errors()[0]
            location = ".".join(map(str, first.get("loc", []))) or "-"
            raise ParseException(str(path), location, first.get("msg", "schema violation")) from exc

    def write_dto(self, dto: T, path: str | Path):
        """
        DTO를 결정적(byte-identical) JSON으로 기록합니다.
        """
        self.write_json(dto.model_dump(mode="json", by_alias=True), path)

    @staticmethod
    def read_text(path: str | Path) -> str:
        try:
            data = Path(path).read_bytes()
        except OSError as exc:
            raise IoException(str(path), exc.strerror or type(exc).__name__) from exc

        if data.startswith(b"\xef\xbb\xbf"):
            raise ParseException(str(path), "byte 0", "UTF-8 BOM은 허용되지 않습니다.")
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseException(str(path), f"byte {exc.start}", "UTF-8로 디코딩할 수 없습니다.") from exc

    @staticmethod
    def dumps_json(payload: Any) -> str:
        return json.dumps(payload, ensure_ascii=False, indent=2, allow_nan=False) + "\n"

    @staticmethod
    def write_json(payload: Any, path: str | Path):
        BaseJsonRepository.write_text(BaseJsonRepository.dumps_json(payload), path)

    @staticmethod
    def write_text(text: str, path: str | Path):
        BaseJsonRepository.write_texts([(text, path)])

    @staticmethod
    def write_texts(items: list[tuple[str, str | Path]]):
        """
        여러 파일을 모두 기록하거나 하나도 기록하지 않습니다.
        각 내용을 대상 경로 옆 임시 파일에 먼저 쓰고, 전부 성공한 뒤에만 대상 경로로 교체합니다.

        Raises:
            IoException: 디렉터리 생성/쓰기/교체에 실패한 경우 (임시 파일은 삭제됨).
        """
        staged: list[tuple[Path, Path]] = []
        try:
            for text, path in items:
                target = Path(path)
                try:
                    target.parent.mkdir(parents=True, exist_ok=True)
                    temp = target.with_name(f".{target.name}.tmp")
                    with temp.open("w", encoding="utf-8", newline="\n") as f:
                        staged.append((temp, target))
                        f.write(text)
                except OSError as exc:
                    raise IoException(str(path), exc.strerror or type(exc).__name__) from exc

            for temp, target in staged:
                try:
                    os.replace(temp, target)
                except OSError as exc:
                    raise IoException(str(target), exc.strerror or type(exc).__name__) from exc
        finally:
            for temp, _ in staged:
                temp.unlink(missing_ok=True)
