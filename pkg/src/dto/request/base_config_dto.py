from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, ValidationError

from src.exception.config_exceptions import ConfigException


def format_validation_errors(exc: ValidationError) -> dict[str, str]:
    """ pydantic 오류를 필드 경로 기반 메시지로 재구성합니다. """
    return {".".join(map(str, err.get("loc", []))) or "-": err.get("msg") for err in exc.errors()}


class BaseConfigDto(BaseModel):
    """
    실행 설정 DTO의 공통 기반 클래스.
    생성 후 변경할 수 없고, 선언되지 않은 필드는 거부합니다.
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    @classmethod
    def build(cls, **values) -> Self:
        """
        설정을 생성하고 범위 검증 실패를 ConfigException으로 변환합니다.

        Raises:
            ConfigException: 값이 허용 범위를 벗어난 경우.
        """
        try:
            return cls(**values)
        except ValidationError as exc:
            errors = format_validation_errors(exc)
            raise ConfigException(f"{cls.__name__} 설정 오류: {errors}") from exc
