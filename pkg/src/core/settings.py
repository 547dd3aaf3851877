from typing import Optional

from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict


class Settings(BaseSettings):
    # 기본 실행 설정
    APP_NAME: str = "detfuse"
    LOG_FORMAT: str = "text"        # "text" 또는 "json"
    LOG_LEVEL: str = "WARNING"
    LOG_DIR: Optional[str] = None   # 지정 시에만 파일 로그 기록
    LOG_TO_CONSOLE: bool = True     # 콘솔 = 표준 에러

    model_config = SettingsConfigDict(extra="ignore")

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        """
        설정 소스를 CLI 플래그(init kwargs)와 기본값으로 제한합니다.
        환경 변수와 .env 파일은 읽지 않습니다.
        """
        return (init_settings,)


settings = Settings()
