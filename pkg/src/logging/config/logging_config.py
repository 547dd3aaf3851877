import logging
import sys
from logging.handlers import TimedRotatingFileHandler
from pathlib import Path
from datetime import datetime

from src.core.settings import Settings, settings as default_settings
from src.logging.formatter.formatter_strategies import FormatterFactory


class LoggingConfig:
    """
    도메인 이름 기반 로거를 생성하고,
    설정에 따라 콘솔(표준 에러)/파일 핸들러를 분리해 적용하는 로깅 설정 클래스입니다.
    데이터 출력(표준 출력, 결과 파일)과 진단 로그가 섞이지 않도록 콘솔은 항상 stderr를 사용합니다.
    """

    def __init__(self, settings: Settings | None = None):
        self.settings = settings or default_settings
        # 로그 레벨을 대문자로 표준화하여 설정
        self.log_level = self.settings.LOG_LEVEL.upper()
        # 로그 파일 루트 (미지정 시 파일 로그 비활성화)
        self.log_root = Path(self.settings.LOG_DIR) if self.settings.LOG_DIR else None
        # 파일 로그 포매터 (json, text 등 전략 기반)
        self.formatter = FormatterFactory.create(self.settings.LOG_FORMAT).get_formatter()
        # 콘솔 출력 포매터
        self.console_formatter = (
            self.formatter if self.settings.LOG_FORMAT.lower() == "json"
            else FormatterFactory.create_console().get_formatter()
        )
        # 이미 생성된 로거 캐시
        self._loggers: dict[str, logging.Logger] = {}

    def get_logger(self, name: str, level: int | str | None = None) -> logging.Logger:
        """
        도메인 이름을 기준으로 로거를 반환하거나 새로 생성합니다.

        Args:
            name (str): 로거의 이름 (보통 서브커맨드명)
            level (int | str | None): 로그 레벨 (지정하지 않으면 기본 설정값 사용)

        Returns:
            logging.Logger: 설정된 로거 인스턴스
        """
        if name in self._loggers:
            return self._loggers[name]

        logger = self._setup_logger(name, level or self.log_level)
        self._loggers[name] = logger
        return logger

    def _setup_logger(self, name: str, level: int | str) -> logging.Logger:
        logger = logging.getLogger(f"{self.settings.APP_NAME}.{name}")
        logger.setLevel(level)
        logger.propagate = False  # 루트 로거로 전파하지 않음

        # 재설정 시 이전 실행의 핸들러를 제거
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()

        if self.log_root is not None:
            today = datetime.now().strftime("%Y-%m-%d")
            log_dir = self.log_root / name
            log_dir.mkdir(parents=True, exist_ok=True)

            # 파일 핸들러 (매일 새 로그파일 생성, 최대 30일 보관)
            file_handler = TimedRotatingFileHandler(
                filename=log_dir / f"{name}-{today}.log",
                when="midnight",
                interval=1,
                backupCount=30,
                encoding="utf-8"
            )
            file_handler.setFormatter(self.formatter)
            logger.addHandler(file_handler)

        if self.settings.LOG_TO_CONSOLE:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setLevel(level)
            console_handler.setFormatter(self.console_formatter)
            logger.addHandler(console_handler)

        if not logger.handlers:
            logger.addHandler(logging.NullHandler())

        return logger
