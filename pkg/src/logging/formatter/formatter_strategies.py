from abc import ABC, abstractmethod
import logging

from src.logging.formatter.json_log_formatter import get_json_log_formatter
from src.logging.formatter.text_log_formatter import get_text_log_formatter
from src.logging.formatter.console_log_formatter import get_console_log_formatter


class FormatterStrategy(ABC):
    """
    로그 포매터 공통 전략 인터페이스입니다.
    모든 포매터 전략 클래스는 get_formatter 메서드를 구현해야 합니다.
    """

    @abstractmethod
    def get_formatter(self) -> logging.Formatter:
        pass

class JsonFormatterStrategy(FormatterStrategy):
    """ 파일/기계 판독용 JSON 로그 """

    def get_formatter(self) -> logging.Formatter:
        return get_json_log_formatter()

class TextFormatterStrategy(FormatterStrategy):
    """ 계층형 블록 텍스트 로그 """

    def get_formatter(self) -> logging.Formatter:
        return get_text_log_formatter()

class ConsoleFormatterStrategy(FormatterStrategy):
    """ 레벨별 색상이 적용된 표준 에러 출력 """

    def get_formatter(self) -> logging.Formatter:
        return get_console_log_formatter()

class FormatterFactory:
    """
    format_type 값("json", "text")에 따라 포매터 전략을 생성합니다.
    알 수 없는 값은 텍스트 전략으로 처리합니다.
    """

    _STRATEGIES: dict[str, type[FormatterStrategy]] = {
        "json": JsonFormatterStrategy,
        "text": TextFormatterStrategy,
    }

    @staticmethod
    def create(format_type: str) -> FormatterStrategy:
        strategy_cls = FormatterFactory._STRATEGIES.get(format_type.lower(), TextFormatterStrategy)
        return strategy_cls()

    @staticmethod
    def create_console() -> FormatterStrategy:
        return ConsoleFormatterStrategy()
