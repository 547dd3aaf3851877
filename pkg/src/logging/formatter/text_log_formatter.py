import logging
import time

from src.logging.context.run_logging_context import RunLoggingContext


class TextLogFormatter(logging.Formatter):
    """
    파일 로그용 텍스트 포매터입니다.
    한 줄 헤더(UTC 시각, 레벨, 로거, trace_id) 아래에 계층형 블록 메시지를 그대로 둡니다.
    """

    converter = time.gmtime

    def __init__(self):
        super().__init__(fmt="%(asctime)s %(levelname)s %(name)s [%(trace_id)s]\n%(message)s")

    def format(self, record: logging.LogRecord) -> str:
        if not getattr(record, "trace_id", None):
            record.trace_id = RunLoggingContext.get_trace_id()
        return super().format(record)


def get_text_log_formatter() -> logging.Formatter:
    """
    Returns:
        logging.Formatter: TextLogFormatter 인스턴스
    """
    return TextLogFormatter()
