import logging
import sys

from src.logging.context.run_logging_context import RunLoggingContext

# 레벨별 ANSI 색상 (터미널일 때만 사용)
LEVEL_COLORS = {
    "DEBUG": "\033[95m",
    "INFO": "\033[92m",
    "WARNING": "\033[93m",
    "ERROR": "\033[91m",
    "CRITICAL": "\033[91m",
}
RESET = "\033[0m"


class ConsoleLogFormatter(logging.Formatter):
    """
    표준 에러 출력용 포매터입니다.
    `detfuse[trace_id] LEVEL` 접두어를 붙이고, 표준 에러가 터미널이면 레벨별 색상을 적용합니다.
    파이프나 파일로 리다이렉트된 경우 색상 코드는 출력하지 않습니다.
    """

    def __init__(self, use_color: bool | None = None):
        super().__init__()
        self.use_color = sys.stderr.isatty() if use_color is None else use_color

    def format(self, record: logging.LogRecord) -> str:
        trace_id = getattr(record, "trace_id", None) or RunLoggingContext.get_trace_id()
        prefix = f"detfuse[{trace_id}] {record.levelname}"
        if self.use_color:
            prefix = f"{LEVEL_COLORS.get(record.levelname, '')}{prefix}{RESET}"
        return f"{prefix} {record.getMessage()}"


def get_console_log_formatter() -> logging.Formatter:
    return ConsoleLogFormatter()
