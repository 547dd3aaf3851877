import logging
from datetime import datetime
from typing import Any

from pythonjsonlogger.json import JsonFormatter

from src.logging.context.run_logging_context import RunLoggingContext

# 구조화 로그 필드 (출력 순서)
STRUCTURED_FIELDS = ("log_type", "time", "command", "exit_code", "duration_ms", "exception", "context", "stages")


class JsonLogFormatter(JsonFormatter):
    """
    한 줄에 하나의 JSON 객체를 기록하는 포매터입니다.
    StructuredLoggingAdapter가 넣은 extra 필드를 고정된 키 순서로 정리하고, 값이 None인 키는 생략합니다.
    계층형 텍스트 블록 대신 원래 메시지(log_message)를 message로 사용합니다.
    """

    def __init__(self):
        super().__init__(json_ensure_ascii=False, json_default=self.safe_default)

    @staticmethod
    def safe_default(obj: Any) -> str:
        if isinstance(obj, datetime):
            return obj.isoformat()
        return str(obj)

    def add_fields(self, log_record: dict[str, Any], record: logging.LogRecord, message_dict: dict[str, Any]):
        log_record["trace_id"] = getattr(record, "trace_id", None) or RunLoggingContext.get_trace_id()
        log_record["level"] = record.levelname
        log_record["name"] = record.name
        log_record["message"] = getattr(record, "log_message", None) if hasattr(record, "log_type") else record.getMessage()
        for field in STRUCTURED_FIELDS:
            log_record[field] = getattr(record, field, None)
        if message_dict.get("exc_info"):
            log_record["exc_info"] = message_dict["exc_info"]

    def process_log_record(self, log_record: dict[str, Any]) -> dict[str, Any]:
        stages = log_record.get("stages")
        if isinstance(stages, list):
            # 스테이지 항목의 빈 필드 제거
            log_record["stages"] = [{k: v for k, v in item.items() if v is not None} for item in stages]
        return {key: value for key, value in log_record.items() if value is not None}


def get_json_log_formatter() -> JsonLogFormatter:
    return JsonLogFormatter()
