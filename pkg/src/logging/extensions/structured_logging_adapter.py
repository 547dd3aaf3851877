import logging
import json
from typing import Any

from src.provider.time_provider import TimeProvider


class StructuredLoggingAdapter(logging.LoggerAdapter):
    """
    CLI 실행(run) 단위 계층형 로그 출력을 위한 커스텀 StructuredLoggingAdapter.
    START / STAGE / END / WARNING / EXCEPTION / DEBUG 등을 블록 또는 구조화된 로그로 출력합니다.
    """

    def __init__(self, logger: logging.Logger, trace_id: str):
        """
        StructuredLoggingAdapter 초기화

        Args:
            logger (logging.Logger): 기본 로거 객체
            trace_id (str): 실행 추적 ID
        """
        super().__init__(logger, {"trace_id": trace_id})
        self.trace_id = trace_id
        self._stage_logs: list[dict[str, Any]] = []  # 스테이지 로그를 누적 저장하는 리스트
        self._command = ""                           # 서브커맨드 이름
        self._inputs: dict[str, Any] = {}            # 입력 파일 경로 등

    def process(self, msg, kwargs):
        """
        로그 메시지 출력 전에 공통 필드(trace_id, command)를 `extra`에 추가합니다.
        """
        kwargs["extra"] = kwargs.get("extra", {})
        kwargs["extra"].update({
            "trace_id": self.trace_id,
            "command": self._command,
        })
        return msg, kwargs

    def build_extra(self, log_type: str, *, message=None, exception=None, context=None,
                    exit_code=None, duration_ms=None, stages=None, time=None) -> dict:
        """
        구조화된 로그 출력을 위해 `extra` 필드를 구성합니다.

        Args:
            log_type (str): 로그의 타입 (예: START, END, EXCEPTION, DEBUG 등)
            message (str, optional): 로그 메시지
            exception (str, optional): 예외 클래스 이름
            context (dict, optional): 추가적인 컨텍스트 정보
            exit_code (int, optional): 종료 코드
            duration_ms (float, optional): 처리 시간 (밀리초 단위)
            stages (list, optional): 실행된 스테이지 목록
            time (str, optional): 로그 발생 시각. 지정하지 않으면 현재 시각 사용

        Returns:
            dict: 로그 출력을 위한 extra 딕셔너리
        """
        return {
            "trace_id": self.trace_id,
            "log_type": log_type,
            "command": self._command,
            "exit_code": exit_code,
            "duration_ms": duration_ms,
            "time": time or TimeProvider.get_utc_now_str(),
            "log_message": message,
            "exception": exception,
            "context": context,
            "stages": stages,
        }

    def start_structured(self, command: str, inputs: dict[str, Any] | None = None):
        """
        실행 시작 정보를 저장하고 START 블록을 DEBUG 레벨로 출력합니다.

        Args:
            command (str): 서브커맨드 이름 (fuse, eval 등)
            inputs (dict, optional): 입력 파일 경로 등 실행 인자
        """
        self._command = command
        self._inputs = inputs or {}
        now = TimeProvider.get_utc_now_str()
        self.debug(
            self._format_block_full("START", context=self._inputs or None, time=now),
            extra=self.build_extra(log_type="START", context=self._inputs or None, time=now)
        )

    def stage_structured(self, stage: str, duration_ms: float, context: dict | None = None):
        """
        실행된 스테이지(nms, grouping, evaluate 등)를 누적 저장합니다.

        Args:
            stage (str): 스테이지 이름
            duration_ms (float): 스테이지 처리 시간 (밀리초)
            context (dict, optional): 스테이지 결과 요약 (건수 등)
        """
        self._stage_logs.append({"stage": stage, "duration_ms": duration_ms, "context": context})

    def end_structured(self, exit_code: int, duration_ms: float):
        """
        실행 종료 시점에서 누적된 스테이지 블록과 함께 END 로그를 출력합니다.

        Args:
            exit_code (int): 종료 코드
            duration_ms (float): 전체 처리 시간 (밀리초 단위)
        """
        now = TimeProvider.get_utc_now_str()
        formatted_message = self._format_block_full(
            "END",
            exit_code=exit_code,
            duration_ms=duration_ms,
            time=now,
            stages=self._format_stage_block()
        )
        self.info(
            formatted_message,
            extra=self.build_extra(
                log_type="END",
                exit_code=exit_code,
                duration_ms=duration_ms,
                stages=list(self._stage_logs),
                time=now
            )
        )
        self._stage_logs = []

    def warning_structured(self, message: str, context: dict | None = None):
        now = TimeProvider.get_utc_now_str()
        self.warning(
            self._format_block_full("WARNING", message=message, context=context, time=now),
            extra=self.build_extra(log_type="WARNING_STRUCTURED", message=message, context=context, time=now)
        )

    def exception_structured(self, message: str, exception: BaseException | None = None,
                             context: dict | None = None, exit_code: int | None = None):
        """
        계층형 예외 로그를 출력하는 메서드.

        Args:
            message (str): 예외 메시지
            exception (BaseException, optional): 발생한 예외 객체
            context (dict, optional): 추가적인 컨텍스트 데이터
            exit_code (int, optional): 예외로 결정된 종료 코드
        """
        now = TimeProvider.get_utc_now_str()
        exception_name = type(exception).__name__ if exception else None
        formatted_message = self._format_block_full(
            "EXCEPTION",
            message=message,
            exception=exception_name,
            context=context,
            exit_code=exit_code,
            time=now
        )
        self.error(
            formatted_message,
            extra=self.build_extra(
                log_type="EXCEPTION_STRUCTURED",
                message=message,
                exception=exception_name,
                context=context,
                exit_code=exit_code,
                time=now
            )
        )

    def error_structured(self, message: str, context: dict | None = None):
        now = TimeProvider.get_utc_now_str()
        self.error(
            self._format_block_full("ERROR", message=message, context=context, time=now),
            extra=self.build_extra(log_type="ERROR_STRUCTURED", message=message, context=context, time=now)
        )

    def _format_stage_block(self) -> str:
        """
        누적된 스테이지 로그를 계층형 텍스트로 포매팅합니다.

        Returns:
            str: 계층형 스테이지 로그 텍스트
        """
        if not self._stage_logs:
            return "        [STAGE] (None)"

        lines = []
        for item in self._stage_logs:
            line = f"        [STAGE] {item['stage']} ({item['duration_ms']:.2f}ms)"
            if item["context"]:
                line += f"\n            * {json.dumps(item['context'], ensure_ascii=False, default=str)}"
            lines.append(line)
        return "\n".join(lines)

    def _format_block_full(self, log_type: str, *, message: str = None, exception: str = None,
                           exit_code: int = None, context: dict = None, time: str = None,
                           duration_ms: float = None, stages: str = None) -> str:
        """
        로그 타입에 따라 계층형 텍스트 블록 메시지를 구성하는 내부 메서드.

        Args:
            log_type (str): 로그 타입 (예: 'START', 'END', 'EXCEPTION')
            message (str, optional): 로그 메시지
            exception (str, optional): 예외 클래스 이름
            exit_code (int, optional): 종료 코드
            context (dict, optional): 추가적인 컨텍스트 정보
            time (str, optional): 로그의 시간 (기본값은 현재 시간)
            duration_ms (float, optional): 처리 시간 (ms)
            stages (str, optional): 포매팅된 스테이지 블록

        Returns:
            str: 계층형 구조로 포맷된 텍스트 로그 메시지
        """
        now = time or TimeProvider.get_utc_now_str()

        lines = [
            f"TraceId: {self.trace_id}",
            f"Command: {self._command or '-'}",
        ]

        if exit_code is not None:
            lines.append(f"ExitCode: {exit_code}")
        if message:
            lines.append(f"Message: {message}")
        if exception:
            lines.append(f"Exception: {exception}")
        if context:
            lines.append(f"Context: {json.dumps(context, ensure_ascii=False, default=str)}")
        if stages:
            lines.append(f"Stages:\n{stages}")
        if duration_ms is not None:
            lines.append(f"Duration: {duration_ms:.2f}ms")

        lines.append(f"Time: {now}")
        body = "\n".join(f"    ▶ {line}" for line in lines)
        return f"──────────── [{log_type}]\n{body}\n──────────── [END]"
