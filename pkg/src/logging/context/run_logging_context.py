from src.logging.extensions.structured_logging_adapter import StructuredLoggingAdapter
from contextvars import ContextVar, Token
import uuid


class RunLoggingContext:
    """
    CLI 실행 단위로 logger와 trace_id를 보관하고 접근할 수 있도록 해주는 컨텍스트 클래스입니다.
    contextvars를 활용하여 실행별로 독립된 상태를 유지합니다.
    """

    _logger_var: ContextVar[StructuredLoggingAdapter] = ContextVar("run_logger")
    _trace_id_var: ContextVar[str] = ContextVar("trace_id")

    @classmethod
    def set(cls, logger: StructuredLoggingAdapter, trace_id: str | None = None) -> tuple[Token, Token]:
        """
        실행 컨텍스트에 logger와 trace_id를 설정합니다.
        trace_id가 전달되지 않으면 logger의 trace_id를 사용합니다.

        Returns:
            tuple[Token, Token]: reset()에 넘길 토큰
        """
        return cls._logger_var.set(logger), cls._trace_id_var.set(trace_id or logger.trace_id)

    @classmethod
    def reset(cls, tokens: tuple[Token, Token]):
        """ set() 이전 상태로 되돌립니다. 실행이 끝나면 라이브러리 호출은 다시 로그 없이 동작합니다. """
        logger_token, trace_token = tokens
        cls._logger_var.reset(logger_token)
        cls._trace_id_var.reset(trace_token)

    @classmethod
    def get(cls) -> StructuredLoggingAdapter:
        """
        현재 컨텍스트에 설정된 logger를 반환합니다.

        Raises:
            LookupError: 실행 컨텍스트가 설정되지 않은 경우 (예: 라이브러리 직접 호출)
        """
        return cls._logger_var.get()

    @classmethod
    def get_trace_id(cls) -> str:
        try:
            return cls._trace_id_var.get()
        except LookupError:
            return "None"

    @staticmethod
    def new_trace_id() -> str:
        return str(uuid.uuid4())[:8]
