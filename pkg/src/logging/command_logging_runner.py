from argparse import Namespace
from typing import Callable

from src.exception.exception_handler_registry import ExceptionHandlerRegistry
from src.logging.config.logging_config import LoggingConfig
from src.logging.context.run_logging_context import RunLoggingContext
from src.logging.extensions.structured_logging_adapter import StructuredLoggingAdapter
from src.provider.time_provider import TimeProvider

# 로그 컨텍스트에 남기지 않는 인자 (핸들러 함수 등)
_HIDDEN_ARGS = {"handler", "command"}


class CommandLoggingRunner:
    """
    서브커맨드 실행을 구조화 로그로 감싸는 실행기입니다.

    - 실행 시작 시 trace_id를 만들고 RunLoggingContext에 로거를 설정한 뒤 START 로그를 출력하고,
    - 종료 시 누적된 스테이지와 함께 END 로그(종료 코드, 처리 시간)를 출력합니다.
    - 예외는 ExceptionHandlerRegistry가 종료 코드로 변환합니다.
    """

    def __init__(self, logger_config: LoggingConfig):
        self.logger_config = logger_config

    def run(self, command: str, handler: Callable[[Namespace], None], args: Namespace) -> int:
        """
        Args:
            command (str): 서브커맨드 이름 (도메인 로거 이름으로 사용)
            handler (Callable): 서브커맨드 핸들러
            args (Namespace): 파싱된 인자

        Returns:
            int: 종료 코드
        """
        start = TimeProvider.start_timer()
        trace_id = RunLoggingContext.new_trace_id()

        logger = StructuredLoggingAdapter(self.logger_config.get_logger(command), trace_id)
        token = RunLoggingContext.set(logger)

        inputs = {key: value for key, value in vars(args).items() if key not in _HIDDEN_ARGS}
        logger.start_structured(command, inputs)

        try:
            handler(args)
            exit_code = 0
        except Exception as exc:
            exit_code = ExceptionHandlerRegistry.handle(exc)

        logger.end_structured(exit_code=exit_code, duration_ms=TimeProvider.elapsed_ms(start))
        RunLoggingContext.reset(token)
        return exit_code
