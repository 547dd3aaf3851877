import sys
import traceback
from contextlib import suppress

from pydantic import ValidationError

from src.dto.request.base_config_dto import format_validation_errors
from src.exception.base_exceptions import EXIT_VALIDATION, DetFuseException
from src.exception.cli_exceptions import UsageException
from src.logging.context.run_logging_context import RunLoggingContext
from src.logging.extensions.structured_logging_adapter import StructuredLoggingAdapter


class ExceptionHandlerRegistry:
    """
    전역 예외 처리 클래스

    CLI 실행 중 발생한 예외를 종료 코드로 변환하며,
    실행 컨텍스트 로거를 활용하여 구조화된 예외 로그를 출력합니다.
    진단 메시지는 항상 표준 에러로만 출력합니다.
    """

    PROGRAM = "detfuse"

    @classmethod
    def handle(cls, exc: BaseException) -> int:
        """
        예외 타입에 맞는 핸들러를 선택해 종료 코드를 반환합니다.

        Args:
            exc: 처리할 예외 객체

        Returns:
            int: 종료 코드 (1: 검증/설정 오류, 2: 입출력 오류)
        """
        if isinstance(exc, UsageException):
            return cls.usage_exception_handler(exc)
        if isinstance(exc, DetFuseException):
            return cls.detfuse_exception_handler(exc)
        if isinstance(exc, ValidationError):
            return cls.validation_exception_handler(exc)
        return cls.global_exception_handler(exc)

    @classmethod
    def detfuse_exception_handler(cls, exc: DetFuseException) -> int:
        """
        도메인 예외(DetFuseException)를 처리합니다.
        """
        print(f"{cls.PROGRAM}: error: {exc.detail}", file=sys.stderr)
        with suppress(LookupError):
            logger: StructuredLoggingAdapter = RunLoggingContext.get()
            logger.exception_structured(
                message=exc.detail,
                exception=exc,
                context={key: value for key, value in vars(exc).items() if key != "detail"} or None,
                exit_code=exc.exit_code,
            )
        return exc.exit_code

    @classmethod
    def usage_exception_handler(cls, exc: UsageException) -> int:
        # 사용법 텍스트는 ArgumentParser.error()가 이미 출력함
        print(f"{cls.PROGRAM}: error: {exc.detail}", file=sys.stderr)
        return exc.exit_code

    @classmethod
    def validation_exception_handler(cls, exc: ValidationError) -> int:
        """
        실행 설정(pydantic) 검증 오류를 필드 경로 기반 메시지로 출력합니다.
        """
        errors = format_validation_errors(exc)
        print(f"{cls.PROGRAM}: error: 설정 값이 올바르지 않습니다: {errors}", file=sys.stderr)
        with suppress(LookupError):
            RunLoggingContext.get().exception_structured(
                message="유효성 검사 오류가 발생하였습니다.",
                exception=exc,
                context={"errors": errors},
                exit_code=EXIT_VALIDATION,
            )
        return EXIT_VALIDATION

    @classmethod
    def global_exception_handler(cls, exc: BaseException) -> int:
        """
        예상하지 못한 예외를 처리합니다. 전체 traceback을 로그로 남깁니다.
        """
        traceback_str = "".join(traceback.format_exception(type(exc), exc, exc.__traceback__))

        logger = None
        with suppress(LookupError):
            logger = RunLoggingContext.get()

        print(f"{cls.PROGRAM}: error: 처리되지 않은 오류: {type(exc).__name__}: {exc}", file=sys.stderr)
        if logger:
            logger.error_structured(message="Unhandled error", context={"traceback": traceback_str})
        else:
            # 로깅 컨텍스트가 없을 경우 기본 출력
            print(traceback_str, file=sys.stderr)
        return EXIT_VALIDATION
