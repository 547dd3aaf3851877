from contextlib import suppress
from functools import wraps
from typing import Any, Callable, Optional

from src.logging.context.run_logging_context import RunLoggingContext
from src.provider.time_provider import TimeProvider


def LoggedStage(stage: str, summary: Optional[Callable[[Any], dict]] = None):
    """
    서비스 연산의 처리 시간과 결과 요약을 실행 로그의 스테이지로 기록하는 데코레이터입니다.

    서비스 함수에 아래와 같은 방식으로 사용합니다:
        @LoggedStage(stage="evaluate", summary=lambda report: {...})

    실행 컨텍스트(RunLoggingContext)가 없으면(라이브러리 직접 호출, 테스트 등)
    로그 없이 원래 함수만 실행합니다.

    Args:
        stage (str): 스테이지 이름
        summary (Callable, optional): 반환값을 로그 컨텍스트 dict로 요약하는 함수

    Returns:
        Callable: 데코레이터 함수
    """

    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            start = TimeProvider.start_timer()
            result = func(*args, **kwargs)

            with suppress(LookupError):
                logger = RunLoggingContext.get()
                context = summary(result) if summary else None
                logger.stage_structured(stage, TimeProvider.elapsed_ms(start), context)

            return result

        return wrapper

    return decorator
