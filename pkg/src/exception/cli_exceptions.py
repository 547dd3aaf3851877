from src.exception.base_exceptions import DetFuseException


class UsageException(DetFuseException):
    """알 수 없는 서브커맨드/플래그 등 명령행 사용법 오류 (사용법은 이미 출력됨)"""

    def __init__(self, detail: str):
        super().__init__(detail)
