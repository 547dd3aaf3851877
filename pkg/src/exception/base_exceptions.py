EXIT_VALIDATION = 1
EXIT_IO = 2


class DetFuseException(Exception):
    """
    모든 도메인 예외의 기본 클래스.
    exit_code는 CLI 종료 코드, detail은 사용자에게 표시할 메시지입니다.
    """

    exit_code: int = EXIT_VALIDATION

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail
