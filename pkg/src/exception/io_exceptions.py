from src.exception.base_exceptions import DetFuseException, EXIT_IO


class IoException(DetFuseException):
    exit_code = EXIT_IO

    def __init__(self, path: str, reason: str):
        super().__init__(f"파일을 읽거나 쓸 수 없습니다: {path} ({reason})")
        self.path = path


class ParseException(DetFuseException):
    def __init__(self, path: str, location: str, reason: str):
        super().__init__(f"파일 형식 오류: {path} [{location}] {reason}")
        self.path = path
        self.location = location


class ValidationException(DetFuseException):
    def __init__(self, detail: str, image_id: str | None = None):
        if image_id is not None:
            detail = f"{detail} (image_id={image_id})"
        super().__init__(detail)
        self.image_id = image_id


class UnknownImageException(DetFuseException):
    def __init__(self, image_id: str):
        super().__init__(f"매니페스트에 없는 이미지를 참조합니다. (image_id={image_id})")
        self.image_id = image_id
