from src.exception.base_exceptions import DetFuseException


class SplitException(DetFuseException):
    def __init__(self, image_count: int):
        super().__init__(f"이미지가 2개 이상이어야 분할할 수 있습니다. (images={image_count})")
