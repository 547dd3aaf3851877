from src.exception.base_exceptions import DetFuseException


class MixedImageException(DetFuseException):
    def __init__(self, image_ids: list[str]):
        super().__init__(f"NMS 입력은 하나의 이미지에 속해야 합니다. (image_ids={sorted(image_ids)})")
