from src.exception.base_exceptions import DetFuseException


class PartitionException(DetFuseException):
    def __init__(self):
        super().__init__("매칭 입력은 하나의 (image_id, class_id) 파티션에 속해야 합니다.")


class EvalException(DetFuseException):
    def __init__(self, detail: str = "평가할 정답(ground truth) 박스가 없습니다."):
        super().__init__(detail)


class ClassSkippedException(DetFuseException):
    """정답 인스턴스가 없는 클래스. mAP 평균에서 제외됩니다."""

    def __init__(self, class_id: int | None = None):
        super().__init__(f"정답 인스턴스가 없어 클래스를 건너뜁니다. (class_id={class_id})")
        self.class_id = class_id
