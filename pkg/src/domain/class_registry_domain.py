from dataclasses import dataclass, field

from src.exception.io_exceptions import ValidationException

# EAD 아티팩트 8개 클래스 (순서가 곧 dense id)
EAD_CLASSES = (
    "specularity",
    "saturation",
    "artifact",
    "blur",
    "contrast",
    "bubbles",
    "instrument",
    "blood",
)


@dataclass(frozen=True)
class ClassRegistry:
    """
    클래스 라벨 공간. 라벨은 고유하고 비어 있지 않으며 대소문자를 구분합니다.
    """
    names: tuple[str, ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if any(not isinstance(name, str) or not name for name in self.names):
            raise ValidationException("클래스 라벨은 비어 있지 않은 문자열이어야 합니다.")
        if len(set(self.names)) != len(self.names):
            raise ValidationException(f"클래스 라벨이 중복되었습니다: {list(self.names)}")
        object.__setattr__(self, "index", {name: i for i, name in enumerate(self.names)})

    @classmethod
    def default(cls) -> "ClassRegistry":
        return cls(names=EAD_CLASSES)

    def __len__(self) -> int:
        return len(self.names)

    def id_of(self, label: str, image_id: str | None = None) -> int:
        """
        라벨의 dense id를 반환합니다.

        Raises:
            ValidationException: 레지스트리에 없는 라벨일 경우.
        """
        try:
            return self.index[label]
        except KeyError:
            raise ValidationException(f"알 수 없는 클래스 라벨입니다: '{label}'", image_id=image_id) from None

    def name_of(self, class_id: int) -> str:
        if not self.has_id(class_id):
            raise ValidationException(f"유효하지 않은 class_id입니다: {class_id}")
        return self.names[class_id]

    def has_id(self, class_id: int) -> bool:
        return 0 <= class_id < len(self.names)
