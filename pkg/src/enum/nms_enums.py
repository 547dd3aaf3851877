from enum import Enum

class NmsModeEnum(str, Enum):
    CLASS_AWARE    = "aware"      # 같은 클래스끼리만 억제
    CLASS_AGNOSTIC = "agnostic"   # 클래스 무관 억제
