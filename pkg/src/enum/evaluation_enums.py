from enum import Enum

class ApInterpolationEnum(str, Enum):
    ALL_POINT = "all_point"   # 연속(all-point) 보간
    COCO_101  = "coco_101"    # 101점 샘플링
