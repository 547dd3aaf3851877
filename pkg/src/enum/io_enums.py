from enum import Enum

class BoxFormatEnum(str, Enum):
    XYWH = "xywh"   # 좌상단 + 크기 (정규 형식)
    XYXY = "xyxy"   # 좌상단 + 우하단 좌표쌍

class ReportFormatEnum(str, Enum):
    JSON = "json"
    CSV  = "csv"
    SVG  = "svg"
