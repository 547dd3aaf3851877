from argparse import ArgumentParser, ArgumentTypeError, Namespace
from pathlib import Path
from typing import Any, Iterable, Optional

from src import __version__
from src.domain.evaluation_domain import CANONICAL_IOU_THRESHOLDS
from src.dto.request.nms_config_dto import NmsConfigDto
from src.dto.request.run_config_dto import RunConfigDto
from src.enum.io_enums import BoxFormatEnum, ReportFormatEnum
from src.enum.nms_enums import NmsModeEnum
from src.exception.config_exceptions import ConfigException

# 설정 해시에서 제외하는 인자 (출력 경로, 로깅 플래그, 내부 값)
NON_HASHED_ARGS = {"handler", "command", "out", "out_train", "out_test", "groups_out", "format",
                   "log_level", "log_format", "log_dir"}


def thresholds_arg(text: str) -> tuple[float, ...]:
    """ "0.25,0.5,0.75" → (0.25, 0.5, 0.75) """
    try:
        return tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise ArgumentTypeError(f"IoU 임계값 목록이 올바르지 않습니다: '{text}'") from None


def add_manifest_option(parser: ArgumentParser, required: bool = True):
    parser.add_argument("--manifest", required=required, help="매니페스트 JSON 경로")
    parser.add_argument("--box-format", choices=[f.value for f in BoxFormatEnum], default=BoxFormatEnum.XYWH.value,
                        help="입력 bbox 형식: xywh(기본) 또는 xyxy(좌표쌍)")


def add_iou_options(parser: ArgumentParser):
    parser.add_argument("--iou", type=thresholds_arg, default=CANONICAL_IOU_THRESHOLDS,
                        help="평가 IoU 임계값 (쉼표 구분, 기본 0.25,0.5,0.75)")
    parser.add_argument("--coco-101", action="store_true", help="101점 보간 AP 사용")


def add_nms_options(parser: ArgumentParser, enable_flag: str):
    """
    NMS 플래그를 추가합니다.

    Args:
        enable_flag (str): "--no-nms"(기본 적용, 끄는 플래그) 또는 "--nms"(기본 미적용, 켜는 플래그)
    """
    if enable_flag == "--no-nms":
        parser.add_argument("--no-nms", action="store_true", help="모델별 NMS 생략")
    else:
        parser.add_argument("--nms", action="store_true", help="평가 전 NMS 적용")
    parser.add_argument("--nms-iou", type=float, default=0.5, help="NMS 억제 IoU 임계값 (기본 0.5)")
    parser.add_argument("--nms-mode", choices=[m.value for m in NmsModeEnum], default=NmsModeEnum.CLASS_AWARE.value,
                        help="aware(기본) | agnostic")
    parser.add_argument("--score-floor", type=float, default=0.0, help="이 점수 미만 검출 제거 (기본 0.0)")


def build_nms_config(args: Namespace) -> Optional[NmsConfigDto]:
    enabled = not args.no_nms if hasattr(args, "no_nms") else args.nms
    if not enabled:
        return None
    return NmsConfigDto.build(iou_threshold=args.nms_iou, mode=NmsModeEnum(args.nms_mode), score_floor=args.score_floor)


def report_format(path: str, explicit: Optional[str] = None) -> ReportFormatEnum:
    """
    출력 형식을 결정합니다. --format이 없으면 파일 확장자(.json/.csv/.svg)로 판단합니다.

    Raises:
        ConfigException: 형식을 알 수 없는 경우.
    """
    value = explicit or Path(path).suffix.lstrip(".").lower()
    try:
        return ReportFormatEnum(value)
    except ValueError:
        raise ConfigException(f"출력 형식을 알 수 없습니다: '{path}' (json, csv, svg 중 하나)") from None


def run_config(args: Namespace, extra_excluded: Iterable[str] = ()) -> RunConfigDto:
    """
    해석된 인자로 RunConfigDto를 만듭니다. 출력 경로와 로깅 플래그는 해시에서 제외합니다.
    """
    excluded = NON_HASHED_ARGS | set(extra_excluded)
    options: dict[str, Any] = {
        key: list(value) if isinstance(value, tuple) else value
        for key, value in sorted(vars(args).items())
        if key not in excluded
    }
    return RunConfigDto(command=args.command, options=options, version=__version__)
