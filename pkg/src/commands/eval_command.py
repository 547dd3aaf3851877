import sys
from argparse import Namespace

from dependency_injector.wiring import inject, Provide

from src.commands.command_options import add_iou_options, add_manifest_option, add_nms_options, build_nms_config, report_format
from src.core.container import Container
from src.dto.request.evaluation_config_dto import EvaluationConfigDto
from src.enum.evaluation_enums import ApInterpolationEnum
from src.enum.io_enums import BoxFormatEnum, ReportFormatEnum
from src.repository.detection_repository import DetectionRepository
from src.repository.manifest_repository import ManifestRepository
from src.repository.report_repository import ReportRepository
from src.service.evaluation.evaluation_service import EvaluationService


def register(subparsers):
    """
    `detfuse eval` 서브커맨드를 등록합니다.
    """
    parser = subparsers.add_parser("eval", help="검출 파일을 정답과 비교해 AP/mAP 리포트 생성")
    add_manifest_option(parser)
    parser.add_argument("--detections", required=True, help="평가할 검출 JSON")
    add_iou_options(parser)
    parser.add_argument("--out", help="리포트 경로 (.json/.csv/.svg, 생략 시 JSON을 표준 출력)")
    parser.add_argument("--format", choices=[f.value for f in ReportFormatEnum], help="출력 형식 (기본: 확장자)")
    add_nms_options(parser, "--nms")
    parser.set_defaults(handler=evaluate, command="eval")


def build_evaluation_config(args: Namespace) -> EvaluationConfigDto:
    return EvaluationConfigDto.build(
        thresholds    = args.iou,
        interpolation = ApInterpolationEnum.COCO_101 if args.coco_101 else ApInterpolationEnum.ALL_POINT,
        nms           = build_nms_config(args),
    )


@inject
def evaluate(
        args: Namespace,
        manifest_repository: ManifestRepository = Provide[Container.manifest_repository],
        detection_repository: DetectionRepository = Provide[Container.detection_repository],
        report_repository: ReportRepository = Provide[Container.report_repository],
        evaluation_service: EvaluationService = Provide[Container.evaluation_service],
):
    """
    # 📊 평가 (eval)

    임계값별 클래스 AP와 mAP를 계산합니다. 리포트에는 평가 설정 해시와 도구 버전이 포함됩니다.
    라이브러리 호출(EvaluationService.evaluate)과 같은 설정이면 같은 리포트를 만듭니다.
    """
    config = build_evaluation_config(args)
    fmt = report_format(args.out, args.format) if args.out else ReportFormatEnum.JSON
    box_format = BoxFormatEnum(args.box_format)

    manifest = manifest_repository.load_manifest(args.manifest, box_format)
    detection_file = detection_repository.load_detections(args.detections, manifest, box_format)
    report = evaluation_service.evaluate(detection_file, manifest, config)

    if args.out:
        report_repository.write_report(report, args.out, fmt)
    else:
        sys.stdout.write(report_repository.render_report_json(report))
