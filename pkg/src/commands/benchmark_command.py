from argparse import Namespace

from dependency_injector.wiring import inject, Provide

from src.commands.command_options import add_iou_options, report_format, run_config
from src.core.container import Container
from src.dto.request.evaluation_config_dto import EvaluationConfigDto
from src.enum.evaluation_enums import ApInterpolationEnum
from src.enum.io_enums import BoxFormatEnum
from src.repository.detection_repository import DetectionRepository
from src.repository.manifest_repository import ManifestRepository
from src.repository.report_repository import ReportRepository
from src.service.benchmark.benchmark_service import BenchmarkService


def register(subparsers):
    """
    `detfuse benchmark` 서브커맨드를 등록합니다.
    """
    parser = subparsers.add_parser("benchmark", help="여러 방법의 mAP 비교표(CSV/JSON/SVG) 생성")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--reports", nargs="+", help="eval로 만든 리포트 JSON 목록")
    source.add_argument("--detections", nargs="+", help="평가할 검출 JSON 목록 (--manifest 필요)")
    parser.add_argument("--manifest", help="--detections 사용 시 매니페스트 JSON 경로")
    parser.add_argument("--box-format", choices=[f.value for f in BoxFormatEnum], default=BoxFormatEnum.XYWH.value,
                        help="입력 bbox 형식: xywh(기본) 또는 xyxy")
    parser.add_argument("--methods", nargs="+", help="행 이름 (기본: 각 입력의 model_id)")
    parser.add_argument("--runs", nargs="+", help="행별 실행 라벨 (예: 데이터 증강 전략)")
    parser.add_argument("--reference-csv", help="발표된 결과(백분율) CSV, 표 앞쪽에 병합")
    add_iou_options(parser)
    parser.add_argument("--out", nargs="+", required=True, help="출력 경로 (.csv/.json/.svg, 여러 개 가능)")
    parser.add_check(
        lambda args: "--detections 사용 시 --manifest가 필요합니다." if args.detections and not args.manifest else None
    )
    parser.set_defaults(handler=benchmark, command="benchmark")


@inject
def benchmark(
        args: Namespace,
        manifest_repository: ManifestRepository = Provide[Container.manifest_repository],
        detection_repository: DetectionRepository = Provide[Container.detection_repository],
        report_repository: ReportRepository = Provide[Container.report_repository],
        benchmark_service: BenchmarkService = Provide[Container.benchmark_service],
):
    """
    # 🏁 벤치마크 (benchmark)

    리포트 또는 검출 파일들로 임계값별 mAP 비교표를 만듭니다.
    CSV는 백분율 소수 둘째 자리, JSON은 [0, 1] 비율과 임계값별 최고 방법을 기록합니다.
    """
    outputs = [(path, report_format(path)) for path in args.out]
    provenance = run_config(args)

    if args.reports:
        reports = [report_repository.load_report(path) for path in args.reports]
        table = benchmark_service.table_from_reports(reports, args.methods, args.runs)
    else:
        config = EvaluationConfigDto.build(
            thresholds    = args.iou,
            interpolation = ApInterpolationEnum.COCO_101 if args.coco_101 else ApInterpolationEnum.ALL_POINT,
        )
        box_format = BoxFormatEnum(args.box_format)
        manifest = manifest_repository.load_manifest(args.manifest, box_format)
        files = [detection_repository.load_detections(path, manifest, box_format) for path in args.detections]
        table = benchmark_service.table_from_detections(files, manifest, config, args.methods, args.runs)

    if args.reference_csv:
        thresholds, reference_rows = report_repository.load_reference_csv(args.reference_csv)
        table = benchmark_service.merge_reference(table, thresholds, reference_rows)

    table = benchmark_service.with_provenance(table, provenance.config_hash(), provenance.version)
    for path, fmt in outputs:
        report_repository.write_report(table, path, fmt)
