import sys
from argparse import Namespace

from dependency_injector.wiring import inject, Provide

from src.commands.command_options import add_manifest_option
from src.core.container import Container
from src.enum.io_enums import BoxFormatEnum
from src.repository.detection_repository import DetectionRepository
from src.repository.manifest_repository import ManifestRepository
from src.repository.report_repository import ReportRepository
from src.service.dataset.dataset_service import DatasetService


def register(subparsers):
    parser = subparsers.add_parser("stats", help="클래스 분포(개수, 비중) CSV 출력")
    add_manifest_option(parser)
    parser.add_argument("--detections", help="지정 시 검출 파일의 클래스 분포를 출력")
    parser.add_argument("--out", help="CSV 출력 경로 (생략 시 표준 출력)")
    parser.set_defaults(handler=stats, command="stats")


@inject
def stats(
        args: Namespace,
        manifest_repository: ManifestRepository = Provide[Container.manifest_repository],
        detection_repository: DetectionRepository = Provide[Container.detection_repository],
        report_repository: ReportRepository = Provide[Container.report_repository],
        dataset_service: DatasetService = Provide[Container.dataset_service],
):
    """
    # 📈 클래스 분포 (stats)
    """
    box_format = BoxFormatEnum(args.box_format)
    manifest = manifest_repository.load_manifest(args.manifest, box_format)
    if args.detections:
        detection_file = detection_repository.load_detections(args.detections, manifest, box_format)
        distribution = dataset_service.detection_distribution(detection_file)
    else:
        distribution = dataset_service.class_distribution(manifest)

    if args.out:
        report_repository.write_distribution(distribution, args.out)
    else:
        sys.stdout.write(report_repository.render_distribution(distribution))
