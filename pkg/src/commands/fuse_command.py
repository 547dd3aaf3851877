from argparse import Namespace

from dependency_injector.wiring import inject, Provide

from src.commands.command_options import add_manifest_option, add_nms_options, build_nms_config
from src.core.container import Container
from src.dto.request.ensemble_config_dto import EnsembleConfigDto
from src.enum.ensemble_enums import VotingStrategyEnum
from src.enum.io_enums import BoxFormatEnum
from src.repository.detection_repository import DetectionRepository
from src.repository.manifest_repository import ManifestRepository
from src.service.ensemble.ensemble_service import EnsembleService


def register(subparsers):
    """
    `detfuse fuse` 서브커맨드를 등록합니다.
    """
    parser = subparsers.add_parser("fuse", help="여러 모델의 검출을 투표/융합해 앙상블 검출 파일 생성")
    add_manifest_option(parser)
    parser.add_argument("--detections", nargs="+", required=True, help="모델별 검출 JSON (1개 이상)")
    parser.add_argument("--strategy", choices=[s.value for s in VotingStrategyEnum],
                        default=VotingStrategyEnum.CONSENSUS.value, help="투표 전략 (기본 consensus)")
    parser.add_argument("--group-iou", type=float, default=0.5, help="같은 객체 판정 IoU (기본 0.5)")
    parser.add_argument("--out", required=True, help="앙상블 검출 JSON 출력 경로")
    parser.add_argument("--groups-out", help="투표 전 그룹/융합 결과 JSON 출력 경로 (선택)")
    add_nms_options(parser, "--no-nms")
    parser.set_defaults(handler=fuse, command="fuse")


@inject
def fuse(
        args: Namespace,
        manifest_repository: ManifestRepository = Provide[Container.manifest_repository],
        detection_repository: DetectionRepository = Provide[Container.detection_repository],
        ensemble_service: EnsembleService = Provide[Container.ensemble_service],
):
    """
    # 🔀 앙상블 (fuse)

    모델별 NMS → (image, class)별 그룹화 → 투표 → 융합을 실행하고
    model_id="ensemble"인 검출 파일을 기록합니다.

    ## ⚠️ Raises:
    - **`ConfigException`**: 설정 범위 오류, 레지스트리 불일치 (종료 코드 1)
    - **`IoException`**: 파일 입출력 오류 (종료 코드 2)
    """
    # 파일을 쓰기 전에 모든 플래그를 검증
    config = EnsembleConfigDto.build(
        strategy  = VotingStrategyEnum(args.strategy),
        group_iou = args.group_iou,
        nms       = build_nms_config(args),
    )
    box_format = BoxFormatEnum(args.box_format)

    manifest = manifest_repository.load_manifest(args.manifest, box_format)
    per_model = [detection_repository.load_detections(path, manifest, box_format) for path in args.detections]

    outcome = ensemble_service.run_ensemble_detailed(per_model, manifest, config)
    detection_repository.save_detections(outcome.detection_file, args.out)
    if args.groups_out:
        detection_repository.save_groups(list(outcome.groups), list(outcome.kept), outcome.detection_file, args.groups_out)
