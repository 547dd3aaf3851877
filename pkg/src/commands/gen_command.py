from argparse import Namespace

from dependency_injector.wiring import inject, Provide

from src.commands.command_options import add_manifest_option
from src.core.container import Container
from src.dto.request.perturb_config_dto import PerturbConfigDto, ScoreModelDto
from src.enum.io_enums import BoxFormatEnum
from src.repository.detection_repository import DetectionRepository
from src.repository.manifest_repository import ManifestRepository
from src.service.synth.synth_service import SynthService


def register(subparsers):
    parser = subparsers.add_parser("gen", help="정답을 교란한 합성 검출 파일 생성")
    add_manifest_option(parser)
    parser.add_argument("--seed", type=int, default=0, help="난수 시드 (기본 0)")
    parser.add_argument("--jitter", type=float, default=0.0, help="박스 크기 대비 좌표 지터 (기본 0)")
    parser.add_argument("--drop", type=float, default=0.0, help="정답 누락 확률 [0, 1] (기본 0)")
    parser.add_argument("--fp", type=float, default=0.0, help="이미지당 기대 오검출 수 (기본 0)")
    parser.add_argument("--base-score", type=float, default=0.95, help="지터 0일 때 신뢰도 (기본 0.95)")
    parser.add_argument("--decay", type=float, default=4.0, help="지터에 따른 신뢰도 감쇠율 (기본 4.0)")
    parser.add_argument("--fp-score-max", type=float, default=0.3, help="오검출 신뢰도 상한 (기본 0.3)")
    parser.add_argument("--model-id", required=True, help="생성할 검출 파일의 model_id")
    parser.add_argument("--out", required=True, help="검출 JSON 출력 경로")
    parser.set_defaults(handler=gen, command="gen")


@inject
def gen(
        args: Namespace,
        manifest_repository: ManifestRepository = Provide[Container.manifest_repository],
        detection_repository: DetectionRepository = Provide[Container.detection_repository],
        synth_service: SynthService = Provide[Container.synth_service],
):
    """
    # 🎲 합성 검출 생성 (gen)
    """
    config = PerturbConfigDto.build(
        seed        = args.seed,
        jitter      = args.jitter,
        drop_rate   = args.drop,
        fp_rate     = args.fp,
        score_model = ScoreModelDto.build(base_score=args.base_score, decay=args.decay, fp_score_max=args.fp_score_max),
    )
    manifest = manifest_repository.load_manifest(args.manifest, BoxFormatEnum(args.box_format))
    detection_file = synth_service.generate(manifest, config, args.model_id)
    detection_repository.save_detections(detection_file, args.out)
