from argparse import Namespace

from dependency_injector.wiring import inject, Provide

from src.commands.command_options import add_manifest_option
from src.core.container import Container
from src.enum.io_enums import BoxFormatEnum
from src.exception.config_exceptions import ConfigException
from src.repository.manifest_repository import ManifestRepository
from src.service.dataset.dataset_service import DatasetService


def register(subparsers):
    parser = subparsers.add_parser("split", help="이미지 단위 학습/평가 매니페스트 분할")
    add_manifest_option(parser)
    parser.add_argument("--test-fraction", type=float, default=0.2, help="평가 이미지 비율 (0, 1), 기본 0.2")
    parser.add_argument("--seed", type=int, default=0, help="셔플 시드 (기본 0)")
    parser.add_argument("--out-train", required=True, help="학습 매니페스트 출력 경로")
    parser.add_argument("--out-test", required=True, help="평가 매니페스트 출력 경로")
    parser.set_defaults(handler=split, command="split")


@inject
def split(
        args: Namespace,
        manifest_repository: ManifestRepository = Provide[Container.manifest_repository],
        dataset_service: DatasetService = Provide[Container.dataset_service],
):
    """
    # ✂️ 분할 (split)

    같은 seed면 항상 같은 분할을 만듭니다. 이미지와 그 어노테이션은 한쪽에만 속합니다.
    """
    if not 0.0 < args.test_fraction < 1.0:
        raise ConfigException(f"--test-fraction은 (0, 1) 범위여야 합니다: {args.test_fraction}")
    if args.seed < 0:
        raise ConfigException(f"--seed는 0 이상이어야 합니다: {args.seed}")

    manifest = manifest_repository.load_manifest(args.manifest, BoxFormatEnum(args.box_format))
    train, test = dataset_service.split_manifest(manifest, args.test_fraction, args.seed)
    manifest_repository.save_manifests([(train, args.out_train), (test, args.out_test)])
