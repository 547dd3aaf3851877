from typing import Optional, Sequence

from dependency_injector import providers

from src import __version__
from src.commands.cli_argument_parser import CliArgumentParser
from src.commands.command_binder import register_commands
from src.core.container import container
from src.core.settings import Settings
from src.exception.cli_exceptions import UsageException
from src.exception.exception_handler_registry import ExceptionHandlerRegistry
from src.logging.command_logging_runner import CommandLoggingRunner

_wired = False


def create_app() -> CliArgumentParser:
    """
    detfuse 명령행 애플리케이션을 생성하고 설정을 초기화합니다.

    - 의존성 주입 컨테이너를 커맨드 패키지에 연결(wiring)합니다.
    - 공통 로깅 플래그와 서브커맨드(fuse, eval, benchmark, stats, split, gen)를 등록합니다.

    Returns:
        설정이 완료된 ArgumentParser
    """
    global _wired
    if not _wired:
        # 지정된 패키지 내에서 의존성 주입 적용
        container.wire(packages=["src.commands"])
        _wired = True

    parser = CliArgumentParser(
        prog="detfuse",
        description="검출기 앙상블(투표/융합)과 mAP 평가 도구",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="로그 레벨 (기본 WARNING)")
    parser.add_argument("--log-format", choices=["text", "json"], help="로그 형식 (기본 text)")
    parser.add_argument("--log-dir", help="지정 시 파일 로그를 이 디렉터리에 기록")

    subparsers = parser.add_subparsers(dest="command", required=True, metavar="{fuse,eval,benchmark,stats,split,gen}")
    register_commands(subparsers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    명령행 진입점.

    Args:
        argv: 인자 목록 (None이면 sys.argv[1:])

    Returns:
        int: 종료 코드 (0 성공, 1 검증/설정 오류, 2 입출력 오류)
    """
    parser = create_app()
    try:
        args = parser.parse_args(argv)
    except UsageException as exc:
        return ExceptionHandlerRegistry.handle(exc)
    except SystemExit as exc:
        # --help, --version
        return exc.code if isinstance(exc.code, int) else 0

    overrides = {
        "LOG_LEVEL": args.log_level,
        "LOG_FORMAT": args.log_format,
        "LOG_DIR": args.log_dir,
    }
    settings = Settings(**{key: value for key, value in overrides.items() if value is not None})

    # 실행 단위 설정으로 교체 (환경 변수는 읽지 않음)
    container.settings.override(providers.Object(settings))
    container.logger_config.reset()
    try:
        runner = CommandLoggingRunner(container.logger_config())
        return runner.run(args.command, args.handler, args)
    finally:
        container.settings.reset_override()
        container.logger_config.reset()
