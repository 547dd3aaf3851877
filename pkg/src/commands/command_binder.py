from src.commands import benchmark_command, eval_command, fuse_command, gen_command, split_command, stats_command


def register_commands(subparsers):
    """
    서브커맨드를 argparse 서브파서에 등록합니다.
    각 모듈의 register()가 파서 옵션과 핸들러(set_defaults)를 바인딩합니다.

    Args:
        subparsers: ArgumentParser.add_subparsers()의 반환값
    """
    fuse_command.register(subparsers)
    eval_command.register(subparsers)
    benchmark_command.register(subparsers)
    stats_command.register(subparsers)
    split_command.register(subparsers)
    gen_command.register(subparsers)
