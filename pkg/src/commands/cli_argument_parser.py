import argparse
import sys
from typing import Callable, Optional

from src.exception.cli_exceptions import UsageException

# 파싱된 인자를 받아 오류 메시지(정상이면 None)를 반환하는 인자 간 검사
ArgumentCheck = Callable[[argparse.Namespace], Optional[str]]


class CliArgumentParser(argparse.ArgumentParser):
    """
    사용법 오류 시 사용법을 표준 에러에 출력하고 UsageException(종료 코드 1)을 발생시키는 ArgumentParser.
    argparse 기본 동작(종료 코드 2)은 입출력 오류 코드와 겹치므로 사용하지 않습니다.

    argparse로 표현할 수 없는 인자 간 조건은 add_check()로 등록하며,
    파싱 직후 같은 경로(사용법 출력 + UsageException)로 보고됩니다.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._arg_checks: list[ArgumentCheck] = []

    def add_check(self, check: ArgumentCheck):
        self._arg_checks.append(check)

    def parse_known_args(self, args=None, namespace=None):
        namespace, extras = super().parse_known_args(args, namespace)
        for check in self._arg_checks:
            message = check(namespace)
            if message:
                self.error(message)
        return namespace, extras

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageException(message)
