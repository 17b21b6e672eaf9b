"""Программная точка входа: run_cli(argv) -> код возврата."""
import sys

from django.core.management import CommandError

from .management.commands.rootlab import USAGE_ERROR, Command


def run_cli(argv, stdout=None, stderr=None) -> int:
    """Выполнить `rootlab <argv>` и вернуть код: 0, 1 (проверка) или 2."""
    command = Command(stdout=stdout, stderr=stderr)
    try:
        command.run_from_argv(['manage.py', 'rootlab', *argv])
    except SystemExit as exit_:
        if exit_.code is None:
            return 0
        return exit_.code if isinstance(exit_.code, int) else USAGE_ERROR
    except CommandError as error:
        # ошибки разбора аргументов подкоманды
        (stderr or sys.stderr).write(f'{error}\n')
        return USAGE_ERROR
    return 0
