import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from spacesweep.budget import BudgetExceeded
from spacesweep.cli.commands import run_command
from spacesweep.cli.parser import build_parser
from spacesweep.common_utils.errors import UsageError, VerificationMismatch


def handle_error(error: Exception) -> int:
    """
    Exit code and one stderr line for the errors a run can end with, anything else is a bug and propagates
    """
    if isinstance(error, BudgetExceeded):
        logging.error(f"Workspace exceeded: {error}")
        print(f"budget exceeded: {error}", file=sys.stderr)
        return 4

    elif isinstance(error, VerificationMismatch):
        print(f"verification failed: {error}", file=sys.stderr)
        return 3

    elif isinstance(error, ValidationError):
        print(f"invalid parameters: {'; '.join(e['msg'] for e in error.errors())}", file=sys.stderr)
        return 2

    elif isinstance(error, UsageError):
        print(f"error: {error}", file=sys.stderr)
        return 2

    raise error


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse already printed its message, --help and --version exit 0
        return e.code if isinstance(e.code, int) else 2

    try:
        return run_command(args)
    except Exception as error:
        return handle_error(error)
