from spacesweep.cli.main import main, handle_error
from spacesweep.cli.parser import build_parser
from spacesweep.cli.commands import run_command, space_bound
