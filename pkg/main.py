import argparse
import importlib
import logging
import os
import sys
from logging import StreamHandler
from logging.handlers import TimedRotatingFileHandler
from typing import Callable, List, Optional

from dotenv import load_dotenv

from wonderful import __version__
from wonderful.config import LOG_FILE, LOG_FORMAT, WonderfulConfig
from wonderful.errors import ConfigurationError, WonderfulError
from wonderful.output import RED, RESET, render_json, render_pretty

# Load environment variables
load_dotenv()

# Directory constants
COMMANDS_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "wonderful", "commands")
COMMANDS_PACKAGE = "wonderful.commands"

_HANDLER_TAG = "_wonderful_handler"


def setup_directories(config: WonderfulConfig) -> None:
    os.makedirs(config.log_dir, exist_ok=True)


def setup_logging(config: WonderfulConfig) -> None:
    """Configure logging with file rotation."""
    os.makedirs(config.log_dir, exist_ok=True)

    logger = logging.getLogger()
    logger.setLevel(config.log_level)

    # Repeated runs in one process replace the handlers installed earlier
    for handler in list(logger.handlers):
        if getattr(handler, _HANDLER_TAG, False):
            logger.removeHandler(handler)
            handler.close()

    # File handler with rotation
    file_handler = TimedRotatingFileHandler(
        os.path.join(config.log_dir, LOG_FILE),
        when="midnight",
        backupCount=7,
        encoding='utf-8',
        utc=True
    )
    file_handler.setLevel(config.log_level)
    file_handler.setFormatter(logging.Formatter(LOG_FORMAT))

    # Console handler for errors only; stdout carries the JSON
    console_handler = StreamHandler(sys.stderr)
    console_handler.setLevel(logging.ERROR)
    console_handler.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))

    for handler in (file_handler, console_handler):
        setattr(handler, _HANDLER_TAG, True)
        logger.addHandler(handler)


def validate_environment() -> WonderfulConfig:
    """Read WF_* settings; malformed values raise ConfigurationError."""
    return WonderfulConfig.from_env()


class WonderfulCLI:
    def __init__(self) -> None:
        self.common = argparse.ArgumentParser(add_help=False)
        self.common.add_argument("--pretty", action="store_true", help="render a human-readable table")

        self.parser = argparse.ArgumentParser(
            prog="wonderful",
            description="Frobenius pushforwards on wonderful compactifications",
        )
        self.parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
        self.subparsers = self.parser.add_subparsers(dest="command", required=True)
        self.commands: List[str] = []
        self.logger = logging.getLogger('wonderful.cli')

    def add_command(self, name: str, help: str, handler: Optional[Callable] = None) -> argparse.ArgumentParser:
        parser = self.subparsers.add_parser(name, parents=[self.common], help=help)
        if handler is not None:
            parser.set_defaults(handler=handler)
        self.commands.append(name)
        return parser

    def load_commands(self) -> None:
        """Load all command modules from the commands directory and subdirectories."""
        if not os.path.isdir(COMMANDS_DIR):
            return

        # Files to skip (not command modules)
        skip_files = {'config.py', '__init__.py', 'common.py'}

        for root, dirs, files in os.walk(COMMANDS_DIR):
            dirs[:] = sorted(d for d in dirs if not d.startswith('__'))
            rel_path = os.path.relpath(root, COMMANDS_DIR)

            for filename in sorted(files):
                if not filename.endswith('.py') or filename in skip_files:
                    continue

                if rel_path == '.':
                    module = f"{COMMANDS_PACKAGE}.{filename[:-3]}"
                else:
                    rel_module = rel_path.replace(os.sep, '.')
                    module = f"{COMMANDS_PACKAGE}.{rel_module}.{filename[:-3]}"

                importlib.import_module(module).setup(self)
                self.logger.debug(f"Loaded command module: {module}")

    def dispatch(self, argv: Optional[List[str]]) -> int:
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else 2

        try:
            payload = args.handler(args)
        except WonderfulError as e:
            self.logger.error(f"{args.command} failed: {e}")
            print(render_json({"error": e.code, "detail": e.detail}))
            return 1
        except ValueError as e:
            self.logger.error(f"{args.command} rejected its input: {e}")
            print(render_json({"error": "invalid_argument", "detail": str(e)}))
            return 1
        except Exception as e:
            self.logger.exception(f"Unexpected error in {args.command}")
            print(render_json({"error": "internal", "detail": str(e)}))
            return 1

        if args.pretty:
            renderer = getattr(args, "render", None) or render_pretty
            print(renderer(payload))
        else:
            print(render_json(payload))

        if getattr(args, "check_passed", False) and not payload.get("passed", False):
            return 1
        return 0


def run(argv: Optional[List[str]] = None) -> int:
    try:
        config = validate_environment()
        setup_directories(config)
        setup_logging(config)
    except ConfigurationError as e:
        print(f"{RED}Startup error: {e}{RESET}", file=sys.stderr)
        print(render_json({"error": e.code, "detail": e.detail}))
        return 1

    cli = WonderfulCLI()
    cli.load_commands()
    logging.info(f"Running {argv if argv is not None else sys.argv[1:]}")
    return cli.dispatch(argv)


if __name__ == "__main__":
    sys.exit(run())
