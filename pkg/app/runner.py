import argparse
import json
import logging
import sys
from logging.handlers import RotatingFileHandler
from typing import Optional, Sequence

import pandas as pd

from app.commands import COMMANDS
from models.experiment_config import ExperimentConfig
from shared.constants import LOG_FILE, LOG_FORMAT, LOG_LEVEL
from shared.errors import ConfigError, LoglimError
from shared.parser import ObjectParser
from storage.file_manager import FileManager

HANDLER_NAME = "loglim"

INPUT_KEYS = ("H", "G", "G2", "X", "group", "t1", "t2")


def setup_logging(level: str = LOG_LEVEL, log_file: Optional[str] = LOG_FILE):
    """Logs go to stderr (stdout carries data) and, when configured, to a rotating file."""
    formatter = logging.Formatter(LOG_FORMAT)
    handlers: list[logging.Handler] = []

    console_handler = logging.StreamHandler(sys.stderr)
    handlers.append(console_handler)

    if log_file:
        file_handler = RotatingFileHandler(log_file, maxBytes=5_000_000, backupCount=5, encoding="utf-8")
        handlers.append(file_handler)

    if hasattr(sys.stderr, "reconfigure"):
        sys.stderr.reconfigure(encoding="utf-8")

    root_logger = logging.getLogger()
    for handler in [h for h in root_logger.handlers if h.get_name() == HANDLER_NAME]:
        root_logger.removeHandler(handler)
    for handler in handlers:
        handler.set_name(HANDLER_NAME)
        handler.setFormatter(formatter)
        root_logger.addHandler(handler)
    root_logger.setLevel(level.upper())


logger = logging.getLogger(__name__)


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--H", action="append", help="test graph name or JSON path (repeatable)")
    common.add_argument("--G", help="target graph name or JSON path")
    common.add_argument("--G2", help="second target graph (kappa)")
    common.add_argument("--X", help="joint distribution name or JSON path")
    common.add_argument("--beta")
    common.add_argument("--alpha")
    common.add_argument("--n", help="comma-separated model scales")
    common.add_argument("--N", help="comma-separated type-graph sequence lengths")
    common.add_argument("--trials", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--cap", type=float, help="size cap of the command (cells, test-graph vertices)")
    common.add_argument("--tol", type=float)
    common.add_argument("--n-max", dest="n_max", type=int)
    common.add_argument("--max-order", dest="max_order", type=int)
    common.add_argument("--group", help="group name (z6, d4, q8, s4, heisenberg:3) or JSON path")
    common.add_argument("--t1", help="generators of T1 as element indices")
    common.add_argument("--t2", help="generators of T2 as element indices")
    common.add_argument("--R-only", dest="R_only", action="store_true")
    common.add_argument("--mode", choices=["density", "entropy"], default="density")
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--config", help="JSON file of flag values; command-line flags win")
    return common


def build_parser() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    parser = argparse.ArgumentParser(prog="loglim", description="Logarithmic densities of bipartite graphs")
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()
    children = {name: subparsers.add_parser(name, parents=[common]) for name in COMMANDS}
    return parser, children


def _apply_config(parser, children, argv, args, file_manager: FileManager):
    """Re-parse with the config file's values as defaults so explicit flags keep priority."""
    config = file_manager.load_config(args.config)
    child = children[args.command]
    known = {action.dest for action in child._actions if action.dest != "help"}
    unknown = sorted(key for key in config if key.replace("-", "_") not in known)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    values = {key.replace("-", "_"): value for key, value in config.items()}
    # --H appends to its default, so a config list must not leak into explicit flags
    if args.H is not None:
        values.pop("H", None)
    elif isinstance(values.get("H"), str):
        values["H"] = [values["H"]]
    child.set_defaults(**values)
    return parser.parse_args(argv)


def _resolved_config(args) -> ExperimentConfig:
    values = {k: v for k, v in vars(args).items() if k not in ("command", "out", "seed", "config", "format")}
    return ExperimentConfig(
        command=args.command,
        inputs={k: values.pop(k) for k in INPUT_KEYS if values.get(k) is not None},
        params={k: v for k, v in values.items() if v is not None},
        out=args.out,
        seed=args.seed,
    )


def _emit(result, config: ExperimentConfig, args, file_manager: FileManager):
    if isinstance(result, pd.DataFrame):
        if args.format == "csv":
            file_manager.save_table(result, args.out, config.to_dict())
        else:
            file_manager.save_json({"config": config.to_dict(),
                                    "rows": json.loads(result.to_json(orient="records"))}, args.out)
        return
    if args.format == "csv":
        flat = {k: v for k, v in result.items() if not isinstance(v, (dict, list))}
        file_manager.save_table(pd.DataFrame([flat]), args.out, config.to_dict())
    else:
        file_manager.save_json({**result, "config": config.to_dict()}, args.out)


def main(argv: Optional[Sequence[str]] = None, file_manager: Optional[FileManager] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    file_manager = file_manager or FileManager()
    parser, children = build_parser()
    args = parser.parse_args(argv)
    setup_logging()

    try:
        if args.config:
            args = _apply_config(parser, children, argv, args, file_manager)
        config = _resolved_config(args)
        logger.info("Running %s with %s", args.command, config.to_dict())
        result = COMMANDS[args.command](args, ObjectParser(file_manager))
        _emit(result, config, args, file_manager)
        return 0
    except LoglimError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 2
    except Exception:
        logger.exception("Unexpected failure in %s", args.command)
        return 1


if __name__ == "__main__":
    sys.exit(main())
