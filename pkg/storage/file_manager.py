import json
import sys
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, TextIO
import logging

import numpy as np
import pandas as pd

from models.bipartite_graph import BipartiteGraph
from models.finite_group import FiniteGroup
from models.joint_distribution import JointDistribution
from shared.errors import ConfigError, DistributionError, GraphValidationError, GroupError

# module-level logger
logger = logging.getLogger(__name__)


def _json_default(value: Any):
    if isinstance(value, Fraction):
        return [value.numerator, value.denominator]
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.bool_):
        return bool(value)
    return str(value)


class FileManager:
    """
    Handles reading and writing graph, distribution and group files plus experiment outputs.
    Keeps all file I/O in one place; `None` as a target means stdout.
    """

    def __init__(self, stdout: Optional[TextIO] = None):
        self.stdout = stdout

    def _stream(self) -> TextIO:
        return self.stdout or sys.stdout

    def _read_json(self, path: str, error: type) -> dict:
        target = Path(path)
        if not target.exists():
            logger.error("Input file not found: %s", target)
            raise error(f"file not found: {target}")
        try:
            with target.open("r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as exc:
            logger.error("Malformed JSON in %s: %s", target, exc)
            raise error(f"malformed JSON in {target}: {exc}") from exc
        if not isinstance(data, dict):
            raise error(f"{target} must hold a JSON object")
        return data

    def _write_text(self, text: str, path: Optional[str]) -> None:
        if path is None:
            stream = self._stream()
            stream.write(text)
            stream.flush()
            return
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8")
        logger.info("Wrote %s", target)

    # objects

    def read_graph(self, path: str) -> BipartiteGraph:
        return BipartiteGraph.from_dict(self._read_json(path, GraphValidationError))

    def write_graph(self, g: BipartiteGraph, path: Optional[str] = None) -> None:
        self.save_json(g.to_dict(), path)

    def read_distribution(self, path: str) -> JointDistribution:
        return JointDistribution.from_dict(self._read_json(path, DistributionError))

    def write_distribution(self, x: JointDistribution, path: Optional[str] = None) -> None:
        self.save_json(x.to_dict(), path)

    def read_group(self, path: str) -> FiniteGroup:
        data = self._read_json(path, GroupError)
        try:
            table = data["table"]
            order = int(data["order"])
        except (KeyError, TypeError, ValueError) as exc:
            raise GroupError(f"malformed group object in {path}: {exc}") from exc
        group = FiniteGroup.from_table(table, name=Path(path).stem)
        if group.order != order:
            raise GroupError(f"declared order {order} does not match a {group.order}x{group.order} table")
        return group

    def write_group(self, group: FiniteGroup, path: Optional[str] = None) -> None:
        self.save_json(group.to_dict(), path)

    # reports

    def save_json(self, obj: Any, path: Optional[str] = None) -> None:
        """Save an object as formatted JSON."""
        self._write_text(json.dumps(obj, default=_json_default, indent=2) + "\n", path)

    def save_table(self, frame: pd.DataFrame, path: Optional[str] = None,
                   config: Optional[dict] = None) -> None:
        """CSV with one leading '#' comment holding the run timestamp and config; the body is deterministic."""
        stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
        header = f"# generated {stamp}"
        if config is not None:
            header += f" config={json.dumps(config, default=_json_default, sort_keys=True)}"
        body = frame.to_csv(index=False, lineterminator="\n")
        self._write_text(header + "\n" + body, path)
        logger.info("Saved %d table rows", len(frame))

    def load_table(self, path: str) -> pd.DataFrame:
        target = Path(path)
        if not target.exists():
            raise ConfigError(f"file not found: {target}")
        return pd.read_csv(target, comment="#")

    def load_config(self, path: str) -> dict:
        return self._read_json(path, ConfigError)
