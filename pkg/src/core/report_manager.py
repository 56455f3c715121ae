"""
Artifact and manifest writing for FilterLab
"""

import json
import time
from collections.abc import Callable
from dataclasses import asdict, dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any

import pandas as pd
from loguru import logger

from src.core.constants import FLOAT_FORMAT, MANIFEST_FILENAME
from src.version import __version__


@dataclass
class RunManifest:
    """Record of one command run"""

    command: str
    parameters: dict[str, Any]
    seeds: dict[str, int] = field(default_factory=dict)
    artifacts: list[str] = field(default_factory=list)
    version: str = __version__
    started_at: str = field(default_factory=lambda: datetime.now().isoformat())
    duration_s: float = 0.0


class ReportManager:
    """Writes CSV/JSON artifacts into one output directory and tracks them"""

    def __init__(self, out_dir: str | Path):
        self.out_dir = Path(out_dir)
        self.out_dir.mkdir(parents=True, exist_ok=True)
        self.written: list[Path] = []
        self._clock = time.perf_counter()

    def path_for(self, name: str | Path) -> Path:
        path = Path(name)
        return path if path.is_absolute() else self.out_dir / path

    def write_csv(self, frame: pd.DataFrame, name: str | Path) -> Path:
        """Write a data frame with full double precision"""
        path = self.path_for(name)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
        except OSError as e:
            logger.error(f"Failed to write CSV {path}: {e}")
            raise
        self._track(path)
        logger.info(f"CSV written: {path}")
        return path

    def write_json(self, payload: Any, name: str | Path) -> Path:
        """Write a JSON document"""
        path = self.path_for(name)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding="utf-8") as f:
                json.dump(payload, f, indent=2)
                f.write("\n")
        except OSError as e:
            logger.error(f"Failed to write JSON {path}: {e}")
            raise
        self._track(path)
        logger.info(f"JSON written: {path}")
        return path

    def write_artifact(self, writer: Callable[[Any, Path], Path], payload: Any, name: str | Path) -> Path:
        """Write with a domain writer taking (payload, path)"""
        path = self.path_for(name)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            writer(payload, path)
        except OSError as e:
            logger.error(f"Failed to write {path}: {e}")
            raise
        self._track(path)
        logger.info(f"Artifact written: {path}")
        return path

    def write_manifest(
        self,
        command: str,
        parameters: dict[str, Any],
        seeds: dict[str, int] | None = None,
    ) -> RunManifest:
        """Write manifest.json listing every artifact of this run"""
        manifest = RunManifest(
            command=command,
            parameters=parameters,
            seeds=seeds or {},
            artifacts=[str(p) for p in self.written],
            duration_s=time.perf_counter() - self._clock,
        )
        path = self.out_dir / MANIFEST_FILENAME
        try:
            with open(path, "w", encoding="utf-8") as f:
                json.dump(asdict(manifest), f, indent=2, default=str)
                f.write("\n")
        except OSError as e:
            logger.error(f"Failed to write manifest {path}: {e}")
            raise
        logger.info(f"Manifest written: {path}")
        return manifest

    def _track(self, path: Path):
        if path not in self.written:
            self.written.append(path)


def load_manifest(path: str | Path) -> RunManifest:
    """Read a manifest written by ReportManager"""
    with open(path, encoding="utf-8") as f:
        data = json.load(f)
    return RunManifest(**data)
