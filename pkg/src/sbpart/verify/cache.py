"""On-disk cache of distributions: one JSON document per key."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import threading
from pathlib import Path
from typing import TYPE_CHECKING

from ..qseries import QPolynomial

if TYPE_CHECKING:
    from .distribution import DistributionKey


def key_checksum(key: DistributionKey) -> str:
    blob = json.dumps(key.to_json(), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()


def default_cache_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "sbpart"


class DistributionCache:
    """Entries are revalidated against the key checksum on every read."""

    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)
        self._lock = threading.Lock()

    def path(self, key: DistributionKey) -> Path:
        stat = key.statistic.replace("'", "p").replace(":", "_")
        return self.directory / f"{key.family}__{stat}__n{key.n}_k{key.k}.json"

    def get(self, key: DistributionKey) -> QPolynomial | None:
        try:
            data = json.loads(self.path(key).read_text())
        except (OSError, ValueError):
            return None
        if data.get("checksum") != key_checksum(key) or data.get("key") != key.to_json():
            return None
        try:
            return QPolynomial.from_json(data)
        except (KeyError, TypeError, ValueError):
            return None

    def put(self, key: DistributionKey, poly: QPolynomial) -> None:
        doc = {"key": key.to_json(), "checksum": key_checksum(key), **poly.to_json()}
        with self._lock:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                json.dump(doc, fh)
            os.replace(tmp, self.path(key))
