"""Append-only JSON-lines cache of extremal results.

One :class:`CacheRecord` per line. Lines that fail validation are skipped
with a warning and never trusted; the latest valid record for a key wins.
Only complete results are written.
"""

from __future__ import annotations

from pathlib import Path

from pydantic import ValidationError

from turanlab.graph.family import GraphFamily
from turanlab.observability._logging import get_logger
from turanlab.solver.common import family_key
from turanlab.solver.models import CacheKey, CacheRecord, ExtremalResult, SolverMode


log = get_logger(__name__)


def make_cache_key(n: int, family: GraphFamily, mode: SolverMode, all_extremal: bool = False) -> CacheKey:
    """Key that ignores member order and labelling of the forbidden family."""
    return CacheKey(n=n, family_key=family_key(family), mode=mode, all_extremal=all_extremal)


class ResultCache:
    def __init__(self, path: str | Path) -> None:
        self.path = Path(path).expanduser()
        self._records: dict[str, CacheRecord] = {}
        self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        with self.path.open(encoding="utf-8") as handle:
            for line_no, line in enumerate(handle, start=1):
                if not line.strip():
                    continue
                try:
                    record = CacheRecord.model_validate_json(line)
                except (ValidationError, ValueError) as exc:
                    log.warning("cache_line_corrupt", path=str(self.path), line=line_no, error=str(exc)[:200])
                    continue
                self._records[record.key.token()] = record
        log.debug("cache_loaded", path=str(self.path), records=len(self._records))

    def __len__(self) -> int:
        return len(self._records)

    def get(self, key: CacheKey) -> ExtremalResult | None:
        record = self._records.get(key.token())
        if record is None:
            return None
        log.debug("cache_hit", key=key.token(), solver_version=record.solver_version)
        return record.result

    def put(self, key: CacheKey, result: ExtremalResult) -> bool:
        """Append ``result``; incomplete results are refused."""
        if not result.complete:
            log.info("cache_skip_incomplete", key=key.token())
            return False
        record = CacheRecord(key=key, result=result, solver_version=result.solver_version)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as handle:
            handle.write(record.model_dump_json() + "\n")
        self._records[key.token()] = record
        return True


def cache_get(path: str | Path, key: CacheKey) -> ExtremalResult | None:
    return ResultCache(path).get(key)


def cache_put(path: str | Path, key: CacheKey, result: ExtremalResult) -> bool:
    return ResultCache(path).put(key, result)


__all__ = ["ResultCache", "cache_get", "cache_put", "make_cache_key"]
