# ramseytype - Config Loader
# JSON loading for the external Ramsey constant table

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Tuple

from ..errors import ErrorCode, make_error

logger = logging.getLogger(__name__)


class ConfigLoader:
    """Loads the few file inputs a run may take.

    Everything else is a command-line flag.
    """

    def _load_json(self, path: Path) -> Dict[str, Any]:
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise make_error(ErrorCode.E401, path=str(path), details=str(e))
        if not isinstance(data, dict):
            raise make_error(ErrorCode.E401, path=str(path), details="top level must be an object")
        return data

    def load_ramsey_table(self, path: Path) -> Dict[Tuple[int, int], int]:
        """Load external Ramsey constants.

        The file looks like
        ``{"values": [{"colors": 2, "order": 4, "value": 18}]}``.

        Args:
            path: JSON file to read

        Returns:
            Mapping (colors, order) -> value
        """
        data = self._load_json(path)
        entries = data.get("values", [])
        if not isinstance(entries, list):
            raise make_error(ErrorCode.E401, path=str(path), details="'values' must be a list")

        table: Dict[Tuple[int, int], int] = {}
        for index, entry in enumerate(entries):
            key, value = self._parse_entry(path, index, entry)
            table[key] = value
        logger.info("loaded %d external Ramsey constant(s) from %s", len(table), path)
        return table

    def _parse_entry(self, path: Path, index: int, entry: Any) -> Tuple[Tuple[int, int], int]:
        fields: List[int] = []
        for name in ("colors", "order", "value"):
            raw = entry.get(name) if isinstance(entry, dict) else None
            if not isinstance(raw, int) or isinstance(raw, bool) or raw < 1:
                raise make_error(
                    ErrorCode.E401,
                    path=str(path),
                    details=f"entry {index}: '{name}' must be a positive integer",
                )
            fields.append(raw)
        colors, order, value = fields
        return (colors, order), value
