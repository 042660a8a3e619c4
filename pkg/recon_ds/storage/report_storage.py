"""JSON-based persistence for verification reports."""

import json
import logging
from pathlib import Path
from typing import Iterable, List

from ..core.exceptions import ReconError
from ..models.report import VerifyReport
from .serializers import check_schema, dumps, versioned

logger = logging.getLogger(__name__)


class ReportStorage:
    """Reads and writes one JSON file of verification reports."""

    def __init__(self, path):
        """
        Args:
            path: Target JSON file; parent directories are created on save
        """
        self.path = Path(path)

    @staticmethod
    def render(reports: Iterable[VerifyReport], include_time: bool = True) -> str:
        """The document text for a list of reports."""
        return dumps(versioned("verify", [r.to_dict(include_time) for r in reports]))

    def save(self, reports: Iterable[VerifyReport], include_time: bool = True) -> None:
        reports = list(reports)
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self.path.write_text(self.render(reports, include_time), encoding="utf-8")
        except OSError as e:
            logger.error(f"❌ Failed to save reports to {self.path}: {e}")
            raise ReconError(f"Cannot write {self.path}", e)
        logger.info(f"✅ Saved {len(reports)} reports to {self.path}")

    def load(self) -> List[VerifyReport]:
        try:
            document = json.loads(self.path.read_text(encoding="utf-8"))
        except (OSError, ValueError) as e:
            logger.error(f"❌ Failed to load reports from {self.path}: {e}")
            raise ReconError(f"Cannot read {self.path}", e)
        check_schema(document)
        reports = []
        for item in document.get("data", []):
            reports.append(VerifyReport(
                check_id=item["check_id"],
                n_range=tuple(item["n_range"]),
                params=item.get("params", {}),
                pairs_scanned=item.get("pairs_scanned", 0),
                max_observed=item.get("max_observed", 0),
                bound=item.get("bound", 0),
                passed=item.get("passed", True),
                witnesses=item.get("witnesses", []),
                wall_time=item.get("wall_time", 0.0),
                regime=item.get("regime", "alphabet"),
                note=item.get("note"),
                advisory=item.get("advisory", False),
            ))
        return reports
