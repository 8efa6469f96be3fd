"""Family and report files."""

from .family_file import FamilyFile, FamilyMetadata
from .report_file import ReportFile

__all__ = ["FamilyFile", "FamilyMetadata", "ReportFile"]
