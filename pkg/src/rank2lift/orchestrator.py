"""Command orchestration for the CLI.

Turns a parsed family file plus settings into library calls and assembles
the resulting :class:`~rank2lift.io.ReportFile` or output family:

1. choose the checks compatible with the family's field and kind
2. run them with the configured tolerance and search budget
3. collect verdicts, witnesses and details into one report
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .angular import (
    MubFamily,
    angle_spectrum_projections,
    angle_spectrum_vectors,
    mub_construct,
    transfer_kangular,
    transfer_mub,
    verify_mub,
)
from .config import Settings
from .errors import FamilyFileError, FieldMismatchError
from .frames import Frame, FusionFrame, harmonic_parseval, lift_fusion_to_fusion, tight_fusion_existence
from .io import FamilyFile, ReportFile
from .linalg import Tolerance, lift_subspace, rank2
from .models import CheckReport, Verdict
from .retrieval import (
    ProjectionFamily,
    SearchBudget,
    balanced_split_check,
    complement_pr_transfer,
    complement_property,
    complex_pr_check,
    complex_projection_pr_check,
    complement_transfer_check,
    edidin_check,
    full_spark,
    norm_retrieval_check,
)
from .utils.logger import get_logger

logger = get_logger(__name__)

CHECK_KINDS = ("pr", "nr", "complement", "fullspark", "mub", "angles", "transfer", "split")
GENERATE_KINDS = ("harmonic", "mub", "tightfusion")


@dataclass
class CheckRunner:
    """Runs one CLI command against a family file."""

    settings: Settings
    on_progress: Optional[Callable[[str, int, int], None]] = None
    _current_step: int = field(default=0, init=False)
    _total_steps: int = field(default=1, init=False)

    @property
    def tol(self) -> Tolerance:
        return self.settings.tolerance()

    @property
    def budget(self) -> SearchBudget:
        return SearchBudget(samples=self.settings.samples, restarts=self.settings.restarts, seed=self.settings.seed)

    def _start(self, total: int) -> None:
        self._current_step, self._total_steps = 0, total

    def _emit_progress(self, message: str) -> None:
        self._current_step += 1
        if self.on_progress:
            self.on_progress(message, self._current_step, self._total_steps)
        logger.info(f"[{self._current_step}/{self._total_steps}] {message}")

    def _report(self, command: str, checks: list[CheckReport], family: Optional[FamilyFile], started: float, **details) -> ReportFile:
        report = ReportFile.from_checks(
            command,
            checks,
            tolerances=self.tol,
            seed=self.settings.seed,
            input_digest=family.digest() if family is not None else None,
            details=details,
        )
        report.timing = {"elapsed_s": round(time.perf_counter() - started, 6)}
        logger.info(f"{command}: verdict {report.verdict}")
        return report

    def _real_family(self, family: FamilyFile) -> ProjectionFamily:
        if family.kind == "vectors":
            return ProjectionFamily.from_vectors(family.vectors(), self.tol)
        return ProjectionFamily(tuple(family.subspaces(self.tol)))

    # ------------------------------------------------------------------
    # check
    # ------------------------------------------------------------------

    def check(self, kind: str, family: FamilyFile) -> ReportFile:
        """Run ``check <kind>``; exit code 1 in the report means a certified failure."""
        if kind not in CHECK_KINDS:
            raise FamilyFileError(f"unknown check kind {kind!r}; expected one of {', '.join(CHECK_KINDS)}")
        started = time.perf_counter()
        handler = getattr(self, f"_check_{kind}")
        checks, details = handler(family)
        return self._report(f"check {kind}", checks, family, started, **details)

    def _check_pr(self, family: FamilyFile) -> tuple[list[CheckReport], dict]:
        self._start(2)
        details: dict = {}
        if family.is_complex:
            self._emit_progress("Searching for a deficient lifted span")
            if family.kind == "vectors":
                report = complex_pr_check(
                    family.vectors(),
                    tol=self.tol,
                    budget=self.budget,
                    spot_checks=self.settings.hyperplane_spot_checks,
                )
            else:
                report = complex_projection_pr_check(
                    family.subspaces(self.tol),
                    tol=self.tol,
                    budget=self.budget,
                    spot_checks=self.settings.hyperplane_spot_checks,
                )
            self._emit_progress("Spot checks finished")
            return [report], details

        self._emit_progress("Searching for a deficient span")
        report = edidin_check(self._real_family(family), tol=self.tol, budget=self.budget)
        self._emit_progress("Cross-checking")
        if family.kind == "vectors" and len(family.entries) <= self.settings.complement_max_vectors:
            oracle = complement_property(family.vectors(), tol=self.tol, max_vectors=self.settings.complement_max_vectors)
            details["complement_property"] = oracle.verdict.value
            if oracle.passed != report.passed:
                logger.warning("search verdict disagrees with the exhaustive complement property")
        return [report], details

    def _check_nr(self, family: FamilyFile) -> tuple[list[CheckReport], dict]:
        if family.is_complex:
            raise FieldMismatchError("norm retrieval is checked on real families; lift complex input first")
        self._start(1)
        self._emit_progress("Searching for x outside span{P_i x}")
        report = norm_retrieval_check(
            self._real_family(family),
            tol=self.tol,
            budget=self.budget,
            residual_tol=self.settings.nr_residual_tol,
        )
        return [report], {}

    def _check_complement(self, family: FamilyFile) -> tuple[list[CheckReport], dict]:
        self._start(1)
        self._emit_progress("Enumerating bipartitions")
        report = complement_property(
            family.vectors(),
            tol=self.tol,
            max_vectors=self.settings.complement_max_vectors,
        )
        return [report], {}

    def _check_fullspark(self, family: FamilyFile) -> tuple[list[CheckReport], dict]:
        self._start(1)
        self._emit_progress("Enumerating n-subsets")
        result = full_spark(family.vectors(), tol=self.tol, max_subsets=self.settings.full_spark_max_subsets)
        report = CheckReport(
            check="full_spark",
            verdict=Verdict.PASS_EXHAUSTIVE if result.full_spark else Verdict.CERTIFIED_FAIL,
            violating_subset=result.defective_subset,
            details={"subsets_checked": result.subsets_checked},
        )
        return [report], {}

    def _check_mub(self, family: FamilyFile) -> tuple[list[CheckReport], dict]:
        self._start(2)
        self._emit_progress("Verifying overlaps")
        bases = family.basis_arrays()
        verification = verify_mub(bases, self.tol)
        report = CheckReport(
            check="mub",
            verdict=Verdict.PASS_EXHAUSTIVE if verification.valid else Verdict.CERTIFIED_FAIL,
            residual=verification.max_deviation,
            details={
                "bases": len(bases),
                "gram_deviation": verification.gram_deviation,
                "overlap_deviation": verification.overlap_deviation,
            },
        )
        self._emit_progress("Transferring to rank 2 projections")
        if verification.valid and family.is_complex:
            transfer = transfer_mub(MubFamily(dim=family.dim, bases=tuple(bases)), self.tol)
            report.details.update(
                {
                    "transfer_within_max": transfer.within_max,
                    "transfer_cross_deviation": transfer.cross_max_deviation,
                    "transfer_cross_value": transfer.cross_value,
                }
            )
        return [report], {}

    def _check_angles(self, family: FamilyFile) -> tuple[list[CheckReport], dict]:
        self._start(1)
        self._emit_progress("Clustering pairwise values")
        spectrum = self._spectrum(family)
        report = CheckReport(check="angles", verdict=Verdict.PASS_EXHAUSTIVE, details=spectrum.to_dict())
        if spectrum.warnings:
            report.notes.extend(spectrum.warnings)
        return [report], {}

    def _check_transfer(self, family: FamilyFile) -> tuple[list[CheckReport], dict]:
        if family.is_complex:
            raise FieldMismatchError("the complement transfer is checked on real families")
        self._start(2)
        F = self._real_family(family)
        self._emit_progress("Solving coefficient systems")
        transfer = complement_transfer_check(F, samples=self.settings.samples, seed=self.settings.seed, tol=self.tol)
        self._emit_progress("Checking the complemented family")
        combined = complement_pr_transfer(F, samples=self.settings.samples, tol=self.tol, budget=self.budget)
        return [transfer.to_check_report(), combined], {}

    def _check_split(self, family: FamilyFile) -> tuple[list[CheckReport], dict]:
        self._start(1)
        self._emit_progress("Enumerating balanced splits")
        report = balanced_split_check(family.vectors(), tol=self.tol, max_subsets=self.settings.full_spark_max_subsets)
        return [report], {}

    # ------------------------------------------------------------------
    # angles
    # ------------------------------------------------------------------

    def _spectrum(self, family: FamilyFile):
        width = self.settings.cluster_width
        if family.kind == "vectors":
            return angle_spectrum_vectors(family.vectors(), width, self.tol)
        return angle_spectrum_projections(family.subspaces(self.tol), width)

    def angles(self, family: FamilyFile, *, transfer: bool = False) -> ReportFile:
        """Angle spectrum of a family; with ``transfer`` also of its lift."""
        started = time.perf_counter()
        if not transfer:
            checks, _ = self._check_angles(family)
            return self._report("angles", checks, family, started)

        if family.kind != "vectors" or not family.is_complex:
            raise FamilyFileError("angles --transfer needs a complex vector family")
        self._start(2)
        self._emit_progress("Lifting the frame")
        result = transfer_kangular(Frame.from_vectors(family.vectors(), self.tol), self.settings.cluster_width, self.tol)
        self._emit_progress("Comparing spectra")
        report = CheckReport(
            check="kangular_transfer",
            verdict=Verdict.PASS_EXHAUSTIVE if result.valid else Verdict.CERTIFIED_FAIL,
            residual=result.max_level_deviation,
            details={
                "vector_spectrum": result.vector_spectrum.to_dict(),
                "projection_spectrum": result.projection_spectrum.to_dict(),
                "fusion_bounds": list(result.fusion.bounds),
                "fusion_tight": result.fusion.flags.tight,
            },
        )
        return self._report("angles --transfer", [report], family, started)

    # ------------------------------------------------------------------
    # lift / generate
    # ------------------------------------------------------------------

    def lift(self, family: FamilyFile) -> FamilyFile:
        """Real lift of a complex family."""
        if not family.is_complex:
            raise FieldMismatchError("only complex families can be lifted")
        name = f"{family.metadata.name or 'family'}_lifted"

        if family.kind == "vectors":
            planes = [rank2(v, self.tol).subspace for v in family.vectors()]
            return FamilyFile.from_subspaces(planes, name=name, source_digest=family.digest())

        lifted = [lift_subspace(W, self.tol).real_lift for W in family.subspaces(self.tol)]
        if family.kind == "subspaces":
            return FamilyFile.from_subspaces(lifted, name=name, source_digest=family.digest())

        source = FusionFrame.from_subspaces(family.subspaces(self.tol), family.weights, self.tol)
        target = lift_fusion_to_fusion(source, self.tol)
        return FamilyFile.from_subspaces(
            target.subspaces,
            weights=target.weights,
            name=name,
            source_digest=family.digest(),
            input_bounds=list(source.bounds),
            output_bounds=list(target.bounds),
        )

    def generate(self, kind: str, *, m: Optional[int] = None, n: Optional[int] = None, p: Optional[int] = None) -> FamilyFile:
        """Build a verified family; the verification summary goes into metadata."""
        if kind == "harmonic":
            if m is None or n is None:
                raise FamilyFileError("generate harmonic needs -m and -n")
            frame = harmonic_parseval(m, n, self.tol)
            return FamilyFile.from_vectors(
                frame.vectors,
                name=f"harmonic_{m}_{n}",
                verification={"bounds": list(frame.bounds), **frame.flags.to_dict()},
            )
        if kind == "mub":
            if p is None:
                raise FamilyFileError("generate mub needs -p")
            mubs = mub_construct(p, max_prime=self.settings.mub_max_prime, tol=self.tol)
            check = verify_mub(mubs.bases, self.tol)
            return FamilyFile.from_subspaces(
                mubs.bases,
                name=f"mub_{p}",
                verification={"count": mubs.count, "max_deviation": check.max_deviation},
            )
        if kind == "tightfusion":
            if m is None or n is None:
                raise FamilyFileError("generate tightfusion needs -m and -n")
            fusion = tight_fusion_existence(m, n, self.tol)
            return FamilyFile.from_subspaces(
                fusion.subspaces,
                weights=fusion.weights,
                name=f"tightfusion_{m}_{n}",
                verification={"bounds": list(fusion.bounds), "tight": fusion.flags.tight},
            )
        raise FamilyFileError(f"unknown generator {kind!r}; expected one of {', '.join(GENERATE_KINDS)}")

