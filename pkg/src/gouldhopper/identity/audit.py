"""Grid audits: sweep the identity catalog over parameter grids.

Every (tag, parameter-cell) pair is an independent, pure check.  The
driver expands tags into cells, runs them (optionally across worker
processes), and returns reports in a canonical order so identical
invocations produce identical documents.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..exactalg import Poly
from .checks import CHECKS, run_check
from .tags import MISPRINT_LEDGER, IdentityTag

STATUS_EXACT_PASS = "ExactPass"
STATUS_SERIES_PASS = "SeriesPass"
STATUS_FAIL = "Fail"

POLICIES = ("printed", "corrected", "both", "auto")

# rational evaluation points for the scalar hypergeometric transform
_HYP_POINTS = (Fraction(2), Fraction(1, 2), Fraction(-3))

# (a, b, z, w, g) parameter sets for the weighted generating series at
# rational specializations; a and b are deliberately non-integer
_WEIGHTED_POINTS = (
    (Fraction(1, 2), Fraction(1, 3), Fraction(2), Fraction(3), Fraction(5)),
    (Fraction(-3, 2), Fraction(5, 2), Fraction(1, 3), Fraction(-2), Fraction(-7, 5)),
    (Fraction(7, 4), Fraction(-1, 4), Fraction(-1, 2), Fraction(5, 7), Fraction(2, 3)),
)


@dataclass(frozen=True)
class GridRanges:
    """Parameter ranges swept by audit_grid.

    n_max / m_max bound the polynomial indices; pq_pairs lists the
    derivative orders; aux_max bounds the shifted indices n', m' and
    the fixed index of the single-variable generating functions;
    jk_max bounds derivative counts and series weights; series_order
    and weighted_series_order truncate the generating-function checks.
    """

    n_max: int = 6
    m_max: int = 6
    pq_pairs: tuple[tuple[int, int], ...] = ((1, 1), (2, 1), (1, 2), (2, 2))
    aux_max: int = 3
    jk_max: int = 3
    series_order: int = 10
    weighted_series_order: int = 8
    hyp_points: tuple[Fraction, ...] = _HYP_POINTS
    weighted_points: tuple[tuple[Fraction, ...], ...] = _WEIGHTED_POINTS

    def __post_init__(self) -> None:
        for name in ("n_max", "m_max", "aux_max", "jk_max"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")
        if not self.pq_pairs:
            raise ValueError("pq_pairs must be nonempty")
        for pair in self.pq_pairs:
            p, q = pair
            if not (isinstance(p, int) and isinstance(q, int)) or p < 0 or q < 0 or p + q < 1:
                raise ValueError(f"invalid derivative orders {pair!r}")
        top = max(p + q for p, q in self.pq_pairs)
        for name in ("series_order", "weighted_series_order"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < top:
                raise ValueError(
                    f"{name} must be an integer >= {top} for these derivative orders"
                )


@dataclass
class IdentityReport:
    """Outcome of one identity check on one parameter cell."""

    tag: IdentityTag
    params: dict
    variant: str  # "printed" or "corrected: <description>"
    status: str
    difference: Poly
    series_order: int | None = None
    notes: str = ""
    known_misprint: bool = False  # printed Fail excused by a passing corrected run

    @property
    def passed(self) -> bool:
        return self.status != STATUS_FAIL

    @property
    def effective_fail(self) -> bool:
        return self.status == STATUS_FAIL and not self.known_misprint

    def params_json(self) -> dict:
        return {key: _scalar_json(value) for key, value in self.params.items()}

    def sort_key(self) -> tuple:
        return (
            self.tag.value,
            json.dumps(self.params_json(), sort_keys=True),
            0 if self.variant == "printed" else 1,
        )

    def to_json_obj(self) -> dict:
        return {
            "tag": self.tag.value,
            "params": self.params_json(),
            "variant": self.variant,
            "status": self.status,
            "series_order": self.series_order,
            "difference": self.difference.to_json_obj(),
            "notes": self.notes,
            "known_misprint": self.known_misprint,
        }


def _scalar_json(value):
    if isinstance(value, bool):
        raise TypeError("boolean parameter values are not supported")
    if isinstance(value, int):
        return value
    return str(Fraction(value))


def corrected_variant_label(tag: IdentityTag) -> str:
    if tag not in MISPRINT_LEDGER:
        raise ValueError(f"{tag.value} has no documented corrected variant")
    return f"corrected: {MISPRINT_LEDGER[tag]}"


def run_cell(tag: IdentityTag, params: Mapping, policy: str = "auto") -> list[IdentityReport]:
    """Run one parameter cell under the given variant policy.

    auto: printed first; on failure of a ledger tag, the corrected
    variant is run too and a corrected pass excuses the printed Fail.
    printed / corrected: that single variant.  both: printed plus (for
    ledger tags) corrected, with the same excusal rule as auto.
    """
    if policy not in POLICIES:
        raise ValueError(f"unknown variant policy {policy!r}")
    ledgered = tag in MISPRINT_LEDGER

    def one(variant: str) -> IdentityReport:
        result = run_check(tag, params, variant)
        if result.passed:
            status = STATUS_SERIES_PASS if result.series_order is not None else STATUS_EXACT_PASS
        else:
            status = STATUS_FAIL
        label = "printed" if variant == "printed" else corrected_variant_label(tag)
        notes = result.notes
        if variant == "corrected":
            extra = MISPRINT_LEDGER[tag]
            notes = f"{notes}; {extra}" if notes else extra
        return IdentityReport(
            tag=tag,
            params=dict(params),
            variant=label,
            status=status,
            difference=result.difference,
            series_order=result.series_order,
            notes=notes,
        )

    if policy == "printed":
        return [one("printed")]
    if policy == "corrected":
        return [one("corrected" if ledgered else "printed")]

    reports = [one("printed")]
    wants_corrected = ledgered and (policy == "both" or not reports[0].passed)
    if wants_corrected:
        corrected = one("corrected")
        reports.append(corrected)
        if not reports[0].passed and corrected.passed:
            reports[0].known_misprint = True
            reports[0].notes = _join_notes(
                reports[0].notes, f"known misprint; {MISPRINT_LEDGER[tag]}"
            )
    return reports


def _join_notes(first: str, second: str) -> str:
    return f"{first}; {second}" if first else second


def cells_for(tag: IdentityTag, ranges: GridRanges) -> list[dict]:
    """Expand one tag into its full list of parameter cells."""
    nm = [
        (n, m)
        for n in range(ranges.n_max + 1)
        for m in range(ranges.m_max + 1)
    ]
    pq = list(ranges.pq_pairs)
    cells: list[dict] = []

    if tag is IdentityTag.HYP_2F0_1F1:
        for n, m in nm:
            for point in ranges.hyp_points:
                cells.append({"n": n, "m": m, "z": point})
    elif tag is IdentityTag.MULT_GH:
        orders = sorted({x for pair in pq for x in pair if x >= 1})
        for p in orders:
            for n in range(ranges.n_max + 1):
                cells.append({"p": p, "n": n})
    elif tag is IdentityTag.CONN_ITO:
        for n in range(ranges.n_max + 1):
            cells.append({"n": n})
    elif tag in (IdentityTag.CONN_GH_FROM_PQ, IdentityTag.CONN_GH_SUM):
        for p, q in pq:
            if tag is IdentityTag.CONN_GH_FROM_PQ and (p < 1 or p < q):
                continue
            for n in range(ranges.n_max + 1):
                cells.append({"p": p, "q": q, "n": n})
    elif tag is IdentityTag.DERIV_JK:
        for p, q in pq:
            for n, m in nm:
                for j in range(ranges.jk_max + 1):
                    for k in range(ranges.jk_max + 1):
                        cells.append({"p": p, "q": q, "n": n, "m": m, "j": j, "k": k})
    elif tag is IdentityTag.DERIV_GAMMA_K:
        for p, q in pq:
            for n, m in nm:
                for k in range(ranges.jk_max + 1):
                    cells.append({"p": p, "q": q, "n": n, "m": m, "k": k})
    elif tag is IdentityTag.NIELSEN_N:
        for p, q in pq:
            for n, m in nm:
                for np_ in range(ranges.aux_max + 1):
                    cells.append({"p": p, "q": q, "n": n, "np": np_, "m": m})
    elif tag is IdentityTag.NIELSEN_M:
        for p, q in pq:
            for n, m in nm:
                for mp_ in range(ranges.aux_max + 1):
                    cells.append({"p": p, "q": q, "n": n, "m": m, "mp": mp_})
    elif tag is IdentityTag.NIELSEN_FULL:
        for p, q in pq:
            for n, m in nm:
                for np_ in range(ranges.aux_max + 1):
                    for mp_ in range(ranges.aux_max + 1):
                        cells.append(
                            {"p": p, "q": q, "n": n, "np": np_, "m": m, "mp": mp_}
                        )
    elif tag is IdentityTag.GEN_FULL:
        for p, q in pq:
            cells.append({"p": p, "q": q, "order": ranges.series_order})
    elif tag is IdentityTag.GEN_PARTIAL_U:
        for p, q in pq:
            if q < 1:
                continue
            for m in range(ranges.aux_max + 1):
                cells.append({"p": p, "q": q, "m": m, "order": ranges.series_order})
    elif tag is IdentityTag.GEN_PARTIAL_V:
        for p, q in pq:
            if p < 1:
                continue
            for n in range(ranges.aux_max + 1):
                cells.append({"p": p, "q": q, "n": n, "order": ranges.series_order})
    elif tag is IdentityTag.GEN_POCHHAMMER_G:
        for p, q in pq:
            for j in range(1, ranges.jk_max + 1):
                for k in range(1, ranges.jk_max + 1):
                    cells.append(
                        {"p": p, "q": q, "j": j, "k": k, "order": ranges.series_order}
                    )
    elif tag is IdentityTag.GEN_POCHHAMMER_S:
        for p, q in pq:
            if p < 1 or q < 1:
                continue
            for a, b, z, w, g in ranges.weighted_points:
                cells.append(
                    {
                        "p": p,
                        "q": q,
                        "a": a,
                        "b": b,
                        "z": z,
                        "w": w,
                        "g": g,
                        "order": ranges.weighted_series_order,
                    }
                )
    else:
        needs_pq_positive = tag in (
            IdentityTag.PDE_PRODUCT,
            IdentityTag.CONN_PQ_FROM_GH,
        )
        for p, q in pq:
            if needs_pq_positive and (p < 1 or q < 1):
                continue
            for n, m in nm:
                cells.append({"p": p, "q": q, "n": n, "m": m})
    return cells


def _run_chunk(work: tuple) -> list[IdentityReport]:
    tag_name, cells, policy = work
    tag = IdentityTag(tag_name)
    reports: list[IdentityReport] = []
    for params in cells:
        reports.extend(run_cell(tag, params, policy))
    return reports


def audit_grid(
    tags: Iterable[IdentityTag] | None = None,
    ranges: GridRanges | None = None,
    policy: str = "auto",
    jobs: int = 1,
) -> list[IdentityReport]:
    """Run the selected tags over the grid; reports in canonical order."""
    if ranges is None:
        ranges = GridRanges()
    if policy not in POLICIES:
        raise ValueError(f"unknown variant policy {policy!r}")
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    selected = sorted(
        set(tags) if tags is not None else set(CHECKS), key=lambda t: t.value
    )
    work: list[tuple] = []
    for tag in selected:
        cells = cells_for(tag, ranges)
        # one work item per tag keeps worker payloads coarse; the big
        # grids are split so no single chunk dominates the runtime
        if not cells:
            continue
        step = max(1, len(cells) // max(jobs, 1) // 2) if jobs > 1 else len(cells)
        for start in range(0, len(cells), step):
            work.append((tag.value, cells[start : start + step], policy))

    reports: list[IdentityReport] = []
    if jobs == 1 or len(work) <= 1:
        for item in work:
            reports.extend(_run_chunk(item))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_run_chunk, work):
                reports.extend(chunk)
    reports.sort(key=IdentityReport.sort_key)
    return reports


def summarize(reports: Sequence[IdentityReport]) -> dict:
    """Counts per status plus per-tag breakdown, JSON-ready."""
    summary = {
        "total": len(reports),
        "exact_pass": 0,
        "series_pass": 0,
        "fail": 0,
        "known_misprints": 0,
        "effective_fail": 0,
        "by_tag": {},
    }
    for report in reports:
        bucket = summary["by_tag"].setdefault(
            report.tag.value,
            {"exact_pass": 0, "series_pass": 0, "fail": 0, "known_misprints": 0},
        )
        if report.status == STATUS_EXACT_PASS:
            summary["exact_pass"] += 1
            bucket["exact_pass"] += 1
        elif report.status == STATUS_SERIES_PASS:
            summary["series_pass"] += 1
            bucket["series_pass"] += 1
        else:
            summary["fail"] += 1
            bucket["fail"] += 1
            if report.known_misprint:
                summary["known_misprints"] += 1
                bucket["known_misprints"] += 1
            if report.effective_fail:
                summary["effective_fail"] += 1
    summary["by_tag"] = dict(sorted(summary["by_tag"].items()))
    return summary


def effective_failures(reports: Sequence[IdentityReport]) -> list[IdentityReport]:
    return [report for report in reports if report.effective_fail]
