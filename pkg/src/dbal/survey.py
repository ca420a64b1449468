"""Batch surveys over generalized Petersen graphs, and result serialization.

Grid scans fan out per ``(n, k)`` over a process pool when ``workers > 1``;
results are always gathered in ``(n, k)`` order, so output bytes do not depend
on the worker count.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, TypeVar

from .balance import BalanceProfile, PairBalance, gp_balance_profile, gp_distance_rows
from .errors import BadRange, FormatError
from .generators import GPParams

T = TypeVar("T")
R = TypeVar("R")

THREADS_ENV = "DBAL_THREADS"


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _map(fn: Callable[[T], R], items: Sequence[T], workers: int | None) -> list[R]:
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def gp_grid(n_min: int, n_max: int) -> list[tuple[int, int]]:
    """All ``(n, k)`` with ``n_min <= n <= n_max`` and ``2 <= k < n/2``."""
    return [(n, k) for n in range(n_min, n_max + 1) for k in range(2, (n + 1) // 2)]


# -- table of GP(n, k) profiles ---------------------------------------------


@dataclass(frozen=True)
class GPSurveyRow:
    n: int
    k: int
    diameter: int
    levels: tuple[int, ...]


def _row(nk: tuple[int, int]) -> GPSurveyRow:
    prof = gp_balance_profile(nk)
    return GPSurveyRow(nk[0], nk[1], prof.diameter, prof.levels)


def run_gp_table(n_min: int, n_max: int, workers: int | None = None) -> list[GPSurveyRow]:
    if not 5 <= n_min <= n_max:
        raise BadRange(f"need 5 <= n_min <= n_max, got {n_min}, {n_max}")
    return _map(_row, gp_grid(n_min, n_max), workers)


def scan_highly_db_gp(n_max: int, workers: int | None = None) -> list[tuple[int, int]]:
    """Pairs ``(n, k)`` with ``k >= 2`` for which GP(n, k) is balanced at every level."""
    if n_max < 5:
        raise BadRange("n_max must be >= 5")
    rows = run_gp_table(5, n_max, workers)
    return [(r.n, r.k) for r in rows if r.levels == tuple(range(1, r.diameter + 1))]


# -- diametral mixed pairs --------------------------------------------------


@dataclass(frozen=True)
class DiametralPairReport:
    n: int
    k: int
    diameter: int
    js: tuple[int, ...]  # j with d(u_0, v_j) = diameter
    conjecture_match: bool


def diametral_exception(n: int, k: int) -> bool:
    """True for the ``(n, k)`` allowed to have an inner vertex at diametral distance from u_0."""
    if (n, k) in ((5, 2), (7, 2), (7, 3)):
        return True
    return n % 4 == 0 and n // 4 >= 3 and k == n // 2 - 1


def _diametral(nk: tuple[int, int]) -> DiametralPairReport:
    n, k = nk
    du, dv = gp_distance_rows(GPParams(n, k))
    diam = int(max(du.max(), dv.max()))
    js = tuple(j for j in range(n) if du[n + j] == diam)
    return DiametralPairReport(n, k, diam, js, not js or diametral_exception(n, k))


def scan_diametral(n_max: int, include_empty: bool = True,
                   workers: int | None = None) -> list[DiametralPairReport]:
    if n_max < 5:
        raise BadRange("n_max must be >= 5")
    reports = _map(_diametral, gp_grid(5, n_max), workers)
    if not include_empty:
        reports = [r for r in reports if r.js]
    return reports


# -- thresholds n_k ---------------------------------------------------------


@dataclass(frozen=True)
class ThresholdReport:
    k: int
    predicted: int
    n_min: int
    n_max: int
    observed: int | None  # largest scanned n whose profile is not exactly {D}
    window_consistent: bool


def predicted_threshold(k: int) -> int:
    """Conjectured least ``n_k`` beyond which GP(n, k) is balanced only at its diameter."""
    if k < 2:
        raise BadRange("k must be >= 2")
    if k == 2:
        return 11
    if k % 2:
        return (k + 1) ** 2
    return k * (k + 2)


def _only_diameter(nk: tuple[int, int]) -> bool:
    prof = gp_balance_profile(nk)
    return prof.levels == (prof.diameter,)


def scan_threshold(k: int, n_max: int, workers: int | None = None) -> ThresholdReport:
    predicted = predicted_threshold(k)
    if n_max <= predicted:
        raise BadRange(f"n_max must exceed the predicted threshold {predicted}")
    ns = list(range(2 * k + 1, n_max + 1))
    flags = _map(_only_diameter, [(n, k) for n in ns], workers)
    off = [n for n, ok in zip(ns, flags) if not ok]
    observed = off[-1] if off else None
    return ThresholdReport(k, predicted, ns[0], n_max, observed, observed == predicted)


# -- serialization ----------------------------------------------------------

CSV_HEADER = ["n", "k", "diameter", "levels"]


def _levels_str(levels: Iterable[int]) -> str:
    return ";".join(str(l) for l in levels)


def _levels_parse(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(";")) if text else ()


def rows_to_csv(rows: Iterable[GPSurveyRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.n, r.k, r.diameter, _levels_str(r.levels)])
    return buf.getvalue()


def rows_from_csv(text: str) -> list[GPSurveyRow]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != CSV_HEADER:
        raise FormatError(f"expected CSV header {CSV_HEADER}, got {header}")
    try:
        return [GPSurveyRow(int(n), int(k), int(d), _levels_parse(lv)) for n, k, d, lv in reader]
    except ValueError as exc:
        raise FormatError(f"bad CSV row: {exc}") from None


def rows_to_json(rows: Iterable[GPSurveyRow]) -> str:
    return json.dumps([
        {"n": r.n, "k": r.k, "diameter": r.diameter, "levels": list(r.levels)} for r in rows
    ])


def rows_from_json(text: str) -> list[GPSurveyRow]:
    return [GPSurveyRow(d["n"], d["k"], d["diameter"], tuple(d["levels"])) for d in json.loads(text)]


def profile_to_dict(prof: BalanceProfile, ddr: bool | None = None,
                    bipartite: bool | None = None) -> dict:
    out = {"n": prof.n, "diameter": prof.diameter, "levels": list(prof.levels)}
    if ddr is not None:
        out["ddr"] = ddr
    if bipartite is not None:
        out["bipartite"] = bipartite
    out["witnesses"] = [
        {"level": lvl, "u": pb.u, "v": pb.v, "closer_u": pb.closer_to_u, "closer_v": pb.closer_to_v}
        for lvl, pb in prof.witnesses.items()
    ]
    return out


def profile_from_dict(doc: dict) -> BalanceProfile:
    n = doc["n"]
    witnesses = {}
    for w in doc["witnesses"]:
        cu, cv = w["closer_u"], w["closer_v"]
        witnesses[w["level"]] = PairBalance(w["u"], w["v"], w["level"], cu, cv, n - cu - cv)
    return BalanceProfile(n, doc["diameter"], tuple(doc["levels"]), witnesses)


PROFILE_CSV_HEADER = ["n", "diameter", "levels", "ddr", "bipartite"]


def profile_to_csv(prof: BalanceProfile, ddr: bool, bipartite: bool) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(PROFILE_CSV_HEADER)
    w.writerow([prof.n, prof.diameter, _levels_str(prof.levels), int(ddr), int(bipartite)])
    return buf.getvalue()


def profile_from_csv(text: str) -> tuple[int, int, tuple[int, ...], bool, bool]:
    reader = csv.reader(io.StringIO(text))
    if next(reader, None) != PROFILE_CSV_HEADER:
        raise FormatError("bad profile CSV header")
    n, d, lv, ddr, bip = next(reader)
    return int(n), int(d), _levels_parse(lv), bool(int(ddr)), bool(int(bip))
