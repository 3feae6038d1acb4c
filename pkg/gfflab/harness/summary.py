"""Tables and plot-data CSVs from JSONL result files."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import pandas as pd

from .records import read_records
from .stats import loglog_slope

ESTIMATE_COLUMNS = [
    "experiment",
    "command",
    "N",
    "h",
    "mode",
    "event",
    "replicas",
    "successes",
    "estimate",
    "se",
    "ci_low",
    "ci_high",
    "oracle",
    "seed",
    "kappa",
    "details",
]
CLAIM_COLUMNS = [
    "experiment",
    "command",
    "event",
    "mode",
    "h",
    "N",
    "log_N",
    "estimate",
    "se",
    "normalized",
    "oracle",
    "z_oracle",
]
SLOPE_COLUMNS = [
    "experiment",
    "command",
    "event",
    "mode",
    "h",
    "points",
    "slope",
    "se",
    "ci_low",
    "ci_high",
    "intercept",
]
GROUP_KEYS = ["experiment", "command", "event", "mode", "h"]


@dataclass
class Summary:
    estimates: pd.DataFrame
    claims: pd.DataFrame
    slopes: pd.DataFrame
    warnings: list[str] = field(default_factory=list)


def estimates_frame(path: Path) -> pd.DataFrame:
    records = read_records(path)
    rows = []
    for record in records:
        row = record.model_dump(include=set(ESTIMATE_COLUMNS) - {"details"})
        row["details"] = json.dumps(record.details, sort_keys=True)
        rows.append(row)
    return pd.DataFrame(rows, columns=ESTIMATE_COLUMNS)


def claims_frame(estimates: pd.DataFrame) -> pd.DataFrame:
    """Per-N rows with p̂·sqrt(log N) and the oracle z-score where an oracle exists."""
    frame = estimates[estimates["N"].notna() & estimates["estimate"].notna()].copy()
    if frame.empty:
        return pd.DataFrame(columns=CLAIM_COLUMNS)
    frame["N"] = frame["N"].astype(int)
    frame["log_N"] = np.log(frame["N"].astype(float))
    frame["normalized"] = frame["estimate"] * np.sqrt(frame["log_N"])
    has_oracle = frame["oracle"].notna() & (frame["se"].fillna(0) > 0)
    frame["z_oracle"] = np.where(
        has_oracle,
        (frame["estimate"] - frame["oracle"]) / frame["se"].where(has_oracle, 1.0),
        np.nan,
    )
    frame = frame.sort_values(GROUP_KEYS + ["N"], na_position="first", kind="mergesort")
    return frame[CLAIM_COLUMNS].reset_index(drop=True)


def slopes_frame(claims: pd.DataFrame) -> pd.DataFrame:
    """Least-squares slope of log p̂ against log N for every series with two or more N."""
    rows = []
    if claims.empty:
        return pd.DataFrame(columns=SLOPE_COLUMNS)
    for keys, series in claims.groupby(GROUP_KEYS, dropna=False, sort=True):
        series = series[series["estimate"] > 0]
        if series["N"].nunique() < 2:
            continue
        fit = loglog_slope(series["N"].to_numpy(float), series["estimate"].to_numpy(float))
        row = dict(zip(GROUP_KEYS, keys))
        row.update(
            points=fit.points,
            slope=fit.slope,
            se=fit.se,
            ci_low=fit.ci_low if math.isfinite(fit.ci_low) else None,
            ci_high=fit.ci_high if math.isfinite(fit.ci_high) else None,
            intercept=fit.intercept,
        )
        rows.append(row)
    return pd.DataFrame(rows, columns=SLOPE_COLUMNS)


def summarize(records_path: Path, out_dir: Path) -> Summary:
    """Write estimates.csv, claims.csv and slopes.csv under ``out_dir``."""
    estimates = estimates_frame(records_path)
    warnings = []
    if estimates.empty:
        warnings.append(f"No records in {records_path}; writing empty tables")
    claims = claims_frame(estimates)
    slopes = slopes_frame(claims)

    out_dir.mkdir(parents=True, exist_ok=True)
    estimates.to_csv(out_dir / "estimates.csv", index=False)
    claims.to_csv(out_dir / "claims.csv", index=False)
    slopes.to_csv(out_dir / "slopes.csv", index=False)
    return Summary(estimates=estimates, claims=claims, slopes=slopes, warnings=warnings)
