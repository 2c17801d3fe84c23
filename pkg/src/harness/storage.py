# src/harness/storage.py
"""CSV persistence for experiment records.

Columns are fixed: regime,param,n,p,trial,seed,algorithm,expansions,opt_size,capped.
Floats are written with 17 significant digits so they read back exactly;
``capped`` is ``true``/``false`` and ``opt_size`` is empty for capped rows.
"""

import csv
from pathlib import Path
from typing import Iterable, List

from pydantic import ValidationError

from ..core.errors import FormatError
from ..core.logger import get_logger
from ..core.schemas import ExperimentRecord

log = get_logger(__name__)

COLUMNS = ["regime", "param", "n", "p", "trial", "seed", "algorithm", "expansions", "opt_size", "capped"]


def _row(r: ExperimentRecord) -> List[str]:
    return [
        r.regime,
        format(r.param, ".17g"),
        str(r.n),
        format(r.p, ".17g"),
        str(r.trial),
        str(r.seed),
        r.algorithm,
        str(r.expansions),
        "" if r.opt_size is None else str(r.opt_size),
        "true" if r.capped else "false",
    ]


def write_csv(records: Iterable[ExperimentRecord], path: str | Path) -> int:
    """Write records with a header row; returns the number of rows written."""
    path = Path(path)
    count = 0
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(COLUMNS)
        for r in records:
            writer.writerow(_row(r))
            count += 1
    log.info(f"Wrote {count} records to {path}")
    return count


def _parse_row(values: List[str], line: int) -> ExperimentRecord:
    if len(values) != len(COLUMNS):
        raise FormatError(f"expected {len(COLUMNS)} fields, got {len(values)}", line)
    data = dict(zip(COLUMNS, values))
    capped = data["capped"].strip().lower()
    if capped not in ("true", "false"):
        raise FormatError(f"capped must be true or false, got {data['capped']!r}", line)
    try:
        return ExperimentRecord(
            regime=data["regime"],
            param=float(data["param"]),
            n=int(data["n"]),
            p=float(data["p"]),
            trial=int(data["trial"]),
            seed=int(data["seed"]),
            algorithm=data["algorithm"],
            expansions=int(data["expansions"]),
            opt_size=int(data["opt_size"]) if data["opt_size"] != "" else None,
            capped=capped == "true",
        )
    except (ValueError, ValidationError) as e:
        raise FormatError(f"bad record: {e}", line) from None


def read_csv(path: str | Path) -> List[ExperimentRecord]:
    path = Path(path)
    with open(path, encoding="utf-8", newline="") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header != COLUMNS:
            raise FormatError(f"header must be {','.join(COLUMNS)}", 1)
        records = []
        for values in reader:
            if not values:
                continue
            records.append(_parse_row(values, reader.line_num))
    log.debug(f"Read {len(records)} records from {path}")
    return records
