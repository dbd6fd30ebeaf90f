"""Census cache: one JSON document per (k, b).

The schema is frozen for interchange.  Keys, in order: k, b, N, N_tilde,
N1, N22, N3, M_table, e, N_sing, tool_version.  Every count is a decimal
string so arbitrary precision survives any JSON reader; k and b are
plain integers; M_table is a list of {j, i, count} rows sorted by
(j, i).  Writing is deterministic, so rewriting an unchanged census is
byte-identical.
"""

import json
import os
from pathlib import Path

from .covers import TupleCensus
from .degeneration import DegenerationCensus, full_census
from .errors import ParameterError
from .version import TOOL_VERSION

ENV_CACHE_DIR = "GG_CACHE_DIR"
DEFAULT_CACHE_DIR = "census-cache"

_SCHEMA_KEYS = (
    "k", "b", "N", "N_tilde", "N1", "N22", "N3", "M_table", "e", "N_sing",
    "tool_version",
)


def resolve_cache_dir(flag_value: str | os.PathLike | None = None) -> Path:
    """Cache directory, by precedence: explicit flag, then the
    GG_CACHE_DIR environment variable, then ./census-cache."""
    if flag_value:
        return Path(flag_value)
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return Path(env)
    return Path(DEFAULT_CACHE_DIR)


def census_path(cache_dir: os.PathLike | str, k: int, b: int) -> Path:
    return Path(cache_dir) / f"census_k{k}_b{b}.json"


def census_payload(counts: TupleCensus, census: DegenerationCensus) -> dict:
    """The frozen JSON document for one (k, b)."""
    if (counts.k, counts.b) != (census.k, census.b):
        raise ParameterError(
            f"count pack ({counts.k}, {counts.b}) does not match "
            f"census ({census.k}, {census.b})"
        )
    return {
        "k": census.k,
        "b": census.b,
        "N": str(counts.raw_count),
        "N_tilde": str(counts.class_count),
        "N1": str(census.type_one),
        "N22": str(census.type_two_two),
        "N3": str(census.type_three),
        "M_table": [
            {"j": j, "i": i, "count": str(n)}
            for (j, i), n in sorted(census.split_table.items())
        ],
        "e": str(census.rational_splits),
        "N_sing": str(census.singular),
        "tool_version": TOOL_VERSION,
    }


def write_census(
    cache_dir: os.PathLike | str, counts: TupleCensus, census: DegenerationCensus
) -> Path:
    path = census_path(cache_dir, census.k, census.b)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(census_payload(counts, census), indent=2) + "\n")
    return path


def read_census(
    cache_dir: os.PathLike | str, k: int, b: int
) -> tuple[TupleCensus, DegenerationCensus]:
    """Load and re-validate one cached census; every census invariant is
    checked again on the way in."""
    path = census_path(cache_dir, k, b)
    try:
        doc = json.loads(path.read_text())
    except FileNotFoundError:
        raise ParameterError(f"no cached census at {path}; run the census command first")
    except json.JSONDecodeError as exc:
        raise ParameterError(f"unreadable census document {path}: {exc}")
    if not isinstance(doc, dict) or set(doc) != set(_SCHEMA_KEYS):
        raise ParameterError(
            f"census document {path} does not match the schema; delete and recompute"
        )
    if (doc["k"], doc["b"]) != (k, b):
        raise ParameterError(
            f"census document {path} is for ({doc['k']}, {doc['b']}), expected ({k}, {b})"
        )
    g = (b - 2 * k + 2) // 2
    split_table = {
        (row["j"], row["i"]): int(row["count"]) for row in doc["M_table"]
    }
    census = DegenerationCensus(
        k=k,
        b=b,
        g=g,
        classes=int(doc["N_tilde"]),
        type_one=int(doc["N1"]),
        type_two_two=int(doc["N22"]),
        type_three=int(doc["N3"]),
        split_table=split_table,
        rational_splits=int(doc["e"]),
        singular=int(doc["N_sing"]),
    )
    counts = TupleCensus(k, b, int(doc["N"]), census.classes, "enumeration")
    return counts, census


def load_or_compute(
    cache_dir: os.PathLike | str, k: int, b: int, workers: int = 1
) -> tuple[TupleCensus, DegenerationCensus]:
    """Cached census when present, else compute and cache it."""
    if census_path(cache_dir, k, b).exists():
        return read_census(cache_dir, k, b)
    counts, census = full_census(k, b, workers)
    write_census(cache_dir, counts, census)
    return counts, census
