"""Size caps shared by every module, overridable from a key=value file."""
import logging
from dataclasses import dataclass, fields, replace

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Limits:
    # subsets are enumerated exhaustively up to this many generators
    scarf_max_generators: int = 20
    shelling_max_facets: int = 12
    homology_max_columns: int = 5000
    taylor_max_generators: int = 20
    buchberger_max_degree: int = 200


DEFAULT_LIMITS = Limits()
LIMITS = DEFAULT_LIMITS


def set_limits(limits):
    global LIMITS
    LIMITS = limits


def parse_config(text):
    """Parse ``key = value`` lines into a :class:`Limits`.

    Blank lines and ``#`` comments are ignored. Every override is logged as a
    warning since it changes the exactness envelope.
    """
    known = {f.name for f in fields(Limits)}
    updates = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in known:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
        try:
            updates[key] = int(value)
        except ValueError:
            raise ValueError(f"config line {lineno}: {key} needs an integer") from None
    for key, value in updates.items():
        log.warning("limit %s overridden: %s -> %s", key, getattr(DEFAULT_LIMITS, key), value)
    return replace(DEFAULT_LIMITS, **updates)
