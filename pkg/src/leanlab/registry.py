"""News-domain bias registry: load, normalize, and query domain leanings.

The registry is a CSV snapshot (``domain,rating`` header) of news outlets
and their crowd-sourced political ratings.  Ratings ``far-left`` and
``far-right`` are merged into ``left`` / ``right`` on load.  The loaded
registry is immutable and safe for concurrent reads.
"""

from __future__ import annotations

import csv
import enum
import re
from dataclasses import dataclass, field
from pathlib import Path
from urllib.parse import urlsplit

from .errors import RegistryError


class Leaning(enum.IntEnum):
    """Three-way political leaning with fixed numeric codes."""

    LEFT = -1
    CENTER = 0
    RIGHT = 1

    @classmethod
    def from_string(cls, raw: str) -> "Leaning":
        key = raw.strip().lower()
        try:
            return _RATING_MAP[key]
        except KeyError:
            raise ValueError(f"unknown leaning string: {raw!r}") from None

    def __str__(self) -> str:  # json/csv friendly
        return self.name.lower()


# far-left / far-right merge into the adjacent class
_RATING_MAP = {
    "far-left": Leaning.LEFT,
    "left": Leaning.LEFT,
    "center": Leaning.CENTER,
    "right": Leaning.RIGHT,
    "far-right": Leaning.RIGHT,
}

# fixed class order used everywhere downstream (ties break toward LEFT)
CLASS_ORDER = (Leaning.LEFT, Leaning.CENTER, Leaning.RIGHT)


@dataclass(frozen=True)
class NewsDomainRecord:
    domain: str
    leaning: Leaning
    raw_rating: str


_HOST_RE = re.compile(r"^[a-z0-9]([a-z0-9-]*[a-z0-9])?(\.[a-z0-9]([a-z0-9-]*[a-z0-9])?)+$")


def normalize_domain(raw: str) -> str:
    """Reduce a URL or hostname to a normalized registrable domain.

    Drops scheme, path, query, port, and any leading ``www.`` labels;
    lowercases the rest.  Subdomains other than ``www`` are preserved.
    Raises ValueError when no host component can be found.
    """
    if not raw or not raw.strip():
        raise ValueError("empty domain input")
    text = raw.strip()
    if "://" in text:
        host = urlsplit(text).netloc
    else:
        # bare hostname, possibly with path/port attached
        host = urlsplit("//" + text).netloc
    host = host.lower()
    if "@" in host:  # userinfo
        host = host.rsplit("@", 1)[1]
    host = host.split(":", 1)[0]
    host = host.strip(".")
    while host.startswith("www."):
        host = host[4:]
    if not host or not _HOST_RE.match(host):
        raise ValueError(f"no host component in {raw!r}")
    return host


def registrable_apex(domain: str) -> str:
    """Last two labels of a normalized domain (``edition.cnn.com`` -> ``cnn.com``)."""
    labels = domain.split(".")
    return ".".join(labels[-2:])


@dataclass
class BiasRegistry:
    """Immutable mapping of normalized news domains to their leaning."""

    records: dict[str, NewsDomainRecord] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.records)

    @property
    def counts(self) -> dict[Leaning, int]:
        out = {leaning: 0 for leaning in CLASS_ORDER}
        for rec in self.records.values():
            out[rec.leaning] += 1
        return out

    def lookup(self, domain: str) -> Leaning | None:
        """Leaning for an already-normalized domain, or None when unknown.

        Misses fall back to a second lookup on the registrable apex, so
        ``edition.cnn.com`` matches a stored ``cnn.com``.
        """
        rec = self.records.get(domain)
        if rec is None:
            rec = self.records.get(registrable_apex(domain))
        return rec.leaning if rec is not None else None

    def __contains__(self, domain: str) -> bool:
        return self.lookup(domain) is not None


def load_registry(path: str | Path) -> BiasRegistry:
    """Load a ``domain,rating`` CSV snapshot into a BiasRegistry.

    Each row yields one record; duplicate domains are a hard error (they
    signal snapshot corruption rather than a resolvable tie).
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"registry file not found: {path}")
    records: dict[str, NewsDomainRecord] = {}
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [c.strip().lower() for c in header[:2]] != ["domain", "rating"]:
            raise RegistryError(f"{path}: expected 'domain,rating' header, got {header!r}")
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) < 2:
                raise RegistryError(f"{path}:{lineno}: malformed row {row!r}")
            raw_domain, raw_rating = row[0].strip(), row[1].strip()
            try:
                domain = normalize_domain(raw_domain)
            except ValueError as exc:
                raise RegistryError(f"{path}:{lineno}: {exc}") from None
            try:
                leaning = Leaning.from_string(raw_rating)
            except ValueError:
                raise RegistryError(
                    f"{path}:{lineno}: unknown rating {raw_rating!r} for {domain}"
                ) from None
            if domain in records:
                raise RegistryError(f"{path}:{lineno}: duplicate domain {domain!r}")
            records[domain] = NewsDomainRecord(domain, leaning, raw_rating.lower())
    return BiasRegistry(records)


def default_snapshot_path() -> Path:
    """Path of the bias snapshot shipped with the package."""
    return Path(__file__).parent / "data" / "allsides_snapshot.csv"
