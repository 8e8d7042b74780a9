"""On-disk persistence for SequenceCache.

Plain text, one file per sequence inside a cache directory:

    u.txt, v.txt, d.txt   header 'ROMIKCACHE v1 seq=<name>', then lines
                          '<n> <decimal value>' for n = 0, 1, 2, ... with
                          no gaps,
    s.txt                 header 'ROMIKCACHE v1 seq=s', then lines
                          '<n> <k> <decimal value>' covering every pair
                          1 <= k <= n row by row.

Loading validates the header and the contiguity of indices; a malformed or
gapped file is rejected with the offending line number rather than being
silently truncated.
"""

from __future__ import annotations

import os

from .core import SequenceCache

MAGIC = "ROMIKCACHE"
VERSION = "v1"
SEQUENCE_FILES = {"u": "u.txt", "v": "v.txt", "d": "d.txt"}
S_TABLE_FILE = "s.txt"


class CacheFormatError(ValueError):
    """A cache file failed validation (bad header, gap, or unparsable line)."""

    def __init__(self, path: str, line_number: int, message: str) -> None:
        super().__init__(f"{path}:{line_number}: {message}")
        self.path = path
        self.line_number = line_number


class CacheVersionError(CacheFormatError):
    """The cache file declares a version other than the supported one."""


def write_sequence(path: str, name: str, values: list[int]) -> None:
    """Write one sequence file (values indexed from 0, no gaps by construction)."""
    with open(path, "w", encoding="ascii") as handle:
        handle.write(f"{MAGIC} {VERSION} seq={name}\n")
        for n, value in enumerate(values):
            handle.write(f"{n} {value}\n")


def read_sequence(path: str, name: str) -> list[int]:
    """Read one sequence file back, enforcing header, order and contiguity."""
    with open(path, "r", encoding="ascii") as handle:
        _check_header(path, handle.readline(), name)
        values: list[int] = []
        for line_number, line in enumerate(handle, start=2):
            fields = line.split()
            if len(fields) != 2:
                raise CacheFormatError(path, line_number, f"expected 'n value', got {line.rstrip()!r}")
            try:
                n, value = int(fields[0]), int(fields[1])
            except ValueError:
                raise CacheFormatError(path, line_number, f"non-integer field in {line.rstrip()!r}") from None
            if n != len(values):
                raise CacheFormatError(path, line_number, f"expected index {len(values)}, found {n} (gap or disorder)")
            values.append(value)
    if not values:
        raise CacheFormatError(path, 2, "file holds no values")
    return values


def write_s_table(path: str, rows: list[list[int]]) -> None:
    """Write the triangular s-table (rows[n-1] holds s(n, 1..n))."""
    with open(path, "w", encoding="ascii") as handle:
        handle.write(f"{MAGIC} {VERSION} seq=s\n")
        for n, row in enumerate(rows, start=1):
            for k, value in enumerate(row, start=1):
                handle.write(f"{n} {k} {value}\n")


def read_s_table(path: str) -> list[list[int]]:
    """Read the triangular s-table back, enforcing complete triangle coverage."""
    with open(path, "r", encoding="ascii") as handle:
        _check_header(path, handle.readline(), "s")
        rows: list[list[int]] = []
        expect_n, expect_k = 1, 1
        for line_number, line in enumerate(handle, start=2):
            fields = line.split()
            if len(fields) != 3:
                raise CacheFormatError(path, line_number, f"expected 'n k value', got {line.rstrip()!r}")
            try:
                n, k, value = (int(f) for f in fields)
            except ValueError:
                raise CacheFormatError(path, line_number, f"non-integer field in {line.rstrip()!r}") from None
            if (n, k) != (expect_n, expect_k):
                raise CacheFormatError(
                    path, line_number,
                    f"expected entry ({expect_n},{expect_k}), found ({n},{k}) (gap or disorder)",
                )
            if k == 1:
                rows.append([])
            rows[-1].append(value)
            if expect_k == expect_n:
                expect_n, expect_k = expect_n + 1, 1
            else:
                expect_k += 1
        if expect_k != 1:
            raise CacheFormatError(path, line_number + 1, f"row {expect_n} stops before k={expect_n}")
    return rows


def _check_header(path: str, line: str, name: str) -> None:
    fields = line.split()
    if len(fields) != 3 or fields[0] != MAGIC or not fields[2].startswith("seq="):
        raise CacheFormatError(path, 1, f"not a {MAGIC} file (header {line.rstrip()!r})")
    if fields[1] != VERSION:
        raise CacheVersionError(path, 1, f"unsupported version {fields[1]!r} (supported: {VERSION})")
    found = fields[2][len("seq="):]
    if found != name:
        raise CacheFormatError(path, 1, f"expected seq={name}, found seq={found}")


def store_cache(directory: str, cache: SequenceCache) -> None:
    """Write every cached sequence (and the s-table, if built) into directory."""
    os.makedirs(directory, exist_ok=True)
    for name, filename in SEQUENCE_FILES.items():
        write_sequence(os.path.join(directory, filename), name, cache.known_values(name))
    if cache.s_bound:
        write_s_table(os.path.join(directory, S_TABLE_FILE), cache.known_s_rows())


def load_cache(directory: str) -> SequenceCache:
    """Load whichever cache files exist in directory into a fresh cache.

    Missing files leave that sequence at its seed; present files must be
    valid.  Round trip with store_cache reproduces identical values.
    """
    kwargs: dict = {}
    for name, filename in SEQUENCE_FILES.items():
        path = os.path.join(directory, filename)
        if os.path.exists(path):
            kwargs[name] = read_sequence(path, name)
    s_path = os.path.join(directory, S_TABLE_FILE)
    if os.path.exists(s_path):
        kwargs["s_rows"] = read_s_table(s_path)
    return SequenceCache.from_values(**kwargs)
