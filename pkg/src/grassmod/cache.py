"""On-disk cache of incidence patterns and Grassmannian enumerations.

File layout (little-endian)::

    b"GRSM" | version u32 | kind u32 | nkey u32 | key u32 * nkey
    | rows u32 | cols u32 | count u32 | records | checksum u64

Incidence payloads (kind 1) store ``count`` records ``(row u32, col u32)``
whose value is implicitly 1. Enumeration payloads (kind 2) store
``(row u32, col u32, value u32)``: row = subspace index, col = position in the
flattened RREF basis, value = nonzero field element code. The checksum is the
8-byte BLAKE2b digest of everything before it. Writes go to a temporary file
in the same directory followed by an atomic rename, under a per-file lock.
"""

from __future__ import annotations

import hashlib
import os
import struct
import tempfile
from dataclasses import dataclass
from pathlib import Path

from filelock import FileLock

from .config import get_config
from .errors import ChecksumMismatch, IOFailure
from .incidence import SparseMatrix

MAGIC = b"GRSM"
FORMAT_VERSION = 1
KIND_INCIDENCE = 1
KIND_ENUMERATION = 2
SUFFIX = ".grsm"


@dataclass(frozen=True)
class CacheEntry:
    kind: int
    key: tuple[int, ...]
    nrows: int
    ncols: int
    records: tuple[tuple[int, ...], ...]
    checksum: int


def _checksum(body: bytes) -> int:
    return int.from_bytes(hashlib.blake2b(body, digest_size=8).digest(), "little")


def encode(kind: int, key: tuple[int, ...], nrows: int, ncols: int, records) -> bytes:
    width = 2 if kind == KIND_INCIDENCE else 3
    records = sorted(tuple(r) for r in records)
    if any(len(r) != width for r in records):
        raise ValueError(f"kind {kind} records need {width} fields")
    parts = [MAGIC, struct.pack("<III", FORMAT_VERSION, kind, len(key)),
             struct.pack(f"<{len(key)}I", *key),
             struct.pack("<III", nrows, ncols, len(records))]
    fmt = struct.Struct(f"<{width}I")
    parts.extend(fmt.pack(*r) for r in records)
    body = b"".join(parts)
    return body + struct.pack("<Q", _checksum(body))


def decode(data: bytes) -> CacheEntry:
    try:
        if data[:4] != MAGIC:
            raise ChecksumMismatch("bad magic")
        body, (stored,) = data[:-8], struct.unpack("<Q", data[-8:])
        if _checksum(body) != stored:
            raise ChecksumMismatch("checksum does not match payload")
        version, kind, nkey = struct.unpack_from("<III", data, 4)
        if version != FORMAT_VERSION or kind not in (KIND_INCIDENCE, KIND_ENUMERATION):
            raise ChecksumMismatch(f"unsupported version {version} / kind {kind}")
        off = 16
        key = struct.unpack_from(f"<{nkey}I", data, off)
        off += 4 * nkey
        nrows, ncols, count = struct.unpack_from("<III", data, off)
        off += 12
        width = 2 if kind == KIND_INCIDENCE else 3
        if off + 4 * width * count != len(body):
            raise ChecksumMismatch("truncated payload")
        fmt = struct.Struct(f"<{width}I")
        records = tuple(fmt.unpack_from(data, off + fmt.size * i) for i in range(count))
    except struct.error as exc:
        raise ChecksumMismatch(f"malformed cache file: {exc}") from None
    return CacheEntry(kind, tuple(key), nrows, ncols, records, stored)


class CacheStore:
    """Directory of GRSM files; a corrupted or unreadable file counts as a miss."""

    def __init__(self, root: str | os.PathLike | None = None):
        self.root = Path(root if root is not None else get_config().cache_dir)

    # paths ----------------------------------------------------------------------
    def incidence_path(self, key) -> Path:
        q, n, r0, r1, s = key
        return self.root / "incidence" / f"eta_q{q}_n{n}_r{r0}_{r1}_s{s}{SUFFIX}"

    def enumeration_path(self, key) -> Path:
        q, n, r = key
        return self.root / "enum" / f"gr_q{q}_n{n}_r{r}{SUFFIX}"

    # raw I/O ------------------------------------------------------------------
    def _read(self, path: Path, kind: int, key) -> CacheEntry | None:
        try:
            data = path.read_bytes()
        except FileNotFoundError:
            return None
        except OSError as exc:
            raise IOFailure(f"cannot read {path}: {exc}") from exc
        try:
            entry = decode(data)
        except ChecksumMismatch:
            return None
        if entry.kind != kind or entry.key != tuple(key):
            return None
        return entry

    def _write(self, path: Path, data: bytes) -> None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with FileLock(str(path) + ".lock"):
                fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
                try:
                    with os.fdopen(fd, "wb") as fh:
                        fh.write(data)
                        fh.flush()
                        os.fsync(fh.fileno())
                    os.replace(tmp, path)
                except BaseException:
                    if os.path.exists(tmp):
                        os.unlink(tmp)
                    raise
        except OSError as exc:
            raise IOFailure(f"cannot write {path}: {exc}") from exc

    # incidence ------------------------------------------------------------------
    def put_incidence(self, key, pattern: SparseMatrix) -> None:
        if any(v != 1 for _, _, v in pattern.entries):
            raise ValueError("incidence payloads are 0/1 patterns")
        data = encode(KIND_INCIDENCE, tuple(key), pattern.nrows, pattern.ncols,
                      ((i, j) for i, j, _ in pattern.entries))
        self._write(self.incidence_path(key), data)

    def get_incidence(self, key) -> SparseMatrix | None:
        entry = self._read(self.incidence_path(key), KIND_INCIDENCE, key)
        if entry is None:
            return None
        return SparseMatrix.from_pattern(entry.nrows, entry.ncols, entry.records)

    # enumerations ---------------------------------------------------------------
    def put_enumeration(self, key, bases) -> None:
        """``bases``: sequence of RREF bases (tuples of rows of field codes)."""
        q, n, r = key
        records = [(i, a * n + b, x) for i, basis in enumerate(bases)
                   for a, row in enumerate(basis) for b, x in enumerate(row) if x]
        self._write(self.enumeration_path(key), encode(KIND_ENUMERATION, tuple(key), len(bases), r * n, records))

    def get_enumeration(self, key) -> list[tuple[tuple[int, ...], ...]] | None:
        entry = self._read(self.enumeration_path(key), KIND_ENUMERATION, key)
        if entry is None:
            return None
        q, n, r = key
        flat = [[0] * (r * n) for _ in range(entry.nrows)]
        for i, c, x in entry.records:
            flat[i][c] = x
        return [tuple(tuple(f[a * n:(a + 1) * n]) for a in range(r)) for f in flat]

    # maintenance ----------------------------------------------------------------
    def files(self) -> list[Path]:
        if not self.root.exists():
            return []
        return sorted(p for p in self.root.rglob("*") if p.is_file())

    def stat(self) -> dict:
        out = {"root": str(self.root), "incidence": 0, "enumeration": 0, "corrupt": 0, "bytes": 0}
        for p in self.files():
            if p.suffix != SUFFIX:
                continue
            out["bytes"] += p.stat().st_size
            try:
                entry = decode(p.read_bytes())
            except ChecksumMismatch:
                out["corrupt"] += 1
                continue
            out["incidence" if entry.kind == KIND_INCIDENCE else "enumeration"] += 1
        return out

    def gc(self, everything: bool = False) -> int:
        """Delete corrupt entries, leftover temp/lock files, or (``everything``) the whole cache."""
        removed = 0
        for p in self.files():
            drop = everything or p.suffix in (".tmp", ".lock")
            if not drop and p.suffix == SUFFIX:
                try:
                    decode(p.read_bytes())
                except ChecksumMismatch:
                    drop = True
            if drop:
                try:
                    p.unlink()
                    removed += 1
                except FileNotFoundError:
                    pass
                except OSError as exc:
                    raise IOFailure(f"cannot remove {p}: {exc}") from exc
        return removed
