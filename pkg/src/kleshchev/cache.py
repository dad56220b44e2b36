"""On-disk cache of canonical bases, keyed by a digest of everything they depend on.

Each entry is one file: a JSON header line carrying the key and the SHA-256
of the payload, then the payload bytes.  Loads verify both.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .canonical import CanonicalBasisElement, canonical_basis, install_basis
from .combinatorics import Multicharge, Multipartition
from .fock import FockVector
from .laurent import LaurentPoly


class CacheMiss(KeyError):
    pass


class CacheIntegrityError(RuntimeError):
    pass


@dataclass(frozen=True)
class CacheKey:
    engine: str
    e: int
    charge: tuple[int, ...]
    convention: str
    n: int

    @classmethod
    def for_basis(cls, charge: Multicharge, n: int, engine: str = __version__) -> "CacheKey":
        return cls(engine, charge.e, charge.gamma, charge.reading_direction, n)

    @property
    def digest(self) -> str:
        blob = json.dumps([self.engine, self.e, list(self.charge), self.convention, self.n])
        return hashlib.sha256(blob.encode()).hexdigest()


def _path(directory: str | os.PathLike, key: CacheKey) -> Path:
    return Path(directory) / f"{key.digest}.bin"


def cache_store(directory: str | os.PathLike, key: CacheKey, payload: bytes) -> bytes:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    header = json.dumps({"key": key.digest, "sha256": hashlib.sha256(payload).hexdigest()}).encode()
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(header + b"\n" + payload)
        os.replace(tmp, _path(directory, key))
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return payload


def cache_load(directory: str | os.PathLike, key: CacheKey) -> bytes:
    path = _path(directory, key)
    if not path.exists():
        raise CacheMiss(key.digest)
    raw = path.read_bytes()
    head, sep, payload = raw.partition(b"\n")
    try:
        meta = json.loads(head)
    except ValueError as exc:
        raise CacheIntegrityError(f"unreadable header in {path}") from exc
    if not sep or meta.get("key") != key.digest:
        raise CacheIntegrityError(f"key mismatch in {path}")
    if hashlib.sha256(payload).hexdigest() != meta.get("sha256"):
        raise CacheIntegrityError(f"payload digest mismatch in {path}")
    return payload


def encode_basis(elements) -> bytes:
    data = [
        {
            "label": el.label.to_json(),
            "trace": [list(t) for t in el.monomial_trace],
            "vector": [[mu.to_json(), p.to_pairs()] for mu, p in el.vector.sorted_terms()],
        }
        for el in elements
    ]
    return json.dumps(data, separators=(",", ":")).encode()


def decode_basis(charge: Multicharge, payload: bytes) -> tuple[CanonicalBasisElement, ...]:
    out = []
    for item in json.loads(payload):
        terms = {Multipartition(mu): LaurentPoly.from_pairs(p) for mu, p in item["vector"]}
        out.append(CanonicalBasisElement(
            Multipartition(item["label"]),
            FockVector(charge, terms),
            tuple(tuple(t) for t in item["trace"]),
        ))
    return tuple(out)


def cached_basis(charge: Multicharge, n: int, directory: str | os.PathLike | None) -> tuple[CanonicalBasisElement, ...]:
    """Read-through: load bases 0..n from the cache, computing and storing misses."""
    if directory is None:
        return canonical_basis(charge, n)
    for k in range(n + 1):
        key = CacheKey.for_basis(charge, k)
        try:
            install_basis(charge, k, decode_basis(charge, cache_load(directory, key)))
        except CacheMiss:
            cache_store(directory, key, encode_basis(canonical_basis(charge, k)))
    return canonical_basis(charge, n)
