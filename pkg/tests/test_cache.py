import struct
import threading

import pytest

from grassmod.cache import (
    KIND_ENUMERATION,
    KIND_INCIDENCE,
    MAGIC,
    CacheStore,
    decode,
    encode,
)
from grassmod.errors import ChecksumMismatch
from grassmod.exactcore import field_of_order
from grassmod.grassmann import grassmannian
from grassmod.incidence import SparseMatrix, eta_pattern


def test_encode_layout():
    data = encode(KIND_INCIDENCE, (2, 3, 1, 2, 1), 7, 7, [(0, 1), (3, 2)])
    assert data[:4] == MAGIC
    assert struct.unpack_from("<III", data, 4) == (1, KIND_INCIDENCE, 5)
    assert struct.unpack_from("<5I", data, 16) == (2, 3, 1, 2, 1)
    assert struct.unpack_from("<III", data, 36) == (7, 7, 2)
    assert struct.unpack_from("<4I", data, 48) == (0, 1, 3, 2)
    assert len(data) == 48 + 16 + 8
    entry = decode(data)
    assert entry.kind == KIND_INCIDENCE and entry.records == ((0, 1), (3, 2))


def test_decode_rejects_corruption():
    data = bytearray(encode(KIND_ENUMERATION, (2, 2, 1), 3, 2, [(0, 0, 1), (1, 1, 1)]))
    assert decode(bytes(data)).records == ((0, 0, 1), (1, 1, 1))
    bad = bytearray(data)
    bad[-12] ^= 0xFF
    with pytest.raises(ChecksumMismatch):
        decode(bytes(bad))
    with pytest.raises(ChecksumMismatch):
        decode(b"XXXX" + bytes(data[4:]))
    with pytest.raises(ChecksumMismatch):
        decode(bytes(data[:10]))


def test_incidence_round_trip(tmp_path):
    store = CacheStore(tmp_path)
    pat = eta_pattern(2, 4, 2, 2, 1)
    assert store.get_incidence((2, 4, 2, 2, 1)) is None
    store.put_incidence((2, 4, 2, 2, 1), pat)
    assert store.get_incidence((2, 4, 2, 2, 1)) == pat
    with pytest.raises(ValueError):
        store.put_incidence((1, 1, 1, 1, 1), SparseMatrix(1, 1, [(0, 0, 2)]))


def test_enumeration_round_trip(tmp_path):
    store = CacheStore(tmp_path)
    index = grassmannian(field_of_order(4), 3, 2)
    bases = [L.basis for L in index]
    store.put_enumeration((4, 3, 2), bases)
    assert store.get_enumeration((4, 3, 2)) == bases


def test_corrupted_file_is_a_miss(tmp_path):
    store = CacheStore(tmp_path)
    key = (2, 3, 1, 2, 1)
    store.put_incidence(key, eta_pattern(*key))
    path = store.incidence_path(key)
    raw = bytearray(path.read_bytes())
    raw[20] ^= 1
    path.write_bytes(bytes(raw))
    assert store.get_incidence(key) is None
    assert store.stat()["corrupt"] == 1


def test_key_mismatch_is_a_miss(tmp_path):
    store = CacheStore(tmp_path)
    store.put_incidence((2, 3, 1, 2, 1), eta_pattern(2, 3, 1, 2, 1))
    other = store.incidence_path((2, 3, 1, 2, 0))
    other.write_bytes(store.incidence_path((2, 3, 1, 2, 1)).read_bytes())
    assert store.get_incidence((2, 3, 1, 2, 0)) is None


def test_stat_and_gc(tmp_path):
    store = CacheStore(tmp_path)
    store.put_incidence((2, 3, 1, 2, 1), eta_pattern(2, 3, 1, 2, 1))
    store.put_enumeration((2, 2, 1), [L.basis for L in grassmannian(field_of_order(2), 2, 1)])
    (tmp_path / "incidence" / "junk.grsm").write_bytes(b"garbage")
    (tmp_path / "incidence" / "left.tmp").write_bytes(b"x")
    info = store.stat()
    assert (info["incidence"], info["enumeration"], info["corrupt"]) == (1, 1, 1)
    removed = store.gc()
    assert removed >= 2  # junk + tmp (+ lock files)
    info = store.stat()
    assert (info["incidence"], info["enumeration"], info["corrupt"]) == (1, 1, 0)
    store.gc(everything=True)
    assert store.files() == []


def test_concurrent_readers_never_see_torn_files(tmp_path):
    store = CacheStore(tmp_path)
    key = (2, 4, 1, 2, 1)
    old, new = eta_pattern(2, 4, 1, 2, 1), eta_pattern(2, 4, 1, 2, 0)
    store.put_incidence(key, old)
    stop = threading.Event()
    seen = []

    def reader():
        while not stop.is_set():
            got = store.get_incidence(key)
            seen.append(got == old or got == new)

    threads = [threading.Thread(target=reader) for _ in range(3)]
    for t in threads:
        t.start()
    for i in range(30):
        store.put_incidence(key, new if i % 2 == 0 else old)
    stop.set()
    for t in threads:
        t.join()
    assert seen and all(seen)
