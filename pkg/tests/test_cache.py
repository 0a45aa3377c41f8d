import json
import multiprocessing

import pytest

from logdiv.cache import ResultCache, cache_key, default_cache_dir


def test_key_is_canonical():
    assert cache_key({"a": 1, "b": [1, 2]}) == cache_key({"b": [1, 2], "a": 1})
    assert cache_key({"a": 1}) != cache_key({"a": 2})


def test_store_and_lookup(tmp_path):
    c = ResultCache(tmp_path)
    assert c.lookup({"k": 1}) is None
    path = c.store({"k": 1}, {"v": [1, 2]})
    assert path.exists()
    assert c.lookup({"k": 1}) == {"v": [1, 2]}


def test_corrupt_entry_warns_and_is_ignored(tmp_path):
    c = ResultCache(tmp_path)
    path = c.store({"k": 1}, 5)
    path.write_text("{not json")
    with pytest.warns(UserWarning, match="corrupt cache entry"):
        assert c.lookup({"k": 1}) is None
    c.store({"k": 1}, 6)
    assert c.lookup({"k": 1}) == 6


def test_mismatched_key_is_rejected(tmp_path):
    c = ResultCache(tmp_path)
    path = c.store({"k": 1}, 5)
    path.write_text(json.dumps({"key": {"k": 2}, "value": 5}))
    with pytest.warns(UserWarning):
        assert c.lookup({"k": 1}) is None


def test_env_var(monkeypatch, tmp_path):
    monkeypatch.setenv("LOGDIV_CACHE_DIR", str(tmp_path))
    assert default_cache_dir() == tmp_path
    assert ResultCache().directory == tmp_path


def _writer(directory, i):
    c = ResultCache(directory)
    for k in range(20):
        c.store({"k": k}, {"k": k, "double": 2 * k})


def test_concurrent_writers(tmp_path):
    procs = [multiprocessing.Process(target=_writer, args=(str(tmp_path), i)) for i in range(4)]
    for p in procs:
        p.start()
    for p in procs:
        p.join()
    c = ResultCache(tmp_path)
    for k in range(20):
        assert c.lookup({"k": k}) == {"k": k, "double": 2 * k}
