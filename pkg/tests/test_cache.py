import json
import os

import pytest

from tfmzv.cache import CACHE_ENV, CACHE_FILE, CacheError, EvalCache, RecordingDict, cache_dir_from, format_record
from tfmzv.fp import PrimeCtx, fmzv_t_eval


def test_round_trip(tmp_path):
    cache = EvalCache.open(tmp_path)
    ctx = PrimeCtx(5, RecordingDict())
    poly = fmzv_t_eval(ctx, (1, 2))
    assert cache.append(((5, k), c) for k, c in ctx.tcache.drain()) >= 1
    again = EvalCache.open(tmp_path)
    assert again.get(5, (1, 2)) == tuple(poly.coeffs)
    assert again.malformed == []
    # a warm context returns the stored value
    assert fmzv_t_eval(PrimeCtx(5, again.for_prime(5)), (1, 2)) == poly


def test_append_only_new(tmp_path):
    cache = EvalCache.open(tmp_path)
    assert cache.append([((7, (1, 1)), ())]) == 1
    assert cache.append([((7, (1, 1)), ())]) == 0
    lines = (tmp_path / CACHE_FILE).read_text().splitlines()
    assert lines == [format_record(7, (1, 1), ())]


def test_malformed_lines_skipped(tmp_path):
    good = format_record(5, (1, 2), (1,))
    bad = ["{not json", json.dumps({"p": 9, "index": [1], "tcoeffs": []}),
           json.dumps({"p": 5, "index": [1], "tcoeffs": [7]}),
           json.dumps({"p": 5, "index": [1, 2], "tcoeffs": [2]})]  # conflicts with the first record
    (tmp_path / CACHE_FILE).write_text("\n".join([good] + bad) + "\n")
    cache = EvalCache.open(tmp_path)
    assert cache.malformed == [2, 3, 4, 5]
    assert cache.get(5, (1, 2)) == (1,)


def test_unwritable_dir(tmp_path):
    target = tmp_path / "file"
    target.write_text("x")
    with pytest.raises(CacheError):
        EvalCache.open(target / "sub")


def test_recording_dict():
    d = RecordingDict({"a": 1})
    d["a"] = 2
    d["b"] = 3
    assert d.drain() == [("b", 3)]
    assert d.drain() == []


def test_cache_dir_from(monkeypatch):
    monkeypatch.setenv(CACHE_ENV, "/tmp/envdir")
    assert cache_dir_from(None) == "/tmp/envdir"
    assert cache_dir_from("flag") == "flag"
    monkeypatch.delenv(CACHE_ENV)
    assert cache_dir_from(None) is None


def test_memory_only_cache():
    cache = EvalCache.open(None)
    assert cache.path is None and cache.append([((5, (1,)), ())]) == 0
    assert not os.path.exists(CACHE_FILE)
