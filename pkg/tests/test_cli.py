import io
import json

import pytest

from kleshchev import __version__, export
from kleshchev.cache import (
    CacheIntegrityError,
    CacheKey,
    CacheMiss,
    cache_load,
    cache_store,
    cached_basis,
    decode_basis,
    encode_basis,
)
from kleshchev.canonical import canonical_basis, clear_bases, decomposition_matrix
from kleshchev.cli import UsageError, main, parse_invocation, run
from kleshchev.combinatorics import TOP_DOWN, Multicharge

E2 = Multicharge(2, (0,))


def invoke(argv):
    inv = parse_invocation(argv)
    buf = io.StringIO()
    return run(inv, buf), buf.getvalue()


def test_parse_examples():
    inv = parse_invocation("decomp --e 2 --charge 0 --n 3 --format csv".split())
    assert (inv.subcommand, inv.e, inv.charge, inv.n_max, inv.format) == ("decomp", 2, (0,), 3, "csv")
    with pytest.raises(UsageError, match="--e"):
        parse_invocation(["--e", "1"])
    inv = parse_invocation("--charge 0,1 --e 2".split())
    assert inv.charge == (0, 1) and inv.multicharge.level == 2
    assert parse_invocation("--charge 5,-1 --e 3".split()).charge == (2, 2)


@pytest.mark.parametrize("argv, flag", [
    (["--bogus"], "kleshchev"),
    (["--charge", "a,b"], "--charge"),
    (["--n", "-1"], "--n"),
    (["--n", "13"], "--n"),
    (["--vertex-cap", "0"], "--vertex-cap"),
    (["--format", "xml"], "kleshchev"),
])
def test_parse_errors_name_the_flag(argv, flag):
    with pytest.raises(UsageError) as info:
        parse_invocation(argv)
    assert flag in str(info.value)
    assert main(argv) == 2


def test_size_guard_is_overridable():
    assert parse_invocation(["--n", "13", "--n-limit", "20"]).n_max == 13


def test_crystal_single_vertex_dot():
    code, out = invoke(["crystal", "--n", "0"])
    assert code == 0
    assert out.startswith("// kleshchev")
    assert out.count("[label=") == 1 and "->" not in out


def test_crystal_listing_formats():
    code, out = invoke(["crystal", "--n", "2", "--format", "json"])
    data = json.loads(out)
    assert code == 0 and data["provenance"]["convention"] == "bottom_up"
    assert [r["label"] for r in data["rows"]] == ["∅", "(1)", "(1,1)"]
    assert data["rows"][1]["wt_pairings"] == [-1, 2]
    code, out = invoke(["crystal", "--n", "2", "--format", "table"])
    assert "epsilon" in out


def test_branch_table_row():
    code, out = invoke("branch --e 2 --charge 0 --n 3".split())
    assert code == 0
    rows = [line.split() for line in out.splitlines()]
    assert ["3", "(2,1)", "1", "(1,1)", "2", "0", "(1,1):2", "pass"] in rows


def test_verify_exit_zero():
    code, out = invoke("verify --e 2 --charge 0 --n 6".split())
    assert code == 0
    assert "8/8 suites pass" in out


def test_verify_json_and_top_down():
    code, out = invoke("verify --e 3 --charge 0,1 --n 4 --format json --convention top_down".split())
    assert code == 0
    assert all(r["verdict"] == "pass" for r in json.loads(out)["rows"])


def test_paths_and_decomp_outputs():
    code, out = invoke("paths --e 2 --n 3 --format csv".split())
    assert code == 0 and '"(2,1)",1' in out
    code, out = invoke("decomp --e 2 --charge 0 --n 3 --format csv".split())
    assert code == 0
    assert out.splitlines()[1:] == ['mu,"(2,1)","(1,1,1)"', "(3),0,v", '"(2,1)",1,0', '"(1,1,1)",0,1']
    code, out = invoke("decomp --n 3 --format json".split())
    assert json.loads(out)["entries_at_v1"] == [[0, 1], [1, 0], [0, 1]]
    code, out = invoke("canonical --n 2".split())
    assert json.loads(out)["elements"][0]["vector"] == [[[[2]], "v"], [[[1, 1]], "1"]]


def test_dot_only_for_crystal():
    assert invoke(["decomp", "--format", "dot"])[0] == 2


def test_resource_cap_is_exit_two():
    assert invoke("crystal --e 3 --charge 0,1 --n 8 --vertex-cap 10".split())[0] == 2


def test_determinism():
    argv = "decomp --e 3 --charge 0,1 --n 4 --format json".split()
    assert invoke(argv) == invoke(argv)


def test_output_file(tmp_path):
    target = tmp_path / "g.dot"
    assert main(["crystal", "--n", "2", "--output", str(target)]) == 0
    assert target.read_text().startswith("// kleshchev")


# ---------------------------------------------------------------- cache

def test_cache_key():
    a = CacheKey.for_basis(E2, 3)
    assert a == CacheKey.for_basis(Multicharge(2, (0,)), 3)
    assert a.digest == CacheKey.for_basis(E2, 3).digest
    others = [CacheKey.for_basis(E2, 4), CacheKey.for_basis(Multicharge(3, (0,)), 3),
              CacheKey.for_basis(Multicharge(2, (1,)), 3), CacheKey.for_basis(Multicharge(2, (0,), TOP_DOWN), 3),
              CacheKey.for_basis(E2, 3, engine="0.0.0")]
    assert len({a.digest, *(k.digest for k in others)}) == 6


def test_cache_roundtrip_decomposition_matrix(tmp_path):
    payload = export.dumps(export.decomposition_json(decomposition_matrix(E2, 4))).encode()
    key = CacheKey.for_basis(E2, 4)
    assert cache_store(tmp_path, key, payload) == payload
    assert cache_load(tmp_path, key) == payload


def test_stale_engine_is_a_miss(tmp_path):
    cache_store(tmp_path, CacheKey.for_basis(E2, 2, engine="0.0.1"), b"old")
    with pytest.raises(CacheMiss):
        cache_load(tmp_path, CacheKey.for_basis(E2, 2, engine=__version__))


def test_corrupted_payload_is_detected(tmp_path):
    key = CacheKey.for_basis(E2, 3)
    cache_store(tmp_path, key, encode_basis(canonical_basis(E2, 3)))
    path = next(tmp_path.glob("*.bin"))
    raw = bytearray(path.read_bytes())
    raw[-3] ^= 1
    path.write_bytes(bytes(raw))
    with pytest.raises(CacheIntegrityError):
        cache_load(tmp_path, key)
    assert invoke(["decomp", "--n", "3", "--cache-dir", str(tmp_path)])[0] == 2


def test_basis_codec_roundtrip():
    basis = canonical_basis(Multicharge(3, (0, 1)), 4)
    assert decode_basis(Multicharge(3, (0, 1)), encode_basis(basis)) == basis


def test_cache_transparency(tmp_path):
    charge = Multicharge(3, (0, 1))
    cold = canonical_basis(charge, 5)
    cached_basis(charge, 5, tmp_path)
    clear_bases()
    warm = cached_basis(charge, 5, tmp_path)
    assert warm == cold
    argv = "decomp --e 3 --charge 0,1 --n 5 --format csv".split()
    plain = invoke(argv)
    clear_bases()
    assert invoke(argv + ["--cache-dir", str(tmp_path)]) == plain
