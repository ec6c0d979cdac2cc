import itertools
import os

import pytest

import sbs


def test_fields_and_counts():
    polys = sbs.fields()
    assert len(polys) == 30
    assert polys[0] == 0x11B
    assert polys == sorted(polys)
    assert [sbs.count_irreducible(d) for d in (4, 8, 16)] == [3, 30, 4080]


@pytest.mark.parametrize("rrsg", ["chacha20", "test-lcg"])
@pytest.mark.parametrize("dual_seed", [False, True])
def test_round_trip_every_subset(rrsg, dual_seed):
    data = os.urandom(1000)
    files = sbs.split(data, 5, 3, rrsg=rrsg, dual_seed=dual_seed)
    assert len(files) == 5
    for subset in itertools.combinations(files, 3):
        assert sbs.combine(list(subset)) == data


def test_share_size_and_header():
    files = sbs.split(b"0123456789", 5, 3)
    assert all(len(f) == 24 + 44 + 4 for f in files)
    info = sbs.inspect(files[2])
    assert info["n"] == 5 and info["m"] == 3 and info["index"] == 2
    assert info["rrsg"] == "chacha20"
    assert files[0][:4] == b"SBS1"


def test_recover_range():
    data = bytes(range(20))  # m=4: five data blocks + one padding block
    files = sbs.split(data, 4, 4, fixed_field=True)
    assert sbs.recover_range(files, 1, 2) == data[4:12]
    assert sbs.recover_range(files, 5, 1) == bytes([4, 4, 4, 4])


def test_errors():
    files = sbs.split(b"secret", 4, 3)
    with pytest.raises(sbs.SbsError) as exc:
        sbs.combine(files[:2])
    assert exc.value.code == "insufficient shares"
    with pytest.raises(sbs.SbsError) as exc:
        sbs.inspect(b"not a share file at all.....")
    assert exc.value.code == "bad magic"
    with pytest.raises(ValueError):
        sbs.split(b"x", 2, 3)
