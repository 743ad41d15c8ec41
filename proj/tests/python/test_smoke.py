import math

import numpy as np
import pytest

import uebk


def test_construct_and_verify_pass():
    params = uebk.FamilyParams(family=uebk.Family.PROP5, d=4, dprime=4, k=2, q=1)
    fam = uebk.construct(params)
    assert len(fam) == 12
    assert fam.expected_count == 12

    rep = uebk.verify_family(fam)
    assert rep.passes()
    assert rep.count_ok and rep.orthonormal_ok and rep.schmidt_ok and rep.unextendible_ok
    assert rep.complement_dim == 4
    assert rep.certificate_bound == 1
    assert rep.generic_max_rank < 2


def test_enumerate_names():
    fams = uebk.enumerate_families(5, 7, 3)
    assert [p.display_name() for p in fams] == ["PROP1", "PROP2 q=1"]
    with pytest.raises(ValueError):
        uebk.enumerate_families(3, 4, 3)


def test_schmidt_tools_and_numpy_interop():
    fam = uebk.construct(uebk.FamilyParams(family=uebk.Family.PROP1, d=3, dprime=3, k=2))
    v = fam.vectors[0]
    assert uebk.schmidt_rank(v) == 2

    amps = np.asarray(v.amps)
    assert amps.shape == (9,)
    assert amps.dtype == np.complex128
    assert abs(np.vdot(amps, amps) - 1.0) < 1e-12

    coeffs = np.asarray(uebk.matricize(v))
    assert coeffs.shape == (3, 3)
    sv = uebk.singular_values(uebk.matricize(v))
    assert sv == pytest.approx([1 / math.sqrt(2), 1 / math.sqrt(2), 0.0], abs=1e-12)


def test_rho_perp_and_range_bound():
    fam = uebk.construct(uebk.FamilyParams(family=uebk.Family.PROP1, d=3, dprime=3, k=2))
    rho = uebk.rho_perp(fam)
    entries = np.asarray(rho.entries)
    assert entries.shape == (9, 9)
    assert abs(np.trace(entries) - 1.0) < 1e-12
    assert np.allclose(entries, entries.conj().T)

    bound = uebk.range_schmidt_bound(rho, 2)
    assert bound.below_k
    assert bound.max_rank_observed == 1


def test_json_round_trip(tmp_path):
    fam = uebk.construct(uebk.FamilyParams(family=uebk.Family.PROP3, d=3, dprime=4, k=2))
    path = tmp_path / "family.json"
    uebk.save_family(fam, str(path))
    loaded = uebk.load_family(str(path))
    assert len(loaded) == len(fam)
    assert loaded.params == fam.params
    assert uebk.verify_family(loaded).passes()

    path2 = tmp_path / "family2.json"
    uebk.save_family(loaded, str(path2))
    assert path.read_bytes() == path2.read_bytes()


def test_probe_is_deterministic():
    fam = uebk.construct(uebk.FamilyParams(family=uebk.Family.PROP1, d=3, dprime=5, k=2))
    comp = uebk.complement_basis(fam)
    r1 = uebk.generic_max_schmidt_rank(comp, trials=8, seed=99)
    r2 = uebk.generic_max_schmidt_rank(comp, trials=8, seed=99)
    assert r1 == r2 == 1


def test_invalid_params_raise():
    with pytest.raises(ValueError):
        uebk.construct(uebk.FamilyParams(family=uebk.Family.PROP2, d=4, dprime=5, k=3, q=1))
    with pytest.raises(ValueError):
        uebk.construct_prop5(4, 4, 2, 2)
