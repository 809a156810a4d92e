"""The frozen fixture file, its oracles, and the library all agree."""
import json

import pytest

from spincover import _oracles
from spincover.action_orth import lift_F_sigma
from spincover.gf2core import GF2Mat, GF2Vec
from spincover.grouptool import FormSpace, Isometry, enumerate_isometries
from spincover.homology import SectionParams, s_eval


def test_regeneration_is_bit_identical(tmp_path):
    out = _oracles.write_fixtures(tmp_path / "fx.json")
    assert out.read_bytes() == _oracles.FIXTURE_PATH.read_bytes()


def test_schema_and_shape():
    doc = json.loads(_oracles.FIXTURE_PATH.read_text())
    assert doc["schema"] == "spincover/1"
    names = [f["name"] for f in doc["fixtures"]]
    assert len(names) == len(set(names))
    for f in doc["fixtures"]:
        assert set(f) == {"name", "input", "expected", "oracle"}


def test_oracle_guard():
    with pytest.raises(ValueError):
        _oracles.all_matrices(_oracles.MAX_ORACLE_DIM + 1)


def test_group_orders_against_library(fixtures):
    assert fixtures["gl2_order"]["expected"] == 6
    for n in (2, 3, 4):
        assert len(enumerate_isometries(FormSpace.dot(n))) == fixtures[f"orth_dot_{n}"]["expected"]
    for g in (1, 2):
        assert len(enumerate_isometries(FormSpace.symplectic(g))) == fixtures[f"symp_{g}"]["expected"]


def test_worked_lifts_against_library(fixtures):
    swap = Isometry(FormSpace.dot(2), GF2Mat.from_str("01\n10"))
    for rho in ("00", "10"):
        d = lift_F_sigma(swap, SectionParams.make(1, rho=rho)).d
        assert d.to_list() == fixtures[f"lift_swap_rho{rho}"]["expected"]
    s = s_eval(SectionParams.make(1), GF2Vec.from_str("11"))
    assert s.to_list() == fixtures["s_c1_plus_c2"]["expected"]


def test_exceptional_fixtures_single_orbit(fixtures):
    for r in ("0101", "0110", "1001", "1010"):
        assert fixtures[f"epi_gs_sizes_g2_r{r}"]["expected"] == [4]
    assert fixtures["epi_gs_sizes_g2_r0000"]["expected"] == [2, 2]
