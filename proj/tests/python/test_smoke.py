"""Smoke tests for the python bindings (and, when LGA_CLI is set, the CLI)."""

import os
import subprocess
from fractions import Fraction

import pytest

lga = pytest.importorskip("lga")


def test_graph_basics():
    g = lga.build_dn(4)
    assert g.vertex_count == 10
    assert g.level(g.star) == 0
    assert g.is_uniform()
    assert [kind for kind, _ in g.validate()] == ["warning"]

    lat = lga.build_boolean_lattice(3)
    assert lat.vertex_count == 8
    assert lat.chain_count() == 51


def test_hilbert_and_traces():
    assert lga.hilbert(lga.build_dn(4), 3) == [1, 9, 74, 604]
    assert lga.qn_trace(4, "2,1,1", 3) == [1, 7, 48, 326]
    for method in ("moebius", "wordcount", "closed", "oracle"):
        assert lga.dn_trace(5, "s", 5, method) == lga.dn_trace(5, "s", 5, "moebius")
    assert lga.qn_trace(4, "(12)(34)", 4) == lga.qn_trace(4, "2,2", 4)


def test_dual_and_koszul():
    assert lga.qn_dual_trace(4, "1,1,1,1") == [1, 15, 17, 7, 1]
    assert lga.qn_dual_trace(4, "2,2", "oracle") == lga.qn_dual_trace(4, "2,2", "closed")
    assert lga.dn_dual_trace(6, "rs") == [1, 3, -1, -1]
    assert lga.koszul_dn(5, "s", 12)
    assert lga.koszul_qn(4, "2,1,1", 12)


def test_multiplicities():
    m = lga.qn_multiplicities(4, 3)
    assert m["4"] == [1, 4, 26, 219]
    assert m["2,1,1"] == [0, 0, 13, 273]
    md = lga.qn_dual_multiplicities(4, 4)
    assert md["1,1,1,1"] == [0, 0, 0, 1, 1]


def test_characters_and_partitions():
    assert lga.sn_character([2, 2], [2, 2]) == 2
    assert lga.sn_character([3, 1], [4]) == -1
    assert lga.partitions(4) == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert lga.class_size([2, 1, 1]) == 6
    assert lga.orthogonality_check(5, "Sn")
    assert lga.orthogonality_check(6, "Dn")
    assert lga.dn_dimension_recurrence(3, 3) == 274


def test_exact_fractions():
    coeffs = lga.hilbert(lga.build_boolean_lattice(5), 8)
    assert all(isinstance(c, Fraction) for c in coeffs)
    assert coeffs[1] == 31


def test_graph_round_trip():
    g = lga.build_dn(3)
    text = lga.format_graph(g)
    h = lga.parse_graph(text)
    assert h.vertex_count == g.vertex_count
    assert lga.hilbert(h, 5) == lga.hilbert(g, 5)


def test_verify():
    assert lga.verify_dn(5, "s", 5)
    assert lga.verify_qn(4, "2,2", 4)


@pytest.mark.skipif("LGA_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_byte_determinism():
    cli = os.environ["LGA_CLI"]
    cmd = [cli, "trace", "--family", "qn", "--n", "4", "--sigma", "2,1,1",
           "--degree", "6", "--method", "all", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert b'"agreement": true' in first
