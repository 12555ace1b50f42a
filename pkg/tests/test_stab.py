from __future__ import annotations

import numpy as np
import pytest

from unionstab import classical, pauli, stab
from unionstab.errors import (
    BadChain,
    BadMap,
    DependentGenerators,
    NotCommuting,
    NotDualContaining,
    StrategyInfeasible,
)


def _code(strings):
    return stab.stabilizer_from_generators(
        [pauli.pauli_parse(s) for s in strings])


def test_five_qubit_base_structure(five_base):
    assert (five_base.n, five_base.k) == (5, 0)
    rows = five_base.stab_binary()
    assert not stab._ip_rows(rows, rows, 5).any()
    assert five_base.normalizer_binary().shape == (5, 10)
    assert five_base.logical_x == () and five_base.logical_z == ()


def test_five_qubit_base_purity_and_distance(five_base):
    params = stab.purity_and_distance(five_base)
    assert params.d == 3 and params.purity == 3
    assert params.provenance["d"] == "brute-normalizer"


def test_logical_pairing():
    code = _code(["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"])
    lx, lz = code.logical_x[0], code.logical_z[0]
    assert pauli.symplectic_ip(lx, lz) == 1
    for s in code.stab:
        assert pauli.symplectic_ip(lx, s) == 0
        assert pauli.symplectic_ip(lz, s) == 0


def test_perfect_code_distance():
    code = _code(["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"])
    params = stab.purity_and_distance(code)
    assert (params.n, params.log2_dim, params.d) == (5, 1, 3)


def test_zero_k_graph_code(graph_state_code):
    params = stab.purity_and_distance(graph_state_code)
    assert (graph_state_code.k, params.d) == (0, 3)


def test_rejects_anticommuting_generators():
    with pytest.raises(NotCommuting):
        _code(["XI", "ZI"])


def test_rejects_dependent_generators():
    with pytest.raises(DependentGenerators):
        _code(["XX", "ZZ", "YY"])


def test_css_steane():
    ham = classical.linear_code(np.array(
        [[1, 0, 0, 0, 0, 1, 1],
         [0, 1, 0, 0, 1, 0, 1],
         [0, 0, 1, 0, 1, 1, 0],
         [0, 0, 0, 1, 1, 1, 1]], dtype=np.uint8))
    code = stab.css(ham, ham)
    assert (code.n, code.k) == (7, 1)
    params = stab.purity_and_distance(code)
    assert params.d == 3
    # X-type and Z-type rows only
    for p in code.stab:
        assert not (p.x.any() and p.z.any())


def test_css_rejects_non_dual_containing():
    rm04 = classical.reed_muller(0, 4)
    rm34 = classical.reed_muller(3, 4)
    with pytest.raises(NotDualContaining):
        stab.css(rm04, rm04)  # dual(RM(0,4)) not inside RM(0,4)
    code = stab.css(rm34, rm34)
    assert (code.n, code.k) == (16, 2 * 15 - 16)


def test_fixed_point_free_map():
    for dim in (2, 3, 4, 5, 7):
        a = stab.default_fixed_point_free(dim)
        stab._gf2_inverse(a)
        stab._gf2_inverse(a ^ np.eye(dim, dtype=np.uint8))
    with pytest.raises(BadMap):
        stab.default_fixed_point_free(1)


def test_enlarge_css_small():
    rm24 = classical.reed_muller(2, 4)
    rm34 = classical.reed_muller(3, 4)
    code = stab.enlarge_css(rm24, rm34)
    assert (code.n, code.k) == (16, 11 + 15 - 16)
    rows = code.stab_binary()
    assert not stab._ip_rows(rows, rows, 16).any()


def test_enlarge_css_rejects_identity_eigenvalue():
    rm24 = classical.reed_muller(2, 4)
    rm34 = classical.reed_muller(3, 4)
    with pytest.raises(BadMap):
        stab.enlarge_css(rm24, rm34, a=np.eye(4, dtype=np.uint8))


def test_enlarge_css_rejects_small_gap():
    rm14 = classical.reed_muller(1, 4)
    with pytest.raises(BadChain):
        stab.enlarge_css(rm14, rm14)


def test_enlargement_weight_check_small():
    rm24 = classical.reed_muller(2, 4)
    rm34 = classical.reed_muller(3, 4)
    w = stab.enlargement_weight_check(rm24, rm34)
    # brute-force oracle over all nonzero messages
    d_rows = stab._coset_rep_rows(rm34.generator, rm24.generator)
    a = stab.default_fixed_point_free(4)
    ad = (a @ d_rows) % 2
    best = 16
    for v in range(1, 16):
        msg = np.array([(v >> i) & 1 for i in range(4)], dtype=np.uint8)
        w1 = int((msg @ d_rows % 2).sum())
        w2 = int((msg @ ad % 2).sum())
        w3 = int((msg @ ((d_rows ^ ad)) % 2).sum())
        best = min(best, w1, w2, w3)
    assert w == best


def test_purity_cap(five_base):
    with pytest.raises(StrategyInfeasible):
        stab.purity_and_distance(five_base, cap=8)


def test_format_parse_round_trip(five_base):
    text = stab.format_stabilizer(five_base)
    again = stab.parse_stabilizer(text)
    assert again.n == five_base.n and again.k == five_base.k
    assert [str(p) for p in again.stab] == [str(p) for p in five_base.stab]
    assert [str(p) for p in again.logical_x] == \
        [str(p) for p in five_base.logical_x]
