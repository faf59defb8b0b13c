import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quditctx.clifford import (
    CliffordElement,
    bell_state,
    clifford_trace_abs,
    clifford_unitary,
    conjugacy_classes,
    conjugate_pauli,
    enumerate_clifford,
    identity_clifford,
    is_conjugation_closed,
    jamiolkowski_state,
    traceless_set,
)
from quditctx.errors import EvenDimensionError
from quditctx.pauli import PauliOperator


def _elements(d):
    return enumerate_clifford(d)


# ---------------------------------------------------------------------------
# group structure
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("d,expected", [(2, 24), (3, 216), (5, 3000)])
def test_group_order(d, expected):
    els = _elements(d)
    assert len(els) == expected == d**3 * (d * d - 1)
    assert len({c.key for c in els}) == expected


def test_identity_unitary():
    for d in (2, 3):
        u = clifford_unitary(identity_clifford(d))
        assert np.abs(u - np.eye(d)).max() < 1e-12


@given(st.sampled_from([2, 3]), st.data())
@settings(max_examples=40, deadline=None)
def test_composition_matches_unitary_product(d, data):
    els = _elements(d)
    a = data.draw(st.sampled_from(els))
    b = data.draw(st.sampled_from(els))
    c = a.compose(b)
    ua, ub, uc = clifford_unitary(a), clifford_unitary(b), clifford_unitary(c)
    prod = ua @ ub
    # equal up to a global phase
    idx = np.unravel_index(np.argmax(np.abs(uc)), uc.shape)
    phase = prod[idx] / uc[idx]
    assert abs(abs(phase) - 1) < 1e-9
    assert np.abs(prod - phase * uc).max() < 1e-9


@given(st.sampled_from([2, 3, 5]), st.data())
@settings(max_examples=40, deadline=None)
def test_inverse_composes_to_identity(d, data):
    a = data.draw(st.sampled_from(_elements(d)))
    assert a.compose(a.inverse()).key == identity_clifford(d).key
    assert a.inverse().compose(a).key == identity_clifford(d).key


def test_qubit_closure_exhaustive():
    """All 576 qubit products match the dense group law up to phase; the d=2
    metaplectic correction in compose() is what makes this pass."""
    els = _elements(2)
    us = {c.key: clifford_unitary(c) for c in els}
    for a in els:
        for b in els:
            c = a.compose(b)
            prod = us[a.key] @ us[b.key]
            uc = us[c.key]
            idx = np.unravel_index(np.argmax(np.abs(uc)), uc.shape)
            ph = prod[idx] / uc[idx]
            assert abs(abs(ph) - 1) < 1e-9
            assert np.abs(prod - ph * uc).max() < 1e-9


@pytest.mark.parametrize("d", [2, 3])
def test_unitarity(d):
    for c in _elements(d):
        u = clifford_unitary(c)
        assert np.abs(u @ u.conj().T - np.eye(d)).max() < 1e-10


# ---------------------------------------------------------------------------
# conjugation action
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("d", [2, 3])
def test_conjugation_closure_full(d):
    paulis = [
        PauliOperator(d, (x,), (z,))
        for x in range(d)
        for z in range(d)
        if (x, z) != (0, 0)
    ]
    for c in _elements(d):
        for p in paulis:
            img = conjugate_pauli(c, p)  # raises if not a phased Pauli
            want_x = (c.f[0] * p.x[0] + c.f[1] * p.z[0]) % d
            want_z = (c.f[2] * p.x[0] + c.f[3] * p.z[0]) % d
            assert img.key == ((want_x,), (want_z,))


# ---------------------------------------------------------------------------
# trace relations
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "f,u,d,expected",
    [
        ((1, 0, 0, 1), (0, 0), 5, 5.0),
        ((1, 0, 0, 1), (1, 0), 5, 0.0),
    ],
)
def test_trace_formula_identity_cases(f, u, d, expected):
    assert clifford_trace_abs(CliffordElement(d, f, u)) == expected


def test_trace_formula_generic_case():
    # beta != 0 and Tr(F) != 2 always gives |Tr| = 1
    c = CliffordElement(3, (0, 1, 2, 0), (1, 2))
    assert c.trace_f() != 2
    assert clifford_trace_abs(c) == 1.0


def test_trace_formula_even_dim_raises():
    with pytest.raises(EvenDimensionError):
        clifford_trace_abs(CliffordElement(2, (1, 0, 0, 1), (0, 0)))
    with pytest.raises(EvenDimensionError):
        traceless_set(2)


def test_trace_formula_matches_numeric_d3_all():
    worst = 0.0
    for c in _elements(3):
        num = abs(np.trace(clifford_unitary(c)))
        worst = max(worst, abs(num - clifford_trace_abs(c)))
    assert worst < 1e-9


@given(st.data())
@settings(max_examples=500, deadline=None)
def test_trace_formula_matches_numeric_d5_sampled(data):
    c = data.draw(st.sampled_from(_elements(5)))
    num = abs(np.trace(clifford_unitary(c)))
    assert abs(num - clifford_trace_abs(c)) < 1e-9


# ---------------------------------------------------------------------------
# traceless set
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("d,expected", [(3, 56), (5, 504)])
def test_traceless_count(d, expected):
    T = traceless_set(d)
    assert len(T) == expected == (d * (d - 1) + 1) * (d * d - 1)


@pytest.mark.parametrize("d", [3, 5])
def test_traceless_closure_properties(d):
    T = traceless_set(d)
    keys = {t.key for t in T}
    assert identity_clifford(d).key not in keys
    assert all(t.inverse().key in keys for t in T)
    assert is_conjugation_closed(T)


@pytest.mark.parametrize("d", [3, 5])
def test_conjugacy_class_partition(d):
    T = traceless_set(d)
    classes = conjugacy_classes(T)
    sizes = sorted(len(cl) for cl in classes)
    assert sizes == sorted([d * d - 1] + [d * (d * d - 1)] * (d - 1))
    assert sum(sizes) == len(T)


# ---------------------------------------------------------------------------
# Jamiolkowski isomorphism
# ---------------------------------------------------------------------------

def test_identity_maps_to_bell_state():
    for d in (2, 3):
        j = jamiolkowski_state(identity_clifford(d))
        assert np.abs(j.vector - bell_state(d)).max() < 1e-12


@pytest.mark.parametrize("d", [2, 3])
def test_jamiolkowski_injective(d):
    projs = {}
    for c in _elements(d):
        v = jamiolkowski_state(c).vector
        key = tuple(np.round(np.outer(v, v.conj()).ravel(), 9))
        projs[key] = c
    assert len(projs) == d**3 * (d * d - 1)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_jamiolkowski_vectors_are_unit(data):
    d = data.draw(st.sampled_from([2, 3, 5]))
    c = data.draw(st.sampled_from(_elements(d)))
    v = jamiolkowski_state(c).vector
    assert abs(np.linalg.norm(v) - 1.0) < 1e-12


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_overlap_iff_trace_orthogonal(data):
    els = _elements(3)
    a = data.draw(st.sampled_from(els))
    b = data.draw(st.sampled_from(els))
    ja, jb = jamiolkowski_state(a), jamiolkowski_state(b)
    overlap = abs(np.vdot(ja.vector, jb.vector))
    tr = abs(np.trace(clifford_unitary(a).conj().T @ clifford_unitary(b)))
    assert (overlap < 1e-10) == (tr < 1e-10)
    # and the trace matches the exact symplectic route
    prod = a.inverse().compose(b)
    assert abs(tr - clifford_trace_abs(prod)) < 1e-9
