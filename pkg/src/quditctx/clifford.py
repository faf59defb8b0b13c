"""Single-qudit Clifford group in the (F|u) parameterization.

Elements are identified modulo global phase by a pair F in SL(2, Z_d) and a
displacement u in Z_d^2; the explicit unitary C_(F|u) = P_(u1|u2) U_F fixes
one representative phase.  Composition and inversion act symplectically on
the pairs; dense unitaries are built for validation, trace checks and the
Jamiolkowski construction.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import EvenDimensionError, ShapeMismatchError
from .pauli import PauliOperator, omega, pauli_matrix, phase_order
from .zmod import legendre, mod_inverse, require_prime

Mat2 = tuple[int, int, int, int]  # row-major (alpha, beta, gamma, delta)


def _matmul2(f: Mat2, g: Mat2, d: int) -> Mat2:
    a, b, c, e = f
    p, q, r, s = g
    return (
        (a * p + b * r) % d,
        (a * q + b * s) % d,
        (c * p + e * r) % d,
        (c * q + e * s) % d,
    )


def _matvec2(f: Mat2, v: tuple[int, int], d: int) -> tuple[int, int]:
    a, b, c, e = f
    return ((a * v[0] + b * v[1]) % d, (c * v[0] + e * v[1]) % d)


def _inv2(f: Mat2, d: int) -> Mat2:
    a, b, c, e = f
    return (e % d, -b % d, -c % d, a % d)


@dataclass(frozen=True)
class CliffordElement:
    """A phase-quotiented Clifford gate, as (F, u) with F in SL(2, Z_d)."""

    d: int
    f: Mat2
    u: tuple[int, int]

    def __post_init__(self) -> None:
        d = require_prime(self.d)
        f = tuple(v % d for v in self.f)
        u = tuple(v % d for v in self.u)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "u", u)
        if (f[0] * f[3] - f[1] * f[2]) % d != 1:
            raise ValueError(f"F={f} is not in SL(2, Z_{d})")

    @property
    def key(self) -> tuple[Mat2, tuple[int, int]]:
        return (self.f, self.u)

    def is_identity(self) -> bool:
        return self.f == (1, 0, 0, 1) and self.u == (0, 0)

    def compose(self, other: "CliffordElement") -> "CliffordElement":
        """Group product (self applied after other).

        For odd d the metaplectic representation splits and the product is
        (FF', u + Fu') exactly.  For d = 2 that law can miss a Pauli factor
        (e.g. U_F squares to -iX for F = [[1,1],[0,1]]), so the displacement
        is re-identified from the composed conjugation action instead.
        """
        if self.d != other.d:
            raise ShapeMismatchError("elements have different dimension")
        d = self.d
        f = _matmul2(self.f, other.f, d)
        fu = _matvec2(self.f, other.u, d)
        naive = CliffordElement(d, f, ((self.u[0] + fu[0]) % d, (self.u[1] + fu[1]) % d))
        if d != 2:
            return naive
        want = tuple(
            _composed_action_phase(self, other, p) for p in _QUBIT_GENERATORS
        )
        for u1 in range(2):
            for u2 in range(2):
                cand = CliffordElement(2, f, (u1, u2))
                got = tuple(
                    conjugate_pauli(cand, p).phase for p in _QUBIT_GENERATORS
                )
                if got == want:
                    return cand
        raise ValueError("no (F|u) matches the composed conjugation action")

    def inverse(self) -> "CliffordElement":
        d = self.d
        finv = _inv2(self.f, d)
        v = _matvec2(finv, self.u, d)
        naive = CliffordElement(d, finv, (-v[0] % d, -v[1] % d))
        if d != 2:
            return naive
        for u1 in range(2):
            for u2 in range(2):
                cand = CliffordElement(2, finv, (u1, u2))
                if cand.compose(self).is_identity():
                    return cand
        raise ValueError("no inverse found")  # unreachable for a valid element

    def trace_f(self) -> int:
        return (self.f[0] + self.f[3]) % self.d


def identity_clifford(d: int) -> CliffordElement:
    return CliffordElement(d, (1, 0, 0, 1), (0, 0))


_QUBIT_GENERATORS = (PauliOperator(2, (1,), (0,)), PauliOperator(2, (0,), (1,)))


def _composed_action_phase(a: "CliffordElement", b: "CliffordElement", p) -> int:
    """Phase exponent of (C_a C_b) P (C_a C_b)^dag via the two exact actions."""
    img = conjugate_pauli(b, p)
    out = conjugate_pauli(a, PauliOperator(a.d, img.x, img.z))
    return (out.phase + img.phase) % 4


def sl2_elements(d: int) -> list[Mat2]:
    """All of SL(2, Z_d), in lexicographic order; size d(d^2-1)."""
    out = []
    for a, b, c, e in itertools.product(range(d), repeat=4):
        if (a * e - b * c) % d == 1:
            out.append((a, b, c, e))
    return out


def enumerate_clifford(d: int) -> list[CliffordElement]:
    """The full group of d^3(d^2-1) phase-quotiented elements, deterministic order."""
    require_prime(d)
    return [
        CliffordElement(d, f, (u1, u2))
        for f in sl2_elements(d)
        for u1 in range(d)
        for u2 in range(d)
    ]


def clifford_unitary(c: CliffordElement) -> np.ndarray:
    """Dense unitary C_(F|u) = P_(u1|u2) U_F, with tau = -i (d=2) or omega^{1/2}."""
    d = c.d
    a, b, g, e = c.f
    if d == 2:
        tau = -1j
    else:
        tau = omega(d) ** mod_inverse(2, d)
    if b != 0:
        binv = mod_inverse(b, d)
        U = np.empty((d, d), dtype=complex)
        for j in range(d):
            for k in range(d):
                U[j, k] = tau ** (binv * (a * k * k - 2 * j * k + e * j * j))
        U /= math.sqrt(d)
    else:
        U = np.zeros((d, d), dtype=complex)
        for k in range(d):
            U[(a * k) % d, k] = tau ** (a * g * k * k)
    return pauli_matrix(PauliOperator(d, (c.u[0],), (c.u[1],))) @ U


def clifford_trace_abs(c: CliffordElement) -> float:
    """|Tr C_(F|u)| by case analysis on beta, Tr(F), gamma and u (odd d only)."""
    d = c.d
    if d == 2:
        raise EvenDimensionError("trace relations are stated for odd prime d")
    a, b, g, _ = c.f
    trf = c.trace_f()
    u1, u2 = c.u
    if b == 0:
        if trf != 2 % d:
            return float(abs(legendre(a, d)))
        if g != 0:
            return abs(legendre(g, d)) * math.sqrt(d) * (1.0 if u1 == 0 else 0.0)
        return d * (1.0 if u1 == 0 and u2 == 0 else 0.0)
    if trf != 2 % d:
        return float(abs(legendre(trf - 2, d)))
    binv = mod_inverse(b, d)
    matches = u2 == (binv * (1 - a) * u1) % d
    return abs(legendre(-b, d)) * math.sqrt(d) * (1.0 if matches else 0.0)


def traceless_set(d: int) -> list[CliffordElement]:
    """All elements with Tr C = 0; size [d(d-1)+1](d^2-1) for odd prime d."""
    if d == 2:
        raise EvenDimensionError("the traceless set is defined via odd-d trace relations")
    return [c for c in enumerate_clifford(d) if clifford_trace_abs(c) == 0.0]


def _group_generators(d: int) -> list[CliffordElement]:
    gens = [
        CliffordElement(d, (0, -1, 1, 0), (0, 0)),
        CliffordElement(d, (1, 1, 0, 1), (0, 0)),
        CliffordElement(d, (1, 0, 0, 1), (1, 0)),
        CliffordElement(d, (1, 0, 0, 1), (0, 1)),
    ]
    return gens


def conjugacy_classes(elements: list[CliffordElement]) -> list[list[CliffordElement]]:
    """Partition a conjugation-closed subset into conjugacy classes of C_d.

    Orbits are grown under conjugation by group generators, so the input must
    be closed under conjugation (true for the traceless set).
    """
    if not elements:
        return []
    d = elements[0].d
    gens = _group_generators(d)
    gens = gens + [g.inverse() for g in gens]
    index = {c.key: c for c in elements}
    seen: set = set()
    classes = []
    for c in elements:
        if c.key in seen:
            continue
        orbit = {c.key}
        frontier = [c]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = g.compose(x).compose(g.inverse())
                if y.key not in orbit:
                    if y.key not in index:
                        raise ValueError("subset is not closed under conjugation")
                    orbit.add(y.key)
                    frontier.append(index[y.key])
        seen |= orbit
        classes.append(sorted((index[k] for k in orbit), key=lambda e: e.key))
    return classes


def is_conjugation_closed(elements: list[CliffordElement]) -> bool:
    try:
        conjugacy_classes(elements)
    except ValueError:
        return False
    return True


def conjugate_pauli(c: CliffordElement, p: PauliOperator) -> PauliOperator:
    """Exact phased image of a single-qudit Pauli under conjugation by C_(F|u).

    The symplectic part is F(x, z); the phase is lifted from the dense
    conjugation and snapped to the nearest exact root of unity (the residual
    must vanish to 1e-9, which validates the lift).
    """
    if p.n != 1 or p.d != c.d:
        raise ShapeMismatchError("conjugation is implemented for single-qudit Paulis")
    d = c.d
    xz = _matvec2(c.f, (p.x[0], p.z[0]), d)
    target = PauliOperator(d, (xz[0],), (xz[1],))
    U = _cached_unitary(c)
    M = U @ pauli_matrix(p) @ U.conj().T
    T = pauli_matrix(target)
    idx = np.unravel_index(np.argmax(np.abs(T)), T.shape)
    ratio = M[idx] / T[idx]
    order = phase_order(d)
    k = round(np.angle(ratio) / (2 * math.pi / order)) % order
    out = PauliOperator(d, target.x, target.z, k)
    if np.abs(M - pauli_matrix(out)).max() > 1e-9:
        raise ValueError(f"phase lift failed for {c.key} acting on {p.key}")
    return out


@lru_cache(maxsize=50000)
def _cached_unitary_by_key(d: int, f: Mat2, u: tuple[int, int]) -> np.ndarray:
    m = clifford_unitary(CliffordElement(d, f, u))
    m.flags.writeable = False
    return m


def _cached_unitary(c: CliffordElement) -> np.ndarray:
    return _cached_unitary_by_key(c.d, c.f, c.u)


def bell_state(d: int) -> np.ndarray:
    """The canonical maximally entangled state sum_j |jj> / sqrt(d)."""
    v = np.zeros(d * d, dtype=complex)
    for j in range(d):
        v[j * d + j] = 1.0
    return v / math.sqrt(d)


@dataclass(frozen=True)
class JamiolkowskiState:
    """Unit vector (I (x) U)|Phi> for a Clifford gate U."""

    source: CliffordElement
    vector: np.ndarray

    def projector_matrix(self) -> np.ndarray:
        return np.outer(self.vector, self.vector.conj())


def jamiolkowski_state(c: CliffordElement) -> JamiolkowskiState:
    d = c.d
    U = _cached_unitary(c)
    vec = (np.kron(np.eye(d), U) @ bell_state(d)).astype(complex)
    return JamiolkowskiState(c, vec)
