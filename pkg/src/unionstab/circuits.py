"""Encoder circuits, reversible synthesis, and dense verification.

Inverse encoders for union stabilizer codes come in two layers: a
Clifford circuit that conjugates the stabilizer to single-qubit Z
operators (turning translations into X-patterns on the label qubits),
followed by a classical reversible circuit over {X, CNOT, CCX} that
maps the coset labels to counting order.  Dense simulation up to 12
qubits backs Knill-Laflamme and end-to-end encoder checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import gf2
from .errors import (
    BadParams,
    CollisionAfterReduction,
    NonCliffordGate,
    NotFound,
    TooManyQubits,
)
from .pauli import PauliVector, pauli_str
from .stab import StabilizerCode
from .unioncode import UnionStabilizerCode

__all__ = [
    "Circuit",
    "KLReport",
    "EncoderReport",
    "conjugate",
    "synth_q1",
    "canonicalize_translations",
    "align_labels",
    "synth_qc",
    "synth_qc_any_order",
    "simulate",
    "apply_pauli",
    "code_basis",
    "kl_verify",
    "full_encoder_check",
    "format_circuit",
    "parse_circuit",
]

_GATE_ARITY = {"H": 1, "P": 1, "X": 1, "Z": 1, "CNOT": 2, "CZ": 2, "CCX": 3}
_CLIFFORD = ("H", "P", "X", "Z", "CNOT", "CZ")
MAX_SIM_QUBITS = 12


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list; gates apply leftmost first, qubits 0-indexed."""

    n: int
    gates: tuple = ()

    def __post_init__(self):
        for g in self.gates:
            name, qubits = g[0], g[1:]
            if name not in _GATE_ARITY or len(qubits) != _GATE_ARITY[name]:
                raise BadParams(f"malformed gate {g!r}")
            if len(set(qubits)) != len(qubits):
                raise BadParams(f"repeated qubit in gate {g!r}")
            if not all(0 <= q < self.n for q in qubits):
                raise BadParams(f"qubit out of range in gate {g!r}")

    def __len__(self) -> int:
        return len(self.gates)


# ---------------------------------------------------------------------------
# Clifford conjugation on binary symplectic rows with sign tracking

def _gate_on_rows(x: np.ndarray, z: np.ndarray, signs: np.ndarray,
                  gate: tuple) -> None:
    """Applies U . U^dagger in place to rows (x|z) of Hermitian Paulis."""
    name = gate[0]
    if name == "H":
        q = gate[1]
        signs *= 1 - 2 * (x[:, q] & z[:, q]).astype(np.int64)
        x[:, q], z[:, q] = z[:, q].copy(), x[:, q].copy()
    elif name == "P":
        q = gate[1]
        signs *= 1 - 2 * (x[:, q] & z[:, q]).astype(np.int64)
        z[:, q] ^= x[:, q]
    elif name == "X":
        q = gate[1]
        signs *= 1 - 2 * z[:, q].astype(np.int64)
    elif name == "Z":
        q = gate[1]
        signs *= 1 - 2 * x[:, q].astype(np.int64)
    elif name == "CNOT":
        c, t = gate[1], gate[2]
        signs *= 1 - 2 * (x[:, c] & z[:, t] & (x[:, t] ^ z[:, c] ^ 1)
                          ).astype(np.int64)
        x[:, t] ^= x[:, c]
        z[:, c] ^= z[:, t]
    elif name == "CZ":
        a, b = gate[1], gate[2]
        signs *= 1 - 2 * (x[:, a] & x[:, b] & (z[:, a] ^ z[:, b])
                          ).astype(np.int64)
        z[:, a] ^= x[:, b]
        z[:, b] ^= x[:, a]
    else:
        raise NonCliffordGate(f"cannot conjugate through {name}")


def conjugate(circ: Circuit, p: PauliVector) -> PauliVector:
    """Returns U p U^dagger for the Clifford circuit U, sign included."""
    x = p.x.copy().reshape(1, -1)
    z = p.z.copy().reshape(1, -1)
    signs = np.array([p.sign], dtype=np.int64)
    for gate in circ.gates:
        _gate_on_rows(x, z, signs, gate)
    return PauliVector(x=x[0], z=z[0], sign=int(signs[0]))


# ---------------------------------------------------------------------------
# Inverse-encoder Clifford synthesis

class _Tableau:
    def __init__(self, rows: np.ndarray, n: int):
        self.x = rows[:, :n].astype(np.uint8).copy()
        self.z = rows[:, n:].astype(np.uint8).copy()
        self.signs = np.ones(rows.shape[0], dtype=np.int64)
        self.gates: list[tuple] = []

    def apply(self, *gates: tuple) -> None:
        for g in gates:
            _gate_on_rows(self.x, self.z, self.signs, g)
            self.gates.append(g)

    def swap(self, a: int, b: int) -> None:
        if a != b:
            self.apply(("CNOT", a, b), ("CNOT", b, a), ("CNOT", a, b))


def _clear_row_to_x(tab: _Tableau, row: int, q: int, n: int, r: int) -> None:
    """Gate moves turning tableau row into X on qubit q (Z-junk below r)."""
    supp_x = [c for c in range(q, n) if tab.x[row, c]]
    supp_z = [c for c in range(q, n) if tab.z[row, c]]
    if supp_x:
        pivot = supp_x[0]
    else:
        pivot = supp_z[0]
        tab.apply(("H", pivot))
    tab.swap(q, pivot)
    for c in range(q + 1, n):
        if tab.z[row, c]:
            tab.apply(("CZ", q, c))
        if tab.x[row, c]:
            tab.apply(("CNOT", q, c))
    if tab.z[row, q]:
        tab.apply(("P", q))


def synth_q1(code: StabilizerCode) -> Circuit:
    """Clifford circuit conjugating the stabilizer to Z_1..Z_(n-k).

    Symplectic Gaussian elimination: generator i becomes +Z on qubit i,
    logical X/Z pairs become single-qubit X/Z on the last k qubits, with
    a trailing Pauli layer fixing all signs to +1.
    """
    n, k, r = code.n, code.k, code.n - code.k
    rows = code.normalizer_binary()  # stab rows, then logical X, logical Z
    tab = _Tableau(rows, n)

    for i in range(r):
        _clear_row_to_x(tab, i, i, n, r)
        tab.apply(("H", i))
        for j in range(i):
            if tab.z[i, j]:
                tab.apply(("CNOT", j, i))

    for a in range(k):
        q = r + a
        xrow, zrow = r + a, r + k + a
        _clear_row_to_x(tab, xrow, q, n, r)
        for j in range(r):
            if tab.z[xrow, j]:
                tab.apply(("CZ", j, q))
        # paired logical Z -> Z on the same qubit
        if tab.x[zrow, q]:
            tab.apply(("H", q), ("P", q), ("H", q))
        for c in range(q + 1, n):
            if tab.x[zrow, c] and tab.z[zrow, c]:
                tab.apply(("P", c))
            if tab.x[zrow, c]:
                tab.apply(("H", c))
            if tab.z[zrow, c]:
                tab.apply(("CNOT", c, q))
        for j in range(r):
            if tab.z[zrow, j]:
                tab.apply(("CNOT", j, q))

    for i in range(r):
        if tab.signs[i] < 0:
            tab.apply(("X", i))
    for a in range(k):
        if tab.signs[r + a] < 0:
            tab.apply(("Z", r + a))
        if tab.signs[r + k + a] < 0:
            tab.apply(("X", r + a))

    # verify the target pattern before returning
    for i in range(r):
        ok = (tab.signs[i] == 1 and not tab.x[i].any()
              and tab.z[i].sum() == 1 and tab.z[i, i] == 1)
        assert ok, f"stabilizer row {i} not reduced to +Z"
    for a in range(k):
        assert tab.x[r + a].sum() == 1 and tab.x[r + a, r + a] == 1 \
            and not tab.z[r + a].any(), f"logical X {a} not reduced"
        assert tab.z[r + k + a].sum() == 1 and tab.z[r + k + a, r + a] == 1 \
            and not tab.x[r + k + a].any(), f"logical Z {a} not reduced"
    return Circuit(n=n, gates=tuple(tab.gates))


def canonicalize_translations(code: UnionStabilizerCode,
                              q1: Circuit) -> list[str]:
    """Coset labels: X-pattern of each translation after conjugation by q1.

    The conjugated translations are reduced modulo the trivial code's
    normalizer — Z-parts and X on the last k logical qubits are dropped —
    leaving one (n-k)-bit string per translation, the identity first.
    """
    r = code.base.n - code.base.k
    labels = []
    for t in code.translations:
        image = conjugate(q1, t)
        labels.append("".join(str(int(b)) for b in image.x[:r]))
    if len(set(labels)) != len(labels):
        raise CollisionAfterReduction(
            "translations reduced to identical labels")
    return labels


def align_labels(code: UnionStabilizerCode, q1: Circuit,
                 targets: list[str]) -> Circuit:
    """Extends q1 with a CNOT layer mapping coset labels to given targets.

    CNOTs among the label qubits act as an invertible linear map on the
    X-patterns while keeping the stabilizer inside the single-qubit Z
    group, so the extended circuit still trivializes the code.  The i-th
    translation's label is sent to targets[i]; the identity must map to
    the zero string.
    """
    raw = canonicalize_translations(code, q1)
    if len(targets) != len(raw):
        raise BadParams("one target label per translation required")
    r = len(raw[0])
    pairs = [(s, t) for s, t in zip(raw, targets) if int(s, 2)]
    for s, t in zip(raw, targets):
        if not int(s, 2) and int(t, 2):
            raise BadParams("the identity translation must map to zero")
    L = np.array([[int(c) for c in s] for s, _ in pairs], np.uint8)
    P = np.array([[int(c) for c in t] for _, t in pairs], np.uint8)
    if gf2.rref(L.copy())[2] != r:
        raise BadParams("raw labels do not span the label space")
    m = np.zeros((r, r), np.uint8)
    for j in range(r):
        sol = gf2.solve(L, P[:, j])
        if sol is None:
            raise BadParams("target labels are not a linear image of raw ones")
        m[:, j] = sol
    if gf2.rref(m.copy())[2] != r:
        raise BadParams("label map is singular")
    # decompose m into elementary row additions = CNOT gates
    gates = []
    work = m.copy()
    for j in range(r):
        if not work[j, j]:
            i = next(i for i in range(r) if i != j and work[i, j])
            work[j] ^= work[i]
            gates.append(("CNOT", j, i))
        for i in range(r):
            if i != j and work[i, j]:
                work[i] ^= work[j]
                gates.append(("CNOT", i, j))
    assert np.array_equal(work, np.eye(r, dtype=np.uint8))
    aligned = Circuit(n=q1.n, gates=q1.gates + tuple(gates))
    assert canonicalize_translations(code, aligned) == list(targets)
    return aligned


# ---------------------------------------------------------------------------
# Reversible synthesis over {X, CNOT, CCX}

def _bit_gates(w: int, gate_set: tuple) -> list[tuple]:
    gates = []
    if "X" in gate_set:
        gates += [("X", q) for q in range(w)]
    if "CNOT" in gate_set:
        gates += [("CNOT", c, t) for c in range(w) for t in range(w)
                  if c != t]
    if "CCX" in gate_set:
        gates += [("CCX", a, b, t) for a in range(w) for b in range(a + 1, w)
                  for t in range(w) if t != a and t != b]
    return gates


def _packed_op(gate: tuple, w: int, fields: int):
    """Vectorized action of a classical gate on packed K-tuples of w bits."""
    def bitpos(q):  # qubit 0 is the leftmost / most significant bit
        return w - 1 - q

    stride = np.uint64(w)
    field_mask = np.uint64(0)
    for i in range(fields):
        field_mask |= np.uint64(1) << (np.uint64(i) * stride)

    if gate[0] == "X":
        m = field_mask << np.uint64(bitpos(gate[1]))
        return lambda a: a ^ m
    if gate[0] == "CNOT":
        pc, pt = bitpos(gate[1]), bitpos(gate[2])
        mt = field_mask << np.uint64(pt)

        def op(a):
            src = a >> np.uint64(pc - pt) if pc >= pt \
                else a << np.uint64(pt - pc)
            return a ^ (src & mt)
        return op
    pa, pb, pt = (bitpos(q) for q in gate[1:])
    mt = field_mask << np.uint64(pt)

    def op(a):
        sa = a >> np.uint64(pa - pt) if pa >= pt else a << np.uint64(pt - pa)
        sb = a >> np.uint64(pb - pt) if pb >= pt else a << np.uint64(pt - pb)
        return a ^ (sa & sb & mt)
    return op


def synth_qc(inputs: list[str], gate_set: tuple = ("X", "CNOT", "CCX"),
             max_gates: int = 10) -> Circuit:
    """Minimum-gate reversible circuit mapping input i to binary(i).

    Meet-in-the-middle breadth-first search: backward levels of depth at
    most three from the target tuple meet forward levels expanded with
    numpy-deduplicated frontiers, giving the same exhaustive guarantee
    as plain breadth-first search over gate sequences.
    """
    K = len(inputs)
    if K == 0 or K > 64:
        raise BadParams("need between 1 and 64 input strings")
    w = len(inputs[0])
    if w > 8 or any(len(s) != w for s in inputs):
        raise BadParams("inputs must share one width of at most 8 bits")
    if len(set(inputs)) != K:
        raise BadParams("inputs must be distinct")
    if K > (1 << w):
        raise BadParams("more inputs than w-bit strings")
    if K * w > 64:
        raise BadParams("packed search supports K*w <= 64")

    def pack(vals):
        acc = 0
        for i, v in enumerate(vals):
            acc |= v << (w * i)
        return np.uint64(acc)

    start = pack([int(s, 2) for s in inputs])
    target = pack(list(range(K)))
    gates = _bit_gates(w, tuple(gate_set))
    ops = [_packed_op(g, w, K) for g in gates]

    if start == target:
        return Circuit(n=w, gates=())

    # backward levels: state -> (depth, gate path to target)
    back_depth = min(3, max_gates)
    back = {int(target): (0, ())}
    frontier = [int(target)]
    for depth in range(1, back_depth + 1):
        nxt = []
        for s in frontier:
            sv = np.uint64(s)
            for g, op in zip(gates, ops):
                t = int(op(sv))
                if t not in back:
                    back[t] = (depth, (g,) + back[s][1])
                    nxt.append(t)
        frontier = nxt

    # forward levels as deduplicated packed arrays
    levels = [np.array([start], dtype=np.uint64)]
    for f in range(0, max_gates + 1):
        hits = [s for s in levels[f].tolist() if s in back]
        if hits:
            best = min((f + back[s][0], s) for s in hits)
            total, state = best
            if total > max_gates:
                break
            fwd = _reconstruct_forward(state, f, levels, gates, ops)
            return Circuit(n=w, gates=tuple(fwd + list(back[state][1])))
        if f + back_depth >= max_gates:
            break
        chunks = [op(levels[f]) for op in ops]
        nxt = np.unique(np.concatenate(chunks))
        levels.append(nxt)
    raise NotFound(max_gates)


def synth_qc_any_order(inputs: list[str],
                       gate_set: tuple = ("X", "CNOT", "CCX"),
                       max_gates: int = 10) -> tuple[Circuit, tuple]:
    """Minimum-gate circuit over all input-to-index assignments.

    Relaxes the fixed counting-order convention of synth_qc: every
    bijection sending the inputs to 0..K-1 is tried (the all-zero input,
    if present, stays at index 0), and the overall minimum-gate circuit
    is returned together with the winning ordering, i.e. the permuted
    input list such that input i maps to binary(i).
    """
    import itertools
    K = len(inputs)
    if K > 8:
        raise BadParams("assignment scan supports at most 8 inputs")
    zero = "0" * len(inputs[0])
    movable = [i for i, s in enumerate(inputs) if s != zero]
    fixed = [i for i, s in enumerate(inputs) if s == zero]
    best = None
    for perm in itertools.permutations(movable):
        order = tuple(fixed) + perm
        try:
            circ = synth_qc([inputs[i] for i in order], gate_set,
                            max_gates if best is None else len(best[0]))
        except NotFound:
            continue
        cand = (circ, order)
        if best is None or (len(circ), circ.gates) < (len(best[0]),
                                                      best[0].gates):
            best = cand
    if best is None:
        raise NotFound(max_gates)
    return best


def _reconstruct_forward(state: int, f: int, levels, gates, ops) -> list:
    path = []
    cur = np.uint64(state)
    for depth in range(f, 0, -1):
        prev_level = levels[depth - 1]
        for g, op in zip(gates, ops):
            cand = op(cur)
            pos = np.searchsorted(prev_level, cand)
            if pos < prev_level.size and prev_level[pos] == cand:
                path.append(g)
                cur = cand
                break
        else:
            raise AssertionError("forward path reconstruction failed")
    return path[::-1]


# ---------------------------------------------------------------------------
# Dense simulation

def _check_size(n: int) -> None:
    if n > MAX_SIM_QUBITS:
        raise TooManyQubits(f"{n} qubits exceeds the {MAX_SIM_QUBITS} cap")


def simulate(circ: Circuit, state: np.ndarray) -> np.ndarray:
    """Applies the circuit to a statevector (qubit 0 = leftmost bit)."""
    n = circ.n
    _check_size(n)
    if state.shape != (1 << n,):
        raise BadParams("statevector length mismatch")
    t = state.astype(np.complex128).reshape((2,) * n)
    for gate in circ.gates:
        name = gate[0]
        if name == "H":
            q = gate[1]
            a = np.take(t, 0, axis=q)
            b = np.take(t, 1, axis=q)
            t = np.stack([(a + b), (a - b)], axis=q) / math.sqrt(2)
        elif name == "P":
            q = gate[1]
            idx = [slice(None)] * n
            idx[q] = 1
            t = t.copy()
            t[tuple(idx)] *= 1j
        elif name == "X":
            t = np.flip(t, axis=gate[1])
        elif name == "Z":
            idx = [slice(None)] * n
            idx[gate[1]] = 1
            t = t.copy()
            t[tuple(idx)] *= -1
        elif name == "CNOT":
            c, q = gate[1], gate[2]
            idx = [slice(None)] * n
            idx[c] = 1
            t = t.copy()
            t[tuple(idx)] = np.flip(t[tuple(idx)], axis=q - (q > c))
        elif name == "CZ":
            a, b = gate[1], gate[2]
            idx = [slice(None)] * n
            idx[a] = 1
            idx[b] = 1
            t = t.copy()
            t[tuple(idx)] *= -1
        elif name == "CCX":
            c1, c2, q = gate[1], gate[2], gate[3]
            idx = [slice(None)] * n
            idx[c1] = 1
            idx[c2] = 1
            axis = q - (q > c1) - (q > c2)
            t = t.copy()
            t[tuple(idx)] = np.flip(t[tuple(idx)], axis=axis)
    return t.reshape(-1)


def apply_pauli(p: PauliVector, state: np.ndarray) -> np.ndarray:
    """Applies the Hermitian Pauli to a statevector."""
    n = p.x.shape[0]
    _check_size(n)
    shifts = np.arange(n - 1, -1, -1)
    xint = int((p.x.astype(np.int64) << shifts).sum())
    zint = int((p.z.astype(np.int64) << shifts).sum())
    idx = np.arange(1 << n)
    zpar = np.zeros(1 << n, dtype=np.int64)
    masked = idx & zint
    while masked.any():
        zpar ^= masked & 1
        masked >>= 1
    phase = p.sign * (1j ** int((p.x & p.z).sum())) * (1 - 2 * zpar)
    return (phase * state)[idx ^ xint]


def code_basis(code: UnionStabilizerCode) -> list[np.ndarray]:
    """Orthonormal basis: translated projections of computational states."""
    base = code.base
    n, k = base.n, base.k
    if n > 10:
        raise TooManyQubits(f"{n} qubits exceeds the basis-building cap")
    dim = 1 << n
    root = None
    for seed in range(dim):
        v = np.zeros(dim, dtype=np.complex128)
        v[seed] = 1.0
        for s in base.stab:
            v = (v + apply_pauli(s, v)) / 2
        norm = np.linalg.norm(v)
        if norm > 1e-9:
            root = v / norm
            break
    assert root is not None
    core = []
    for j in range(1 << k):
        v = root
        for a in range(k):
            if (j >> (k - 1 - a)) & 1:
                v = apply_pauli(base.logical_x[a], v)
        core.append(v)
    states = []
    for t in code.translations:
        for v in core:
            states.append(apply_pauli(t, v))
    gram = np.array([[np.vdot(a, b) for b in states] for a in states])
    assert np.allclose(gram, np.eye(len(states)), atol=1e-9), \
        "translated basis is not orthonormal"
    return states


@dataclass(frozen=True)
class KLReport:
    ok: bool
    worst_deviation: float
    num_checked: int
    violations: list = field(default_factory=list)


def kl_verify(states: list[np.ndarray], d: int) -> KLReport:
    """Knill-Laflamme check: <a|E|b> = lambda_E * I for all wgt(E) < d."""
    K = len(states)
    n = int(round(math.log2(states[0].shape[0])))
    mat = np.array(states)
    worst = 0.0
    violations = []
    checked = 0
    for p in _paulis_up_to_weight(n, d - 1):
        imgs = np.array([apply_pauli(p, s) for s in states])
        m = mat.conj() @ imgs.T
        lam = np.trace(m) / K
        dev = float(np.abs(m - lam * np.eye(K)).max())
        worst = max(worst, dev)
        checked += 1
        if dev > 1e-8:
            violations.append(pauli_str(p))
    return KLReport(ok=not violations, worst_deviation=worst,
                    num_checked=checked, violations=violations[:16])


def _paulis_up_to_weight(n: int, wmax: int):
    import itertools
    letters = ((1, 0), (0, 1), (1, 1))  # X, Z, Y as (x, z)
    for w in range(1, wmax + 1):
        for pos in itertools.combinations(range(n), w):
            for combo in itertools.product(letters, repeat=w):
                x = np.zeros(n, dtype=np.uint8)
                z = np.zeros(n, dtype=np.uint8)
                for q, (xb, zb) in zip(pos, combo):
                    x[q], z[q] = xb, zb
                yield PauliVector(x=x, z=z)


@dataclass(frozen=True)
class EncoderReport:
    ok: bool
    worst_overlap: float
    mismatches: list = field(default_factory=list)


def full_encoder_check(code: UnionStabilizerCode, q1: Circuit,
                       qc: Circuit) -> EncoderReport:
    """Checks q1 then qc maps basis state i to |0..0 binary(i)> (phase-free).

    qc acts on the first n-k label qubits; every code basis state must
    land on the computational state whose integer value is its index.
    """
    n, k = code.base.n, code.base.k
    qc_full = Circuit(n=n, gates=qc.gates)
    states = code_basis(code)
    worst = 1.0
    mismatches = []
    for i, s in enumerate(states):
        out = simulate(qc_full, simulate(q1, s))
        label, j = i >> k, i & ((1 << k) - 1)
        target = (label << k) | j
        overlap = abs(out[target])
        worst = min(worst, overlap)
        if overlap < 1 - 1e-8:
            mismatches.append((i, overlap))
    return EncoderReport(ok=not mismatches, worst_overlap=worst,
                         mismatches=mismatches)


# ---------------------------------------------------------------------------
# Circuit text format

def format_circuit(circ: Circuit) -> str:
    lines = [f"# circuit on {circ.n} qubits"]
    for g in circ.gates:
        lines.append(" ".join([g[0]] + [str(q + 1) for q in g[1:]]))
    return "\n".join(lines) + "\n"


def parse_circuit(text: str, n: int) -> Circuit:
    gates = []
    for ln in text.splitlines():
        ln = ln.split("#")[0].strip()
        if not ln:
            continue
        parts = ln.split()
        name = parts[0].upper()
        if name not in _GATE_ARITY:
            raise BadParams(f"unknown gate {name!r}")
        qubits = tuple(int(p) - 1 for p in parts[1:])
        gates.append((name,) + qubits)
    return Circuit(n=n, gates=tuple(gates))
