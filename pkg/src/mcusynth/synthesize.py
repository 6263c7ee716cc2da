"""Decompose n-controlled single-qubit unitaries into cnot + controlled-V.

The construction: pick v with v^(2^(n-1)) = u.  For every nonempty subset of
the control wires, fold the subset's xor-parity onto its last wire with a
cnot chain, apply controlled-v (odd subsets) or controlled-v-adjoint (even
subsets) from that wire to the target, and uncompute the chain.  Powers of v
on the target commute, so for control bits x the target collects

    v ** (alternating parity sum of x)  ==  v ** (2^(n-1) * prod x)  ==  u ** (prod x)

i.e. u fires exactly when every control is 1.  The block list is the same
canonical subset enumeration the identity engine uses (size ascending,
lexicographic within size).

The emitted circuits are naive compute/apply/uncompute blocks; adjacent
blocks often share cnots, which ``peephole_cancel`` removes as an explicit,
separate pass.  Gate totals grow exponentially by design: 2^n - 1 cv-kind
gates and 2*(n*2^(n-1) - 2^n + 1) cnots.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuit import CNOT, CV, CVDG, Circuit, Gate, cnot, cv, cvdg
from .simulator import MAX_WIDTH, circuit_unitary, operator_distance, reference_mcu
from .unitary2 import INGEST_ATOL, require_unitary, unitary_root
from .z2identity import SignedParityTerm, signed_parity_terms


@dataclass(frozen=True, eq=False)
class SynthesisPlan:
    """Everything needed to emit one decomposition: the root and the blocks."""

    n_controls: int
    target_u: np.ndarray
    v: np.ndarray
    blocks: tuple[SignedParityTerm, ...]


def make_plan(n: int, u: np.ndarray) -> SynthesisPlan:
    """Root v = u^(1/2^(n-1)) plus the canonical signed block list."""
    if n < 1:
        raise ValueError(f"need n >= 1 controls, got {n}")
    u = require_unitary(u, atol=INGEST_ATOL)
    v = unitary_root(u, n - 1)
    return SynthesisPlan(
        n_controls=n,
        target_u=u,
        v=v,
        blocks=tuple(signed_parity_terms(n)),
    )


def _block_gates(term: SignedParityTerm, target: int) -> list[Gate]:
    subset = term.subset
    apply_gate = cv if term.sign > 0 else cvdg
    if len(subset) == 1:
        return [apply_gate(subset[0], target)]
    chain = [cnot(subset[i], subset[i + 1]) for i in range(len(subset) - 1)]
    return chain + [apply_gate(subset[-1], target)] + chain[::-1]


def synth_mcu(n: int, u: np.ndarray, verify: bool = False, atol: float = 1e-9) -> Circuit:
    """Synthesize the n-controlled-u circuit on n + 1 qubits.

    Controls are qubits 0..n-1, the target is qubit n.  With ``verify`` the
    result is simulated and compared against the reference operator before
    being returned (only possible up to the dense-simulation width cap).
    """
    plan = make_plan(n, u)
    gates: list[Gate] = []
    for term in plan.blocks:
        gates.extend(_block_gates(term, n))
    result = Circuit(n + 1, gates, plan.v)
    if verify:
        if result.width > MAX_WIDTH:
            raise ValueError(
                f"cannot verify inline: width {result.width} exceeds cap {MAX_WIDTH}"
            )
        distance = operator_distance(circuit_unitary(result), reference_mcu(n, u))
        if distance >= atol:
            raise AssertionError(
                f"synthesized circuit is off by {distance:.3e} (tolerance {atol})"
            )
    return result


def synth_cu(u: np.ndarray) -> Circuit:
    """Singly controlled u: one cv gate with v bound to u itself."""
    return Circuit(2, (cv(0, 1),), require_unitary(u, atol=INGEST_ATOL))


def synth_ccu(u: np.ndarray) -> Circuit:
    """Doubly controlled u via the square root v of u.

    The explicit five-gate sequence: cv(0,2), cv(1,2), cnot(0,1), cvdg(1,2),
    cnot(0,1).  The target collects v^(x + y - (x xor y)) = v^(2xy) = u^(xy).
    """
    v = unitary_root(u, 1)
    gates = (cv(0, 2), cv(1, 2), cnot(0, 1), cvdg(1, 2), cnot(0, 1))
    return Circuit(3, gates, v)


def synth_cccu(u: np.ndarray) -> Circuit:
    """Triply controlled u (the fourth root of u does the work)."""
    return synth_mcu(3, u)


def _cancels(a: Gate, b: Gate) -> bool:
    if a.control != b.control or a.target != b.target:
        return False
    kinds = {a.kind, b.kind}
    return kinds == {CNOT} or kinds == {CV, CVDG}


def peephole_cancel(circuit: Circuit) -> Circuit:
    """Remove adjacent mutually-inverse gate pairs until none remain.

    Cancels (cnot, cnot) and (cv, cvdg) in either order on identical wires.
    The stack walk reaches the fixpoint in one pass, so the result is
    idempotent; the simulated operator is unchanged and the gate count never
    increases.
    """
    kept: list[Gate] = []
    for gate in circuit.gates:
        if kept and _cancels(kept[-1], gate):
            kept.pop()
        else:
            kept.append(gate)
    return Circuit(circuit.width, kept, circuit.v_binding)


def net_v_exponent(circuit: Circuit, control_bits) -> int:
    """Net V-power applied to the last wire for classical control bits.

    Walks the circuit symbolically: cnots update the classical wire values,
    each cv (cvdg) with a hot control adds +1 (-1).  No matrices involved.
    Raises if a cnot touches the last wire or a cv-kind gate targets
    anything else, since then the trace is not classical.
    """
    target = circuit.width - 1
    bits = list(control_bits)
    if len(bits) != target:
        raise ValueError(f"expected {target} control bits, got {len(bits)}")
    if any(b not in (0, 1) for b in bits):
        raise ValueError("control bits must be 0 or 1")
    exponent = 0
    for gate in circuit.gates:
        if gate.kind == CNOT:
            if gate.control == target or gate.target == target:
                raise ValueError(f"cnot on the target wire breaks the classical trace: {gate}")
            bits[gate.target] ^= bits[gate.control]
        else:
            if gate.target != target:
                raise ValueError(f"cv-kind gate off the target wire: {gate}")
            if bits[gate.control]:
                exponent += 1 if gate.kind == CV else -1
    return exponent
