"""Binary-pattern perceptron on a state-vector simulator.

An integer value in [0, 2^m) with m = 2^n encodes an m-entry sign vector,
MSB first: bit 1 becomes -1 and bit 0 becomes +1. Input preparation maps
|0...0> to the normalized superposition whose amplitudes are those signs
over sqrt(m); weight unpreparation inverts that map for the weight value
and then flips every data qubit, so the overlap of input and weight ends
up as the amplitude of |1...1>. A final MCX copies that indicator onto an
ancilla (qubit n), and the probability of reading the ancilla as 1 equals
the squared normalized dot product of the two sign vectors:

    P(1) = ((sum_j i_j * w_j) / m)^2

`closed_form_probability` evaluates that expression directly with integer
arithmetic and is the reference every circuit result can be checked
against.

The sign flips are realized gate by gate: for each position j carrying -1
an MCZ over all n data qubits is conjugated by X on the qubits whose bit
in j is 0, which flips the phase of exactly |j>. The construction costs at
most m MCZ and 2*m*n X gates per sign vector.
"""

from __future__ import annotations

from dataclasses import dataclass

from .statevector import (
    Circuit,
    h,
    mcx,
    mcz,
    new_zero_state,
    prob_qubit_one,
    run_circuit,
    sample_qubit,
    x,
)

MAX_DATA_QUBITS = 4

MODES = ("exact", "sampled")

DEFAULT_SHOTS = 8192


@dataclass(frozen=True)
class PerceptronConfig:
    """Evaluation settings shared by single measurements and batch runs.

    n      number of data qubits, 1 to 4 (values then range over 2^(2^n))
    shots  Bernoulli draws per sampled measurement
    mode   "exact" reads the ancilla probability off the state vector,
           "sampled" estimates it from `shots` seeded draws
    seed   RNG seed for sampled mode; ignored when mode is "exact"
    """

    n: int
    shots: int = DEFAULT_SHOTS
    mode: str = "exact"
    seed: int = 0

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DATA_QUBITS:
            raise ValueError(
                f"n must be between 1 and {MAX_DATA_QUBITS}, got {self.n}"
            )
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.mode == "sampled" and self.shots < 1:
            raise ValueError(f"shots must be at least 1, got {self.shots}")


@dataclass(frozen=True)
class SignVector:
    """An m-entry vector of +1/-1 signs decoded from an integer value."""

    n: int
    signs: tuple[int, ...]
    source_value: int

    @property
    def m(self) -> int:
        return 1 << self.n


def _check_value(value: int, n: int, what: str) -> int:
    m = 1 << n
    if not 0 <= value < (1 << m):
        raise ValueError(
            f"{what} must be in [0, {(1 << m) - 1}] for n={n}, got {value}"
        )
    return m


def encode_value(value: int, n: int) -> SignVector:
    """Decode `value` into its sign vector, MSB first.

    Bit j of the m-bit expansion (position 0 = most significant) maps to
    signs[j]: a set bit becomes -1, a clear bit +1. encode_value(12, 2)
    gives (-1, -1, 1, 1).
    """
    m = _check_value(value, n, "value")
    signs = tuple(-1 if (value >> (m - 1 - j)) & 1 else 1 for j in range(m))
    return SignVector(n=n, signs=signs, source_value=value)


def build_sign_oracle(sign_vector: SignVector) -> Circuit:
    """Diagonal circuit flipping the phase of |j> wherever signs[j] is -1."""
    n = sign_vector.n
    m = 1 << n
    all_qubits = range(n)
    ops = []
    for j, sign in enumerate(sign_vector.signs):
        if sign == 1:
            continue
        zero_qubits = [q for q in all_qubits if not (j >> (n - 1 - q)) & 1]
        for q in zero_qubits:
            ops.append(x(q))
        ops.append(mcz(all_qubits))
        for q in zero_qubits:
            ops.append(x(q))
    return Circuit(n, ops)


def build_input_prep(value: int, n: int) -> Circuit:
    """Map |0...0> to the sign-encoded superposition for `value`."""
    _check_value(value, n, "input value")
    ops = [h(q) for q in range(n)]
    ops.extend(build_sign_oracle(encode_value(value, n)).ops)
    return Circuit(n, ops)


def build_weight_unprep(weight: int, n: int) -> Circuit:
    """Map the sign-encoded state for `weight` to |1...1>.

    Runs the weight's own sign oracle (self-inverse), undoes the Hadamard
    layer, then flips every qubit so a perfect match lands on |1...1>.
    """
    _check_value(weight, n, "weight")
    ops = list(build_sign_oracle(encode_value(weight, n)).ops)
    ops.extend(h(q) for q in range(n))
    ops.extend(x(q) for q in range(n))
    return Circuit(n, ops)


def assemble_perceptron_circuit(input_value: int, weight: int, n: int) -> Circuit:
    """Full evaluation circuit on n data qubits plus the ancilla (qubit n)."""
    ops = list(build_input_prep(input_value, n).ops)
    ops.extend(build_weight_unprep(weight, n).ops)
    ops.append(mcx(range(n), n))
    return Circuit(n + 1, ops)


def closed_form_probability(input_value: int, weight: int, n: int) -> float:
    """Reference ancilla probability, no circuit involved.

    Computes ((sum_j i_j * w_j) / m)^2 with integer arithmetic and a single
    final division, so it is exact up to one float rounding.
    """
    m = _check_value(input_value, n, "input value")
    _check_value(weight, n, "weight")
    in_signs = encode_value(input_value, n).signs
    w_signs = encode_value(weight, n).signs
    dot = sum(a * b for a, b in zip(in_signs, w_signs))
    return (dot * dot) / (m * m)


def measure(input_value: int, weight: int, config: PerceptronConfig) -> float:
    """Evaluate the perceptron circuit and read out the ancilla.

    Exact mode returns the ancilla's probability of 1 from the final state
    vector; sampled mode estimates it with config.shots draws seeded by
    config.seed.
    """
    circuit = assemble_perceptron_circuit(input_value, weight, config.n)
    state = run_circuit(circuit, new_zero_state(circuit.num_qubits))
    if config.mode == "exact":
        return prob_qubit_one(state, config.n)
    return sample_qubit(state, config.n, config.shots, config.seed)
