"""Quantum perceptron simulator.

Binary patterns are encoded as +1/-1 sign vectors on the amplitudes of a
uniform superposition; the overlap between an input pattern and a weight
pattern is read off an ancilla qubit. The package covers single
evaluations (circuit and closed form), exhaustive probability sweeps,
labeled dataset generation, bit-flip training, and pattern rendering.
"""

from .dataset import (
    Dataset,
    DatasetFormatError,
    LabeledExample,
    generate_dataset,
    label_from_probability,
    load_dataset,
    save_dataset,
)
from .perceptron import (
    DEFAULT_SHOTS,
    MAX_DATA_QUBITS,
    PerceptronConfig,
    SignVector,
    assemble_perceptron_circuit,
    build_input_prep,
    build_sign_oracle,
    build_weight_unprep,
    closed_form_probability,
    encode_value,
    measure,
)
from .render import PatternGrid, pattern_grid, render_ascii, render_pgm
from .statevector import (
    MAX_QUBITS,
    Circuit,
    GateOp,
    StateVector,
    apply_gate,
    h,
    mcx,
    mcz,
    new_zero_state,
    prob_qubit_one,
    run_circuit,
    sample_qubit,
    x,
)
from .sweep import (
    MAX_SWEEP_QUBITS,
    SweepMatrix,
    compute_sweep,
    load_sweep_csv,
    sample_sweep_cells,
    save_sweep,
)
from .training import (
    TrainConfig,
    TrainResult,
    TrainStep,
    count_non_matching_bits,
    flip_bits,
    init_weight,
    load_trace,
    save_trace,
    train,
)

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "Dataset",
    "DatasetFormatError",
    "DEFAULT_SHOTS",
    "GateOp",
    "LabeledExample",
    "MAX_DATA_QUBITS",
    "MAX_QUBITS",
    "MAX_SWEEP_QUBITS",
    "PatternGrid",
    "PerceptronConfig",
    "SignVector",
    "StateVector",
    "SweepMatrix",
    "TrainConfig",
    "TrainResult",
    "TrainStep",
    "apply_gate",
    "assemble_perceptron_circuit",
    "build_input_prep",
    "build_sign_oracle",
    "build_weight_unprep",
    "closed_form_probability",
    "compute_sweep",
    "count_non_matching_bits",
    "encode_value",
    "flip_bits",
    "generate_dataset",
    "h",
    "init_weight",
    "label_from_probability",
    "load_dataset",
    "load_sweep_csv",
    "load_trace",
    "mcx",
    "mcz",
    "measure",
    "new_zero_state",
    "pattern_grid",
    "prob_qubit_one",
    "render_ascii",
    "render_pgm",
    "run_circuit",
    "sample_qubit",
    "sample_sweep_cells",
    "save_dataset",
    "save_sweep",
    "save_trace",
    "train",
    "x",
]
