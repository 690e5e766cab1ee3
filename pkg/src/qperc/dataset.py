"""Exhaustive labeled datasets for a fixed optimal weight.

For n data qubits every value in [0, 2^(2^n) - 1] is evaluated against the
optimal weight and labeled 1 when the ancilla probability reaches 0.5 and 0
otherwise (ties go to 1). The measured probability is stored next to each
label so a loaded file can be audited without re-running the circuits.

On disk a dataset is a CSV file with header `value,label,probability` plus
a JSON sidecar at `<path>.meta.json` carrying n, the optimal weight, and
the measurement provenance (mode, shots, seed). Probabilities are written
with 12 significant digits; identical generation settings produce byte
identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .ioutil import atomic_write_text
from .perceptron import PerceptronConfig, _check_value, measure

CSV_HEADER = "value,label,probability"

_META_KEYS = ("mode", "n", "optimal_weight", "seed", "shots")


@dataclass(frozen=True)
class LabeledExample:
    value: int
    label: int
    probability: float


@dataclass
class Dataset:
    """All 2^(2^n) labeled values plus the settings that produced them."""

    n: int
    optimal_weight: int
    examples: list[LabeledExample]
    mode: str
    shots: int
    seed: int


def label_from_probability(probability: float) -> int:
    """1 when the probability reaches the 0.5 threshold, else 0."""
    return 1 if probability >= 0.5 else 0


def generate_dataset(optimal_weight: int, config: PerceptronConfig) -> Dataset:
    """Label every value in ascending order against `optimal_weight`."""
    m = _check_value(optimal_weight, config.n, "optimal weight")
    examples = []
    for value in range(1 << m):
        p = measure(value, optimal_weight, config)
        examples.append(LabeledExample(value, label_from_probability(p), p))
    return Dataset(
        n=config.n,
        optimal_weight=optimal_weight,
        examples=examples,
        mode=config.mode,
        shots=config.shots,
        seed=config.seed,
    )


def _meta_path(path: str | Path) -> Path:
    return Path(str(path) + ".meta.json")


def save_dataset(dataset: Dataset, path: str | Path) -> None:
    """Write the CSV rows and the JSON sidecar, both atomically."""
    lines = [CSV_HEADER]
    for ex in dataset.examples:
        lines.append(f"{ex.value},{ex.label},{format(ex.probability, '.12g')}")
    atomic_write_text(path, "\n".join(lines) + "\n")
    meta = {
        "n": dataset.n,
        "optimal_weight": dataset.optimal_weight,
        "mode": dataset.mode,
        "shots": dataset.shots,
        "seed": dataset.seed,
    }
    atomic_write_text(
        _meta_path(path), json.dumps(meta, sort_keys=True, indent=2) + "\n"
    )


class DatasetFormatError(ValueError):
    """A dataset file that cannot be parsed or violates its own invariants."""


def _parse_meta(path: Path) -> dict:
    try:
        raw = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise DatasetFormatError(f"missing dataset sidecar {path}") from None
    try:
        meta = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise DatasetFormatError(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(meta, dict):
        raise DatasetFormatError(f"{path}: expected a JSON object")
    for key in _META_KEYS:
        if key not in meta:
            raise DatasetFormatError(f"{path}: missing field {key!r}")
    if not isinstance(meta["n"], int) or not 1 <= meta["n"] <= 4:
        raise DatasetFormatError(f"{path}: field 'n' must be an integer in [1, 4]")
    return meta


def load_dataset(path: str | Path) -> Dataset:
    """Parse and validate a dataset written by save_dataset.

    Raises DatasetFormatError naming the offending line and field when the
    CSV is malformed, a label is out of range, a label disagrees with its
    stored probability, or the value column does not cover the full range
    in ascending order.
    """
    path = Path(path)
    meta = _parse_meta(_meta_path(path))
    m = 1 << meta["n"]
    expected_rows = 1 << m

    text = path.read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines:
        raise DatasetFormatError(f"{path}: empty file")
    if lines[0] != CSV_HEADER:
        raise DatasetFormatError(
            f"{path}: line 1: expected header {CSV_HEADER!r}, got {lines[0]!r}"
        )
    body = lines[1:]
    if len(body) != expected_rows:
        raise DatasetFormatError(
            f"{path}: expected {expected_rows} rows for n={meta['n']}, "
            f"got {len(body)}"
        )

    examples = []
    for row_index, line in enumerate(body):
        lineno = row_index + 2
        fields = line.split(",")
        if len(fields) != 3:
            raise DatasetFormatError(
                f"{path}: line {lineno}: expected 3 fields, got {len(fields)}"
            )
        try:
            value = int(fields[0])
        except ValueError:
            raise DatasetFormatError(
                f"{path}: line {lineno}: field 'value': "
                f"not an integer: {fields[0]!r}"
            ) from None
        try:
            label = int(fields[1])
        except ValueError:
            raise DatasetFormatError(
                f"{path}: line {lineno}: field 'label': "
                f"not an integer: {fields[1]!r}"
            ) from None
        try:
            probability = float(fields[2])
        except ValueError:
            raise DatasetFormatError(
                f"{path}: line {lineno}: field 'probability': "
                f"not a number: {fields[2]!r}"
            ) from None
        if value != row_index:
            raise DatasetFormatError(
                f"{path}: line {lineno}: field 'value': expected {row_index} "
                f"(ascending, gap-free), got {value}"
            )
        if label not in (0, 1):
            raise DatasetFormatError(
                f"{path}: line {lineno}: field 'label': must be 0 or 1, got {label}"
            )
        if not 0.0 <= probability <= 1.0 + 1e-9:
            raise DatasetFormatError(
                f"{path}: line {lineno}: field 'probability': "
                f"out of [0, 1]: {probability}"
            )
        if label != label_from_probability(probability):
            raise DatasetFormatError(
                f"{path}: line {lineno}: field 'label': {label} disagrees "
                f"with probability {probability}"
            )
        examples.append(LabeledExample(value, label, probability))

    return Dataset(
        n=meta["n"],
        optimal_weight=meta["optimal_weight"],
        examples=examples,
        mode=meta["mode"],
        shots=meta["shots"],
        seed=meta["seed"],
    )
