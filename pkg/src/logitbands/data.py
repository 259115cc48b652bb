"""Binomial regression data: ingestion, validation and the bundled mutagenicity set.

Rows are stored in grouped form ``(x, successes, trials)``.  Bernoulli
files (``x, y``) are read as rows with ``trials == 1``; duplicate x values
are kept as separate rows.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from typing import Literal

import numpy as np

from .errors import DegenerateDesignError, ParseError, ValidationError

Schema = Literal["bernoulli", "binomial"]

_COLUMNS: dict[str, tuple[str, ...]] = {
    "bernoulli": ("x", "y"),
    "binomial": ("x", "successes", "trials"),
}


@dataclass(frozen=True)
class Observation:
    x: float
    successes: int
    trials: int

    def __post_init__(self):
        if not math.isfinite(self.x):
            raise ValidationError(f"x must be finite, got {self.x!r}")
        if self.trials < 1:
            raise ValidationError(f"trials must be positive, got {self.trials}")
        if self.successes < 0:
            raise ValidationError(f"successes must be nonnegative, got {self.successes}")
        if self.successes > self.trials:
            raise ValidationError(
                f"successes ({self.successes}) exceed trials ({self.trials})"
            )


@dataclass(frozen=True)
class Dataset:
    """An ordered, immutable sequence of observations.

    Construction fails with :class:`DegenerateDesignError` unless there are
    at least two rows with at least two distinct x values.
    """

    observations: tuple[Observation, ...]

    def __post_init__(self):
        object.__setattr__(self, "observations", tuple(self.observations))
        if len(self.observations) < 2:
            raise DegenerateDesignError(
                f"need at least 2 observations, got {len(self.observations)}"
            )
        if len({o.x for o in self.observations}) < 2:
            raise DegenerateDesignError("need at least two distinct x values")

    def __len__(self) -> int:
        return len(self.observations)

    def __iter__(self):
        return iter(self.observations)

    def __getitem__(self, i: int) -> Observation:
        return self.observations[i]

    @classmethod
    def from_arrays(cls, x, successes, trials=None) -> "Dataset":
        x = np.asarray(x, dtype=float)
        s = np.asarray(successes)
        t = np.ones_like(s) if trials is None else np.asarray(trials)
        return cls(
            tuple(Observation(float(a), int(b), int(c)) for a, b, c in zip(x, s, t))
        )

    # Array views are what the fitting code consumes.
    @cached_property
    def x(self) -> np.ndarray:
        return _readonly(np.array([o.x for o in self.observations], dtype=float))

    @cached_property
    def successes(self) -> np.ndarray:
        return _readonly(np.array([o.successes for o in self.observations], dtype=float))

    @cached_property
    def trials(self) -> np.ndarray:
        return _readonly(np.array([o.trials for o in self.observations], dtype=float))

    @property
    def total_trials(self) -> int:
        return sum(o.trials for o in self.observations)

    def to_csv(self) -> str:
        """Serialize in the binomial schema; floats use ``repr`` so they round-trip."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_COLUMNS["binomial"])
        for o in self.observations:
            writer.writerow((repr(o.x), o.successes, o.trials))
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "observations": [
                {"x": o.x, "successes": o.successes, "trials": o.trials}
                for o in self.observations
            ]
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def _readonly(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def _parse_float(text: str, line: int, column: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ParseError(f"column {column!r}: not a number: {text!r}", line) from None
    if not math.isfinite(value):
        raise ParseError(f"column {column!r}: value must be finite: {text!r}", line)
    return value


def _parse_int(text: str, line: int, column: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ParseError(f"column {column!r}: not an integer: {text!r}", line) from None


def parse_dataset(text: str, schema: Schema = "binomial") -> Dataset:
    """Parse CSV text into a validated :class:`Dataset`.

    Parameters
    ----------
    text
        CSV content with a header row.  Extra columns are ignored; column
        order is free.
    schema
        ``"binomial"`` expects ``x, successes, trials``; ``"bernoulli"``
        expects ``x, y`` with ``y`` in {0, 1}.

    Raises
    ------
    ParseError
        Missing header/columns or a malformed row (message carries the line).
    ValidationError
        A row violates an :class:`Observation` invariant.
    DegenerateDesignError
        Fewer than two distinct x values.
    """
    if schema not in _COLUMNS:
        raise ValueError(f"unknown schema {schema!r}; expected one of {sorted(_COLUMNS)}")
    reader = csv.reader(io.StringIO(text))
    try:
        header = [h.strip() for h in next(reader)]
    except StopIteration:
        raise ParseError("empty input: a header row is required", 1) from None
    missing = [c for c in _COLUMNS[schema] if c not in header]
    if missing:
        raise ParseError(f"header is missing column(s) {missing} for {schema} schema", 1)
    idx = {c: header.index(c) for c in _COLUMNS[schema]}

    rows: list[Observation] = []
    for record in reader:
        line = reader.line_num
        if not record or all(not f.strip() for f in record):
            continue
        if len(record) < len(header):
            raise ParseError(
                f"expected {len(header)} fields, got {len(record)}", line
            )
        x = _parse_float(record[idx["x"]], line, "x")
        if schema == "bernoulli":
            y = _parse_int(record[idx["y"]], line, "y")
            if y not in (0, 1):
                raise ValidationError(f"line {line}: y must be 0 or 1, got {y}")
            succ, trials = y, 1
        else:
            succ = _parse_int(record[idx["successes"]], line, "successes")
            trials = _parse_int(record[idx["trials"]], line, "trials")
        try:
            rows.append(Observation(x, succ, trials))
        except ValidationError as exc:
            raise ValidationError(f"line {line}: {exc}") from None
    return Dataset(tuple(rows))


def read_dataset(path, schema: Schema = "binomial") -> Dataset:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_dataset(fh.read(), schema)


def lavelle_csv_text() -> str:
    return resources.files(__package__).joinpath("data/lavelle.csv").read_text("utf-8")


def bundled_lavelle_dataset() -> Dataset:
    """Six log-dose groups of 96 plates each, 9-aminoacridine in E. coli 343/435.

    The first row is the zero-dose control, whose log-dose was assigned by
    consecutive-dose average spacing upstream of this package.
    """
    return parse_dataset(lavelle_csv_text(), "binomial")

