"""CSV grids of a one-variable zeta function over a rectangle in the s-plane."""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .abelian import F1Scheme
from .assembly import EvalParams, soule_disc_series, zeta_hi_scheme
from .errors import F1ZetaError, InvalidArgumentError

GRID_CAP = 10**6
WORKERS_ENV = "F1ZETA_WORKERS"
HEADER = "re_s,im_s,re_val,im_val,note"
KINDS = ("hi", "soule")


@dataclass(frozen=True)
class AxisRange:
    start: float
    stop: float
    step: float

    def __post_init__(self):
        if not self.step > 0:
            raise InvalidArgumentError(f"grid step must be positive, got {self.step}")
        if self.stop < self.start:
            raise InvalidArgumentError(f"grid stop {self.stop} < start {self.start}")

    @classmethod
    def parse(cls, text: str) -> AxisRange:
        """``START:STOP:STEP`` (stop inclusive) or a single value."""
        parts = text.split(":")
        try:
            if len(parts) == 1:
                v = float(parts[0])
                return cls(v, v, 1.0)
            if len(parts) == 3:
                return cls(*(float(p) for p in parts))
        except ValueError:
            pass
        raise InvalidArgumentError(f"bad axis range {text!r}; expected START:STOP:STEP")

    def __len__(self):
        return int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1

    def values(self) -> list[float]:
        return [self.start + i * self.step for i in range(len(self))]


@dataclass(frozen=True)
class GridSpec:
    re: AxisRange
    im: AxisRange
    a: complex = 1
    w: complex = 1
    kind: str = "hi"
    tolerance: float = 1e-12
    cap: int = GRID_CAP

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidArgumentError(f"grid kind must be one of {KINDS}")
        if len(self) > self.cap:
            raise InvalidArgumentError(f"grid has {len(self)} samples, cap is {self.cap}")

    def __len__(self):
        return len(self.re) * len(self.im)

    def samples(self) -> list[complex]:
        # im-major rows, re varying fastest
        return [complex(x, y) for y in self.im.values() for x in self.re.values()]


def _fmt(x: float) -> str:
    return format(x, ".17g")


def _row(task) -> str:
    s, spec, scheme = task
    try:
        if spec.kind == "soule":
            v = soule_disc_series(s, spec.w, scheme, spec.tolerance)
        else:
            v = zeta_hi_scheme(EvalParams((s,), (spec.a,), spec.w, spec.tolerance), scheme)
    except F1ZetaError as exc:
        note = type(exc).__name__
        return f"{_fmt(s.real)},{_fmt(s.imag)},,,{note}"
    return f"{_fmt(s.real)},{_fmt(s.imag)},{_fmt(v.real)},{_fmt(v.imag)},"


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return 1


def iter_grid_rows(spec: GridSpec, scheme: F1Scheme, workers: int | None = None) -> Iterator[str]:
    """CSV lines (header first) in grid order regardless of ``workers``."""
    workers = default_workers() if workers is None else workers
    yield HEADER
    tasks = [(s, spec, scheme) for s in spec.samples()]
    if workers <= 1:
        yield from map(_row, tasks)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_row, tasks, chunksize=max(1, len(tasks) // (8 * workers)))


def write_grid(spec: GridSpec, scheme: F1Scheme, out, workers: int | None = None) -> int:
    n = 0
    for line in iter_grid_rows(spec, scheme, workers):
        out.write(line + "\n")
        n += 1
    return n - 1
