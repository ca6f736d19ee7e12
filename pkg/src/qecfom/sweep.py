"""Parameter sweeps that produce the figure data as tables.

Every value is rounded to 12 significant digits when the table is built, so
writing a table to CSV and reading it back gives identical numbers. Grid
points are farmed out to a process pool when ``jobs > 1``; results are
collected in grid order, so the output never depends on the worker count.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from qecfom import classical
from qecfom.fom import evaluate

MODES = ("classical", "quantum", "shannon")
FORMATS = ("csv", "json")


class ConfigError(ValueError):
    """Invalid sweep configuration."""


def sig12(x: float) -> float:
    """Round to the 12 significant digits used in emitted tables."""
    return float(f"{x:.12g}") + 0.0


def _fmt(x: float) -> str:
    return f"{x:.12g}"


@dataclass
class SweepConfig:
    mode: str = "quantum"
    q_min: float = 0.0
    q_max: float = 1.0
    q_steps: Optional[int] = None
    alpha_steps: int = 51
    phi: float = 0.0
    strategies: Tuple[str, ...] = ("I", "II")
    output_path: Optional[str] = None
    format: str = "csv"
    parallelism: int = 1
    n_bits: float = 1000.0
    err_rate: float = 0.01

    def __post_init__(self):
        if self.q_steps is None:
            self.q_steps = 201 if self.mode == "classical" else 51
        self.validate()

    def validate(self) -> None:
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, got {self.format!r}")
        if not (0.0 <= self.q_min <= self.q_max <= 1.0):
            raise ConfigError("need 0 <= q_min <= q_max <= 1")
        if self.q_steps < 2 or self.alpha_steps < 2:
            raise ConfigError("step counts must be at least 2")
        if not self.strategies or any(s not in ("I", "II") for s in self.strategies):
            raise ConfigError(f"strategies must be a non-empty subset of I, II")
        if self.parallelism < 1:
            raise ConfigError("parallelism must be at least 1")
        if not (0.0 <= self.err_rate <= 0.5):
            raise ConfigError("err_rate must lie in [0, 1/2]")

    def q_grid(self) -> np.ndarray:
        return np.linspace(self.q_min, self.q_max, self.q_steps)

    def alpha_grid(self) -> np.ndarray:
        return np.linspace(0.0, math.pi / 2, self.alpha_steps)


@dataclass
class SweepTable:
    columns: Tuple[str, ...]
    rows: List[Tuple[float, ...]] = field(default_factory=list)

    def column(self, name: str) -> np.ndarray:
        i = self.columns.index(name)
        return np.array([r[i] for r in self.rows])

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([_fmt(x) for x in row])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"columns": list(self.columns), "rows": [list(r) for r in self.rows]}, indent=1) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "SweepTable":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        return cls(tuple(header), [tuple(float(x) for x in row) for row in reader])

    @classmethod
    def from_json(cls, text: str) -> "SweepTable":
        data = json.loads(text)
        return cls(tuple(data["columns"]), [tuple(r) for r in data["rows"]])

    def render(self, fmt: str) -> str:
        return self.to_csv() if fmt == "csv" else self.to_json()


def _classical_row(q: float) -> Tuple[float, ...]:
    m = classical.repetition4_channel(q)
    i_1 = classical.mutual_info_strategy1(m)
    i_2 = classical.mutual_info_strategy2(m)[1] if m.p_unc < 1.0 else 0.0
    p_1, p_2 = classical.success_probabilities(m)
    return q, i_1, i_2, p_1, p_2


def _quantum_row_block(args) -> List[Tuple[float, ...]]:
    alpha, phi, qs = args
    rows = []
    for q in qs:
        r = evaluate(alpha, phi, q)
        one, two = r["I"], r["II"]
        rows.append(
            (
                q, alpha, phi,
                one.mutual_info, two.mutual_info,
                one.fidelity, two.fidelity,
                two.kept_fraction,
                two.mutual_info - one.mutual_info,
                two.fidelity - one.fidelity,
            )
        )
    return rows


def _pool_map(fn, tasks: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
        return list(pool.map(fn, tasks))


_CLASSICAL_COLUMNS = ("q", "I_I", "I_II", "P_success_I", "P_success_II")
_QUANTUM_COLUMNS = ("q", "alpha", "phi", "I_I", "I_II", "F_I", "F_II", "N", "I_II_minus_I_I", "F_II_minus_F_I")


def _select(columns, rows, strategies) -> SweepTable:
    keep = []
    for i, name in enumerate(columns):
        if "minus" in name:
            ok = set(strategies) == {"I", "II"}
        elif name.endswith("_II") or name == "N":
            ok = "II" in strategies
        elif name.endswith("_I"):
            ok = "I" in strategies
        else:
            ok = True
        if ok:
            keep.append(i)
    return SweepTable(
        tuple(columns[i] for i in keep),
        [tuple(sig12(row[i]) for i in keep) for row in rows],
    )


def run_classical_sweep(cfg: SweepConfig) -> SweepTable:
    """Rows ``(q, I_I, I_II, P_success_I, P_success_II)``, one per grid q."""
    qs = [float(q) for q in cfg.q_grid()]
    rows = _pool_map(_classical_row, qs, cfg.parallelism)
    return _select(_CLASSICAL_COLUMNS, rows, cfg.strategies)


def run_quantum_sweep(cfg: SweepConfig) -> SweepTable:
    """Rows over the (alpha, q) grid, alpha outer and q inner.

    Columns ``q, alpha, phi, I_I, I_II, F_I, F_II, N`` plus the differences
    ``I_II - I_I`` and ``F_II - F_I``.
    """
    qs = [float(q) for q in cfg.q_grid()]
    tasks = [(float(a), float(cfg.phi), qs) for a in cfg.alpha_grid()]
    blocks = _pool_map(_quantum_row_block, tasks, cfg.parallelism)
    rows = [row for block in blocks for row in block]
    return _select(_QUANTUM_COLUMNS, rows, cfg.strategies)


def run_shannon_example(cfg: SweepConfig) -> SweepTable:
    """The 1000 bit/s, 1 % example, followed by the configured case if different."""
    cases = [(1000.0, 0.01)]
    if (cfg.n_bits, cfg.err_rate) != cases[0]:
        cases.append((float(cfg.n_bits), float(cfg.err_rate)))
    rows = []
    for n, e in cases:
        res = classical.shannon_example(n, e)
        rows.append(tuple(sig12(x) for x in (n, e, *res)))
    return SweepTable(
        ("n_bits_per_s", "err_rate", "equivocation_rate", "similarity_strategy_matches", "erasure_loss"),
        rows,
    )


def run(cfg: SweepConfig) -> SweepTable:
    runner = {
        "classical": run_classical_sweep,
        "quantum": run_quantum_sweep,
        "shannon": run_shannon_example,
    }[cfg.mode]
    return runner(cfg)
