"""Ternary sign maps comparing the two closed-form upper ratio bounds.

With a = x1/c, b = x2/c, y the shared second Beta argument, the two
bounds differ by the factor A/B where

    ln A = (b+1) ln b - (a+1) ln a + (a+y+1) ln(a+y) - (b+y+1) ln(b+y)
    ln B = y (ln(a+y+1) - ln(b+y+1))

so F(a, b, y) = sign(ln A - ln B) records which bound is tighter at
each grid cell.  Everything is evaluated in log space: the direct
A and B overflow for axis values in the hundreds, the logs never do.
"""

import os
import tempfile
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "GridSpec",
    "SignMap",
    "PAPER_Y_VALUES",
    "paper_grid",
    "desk_grid",
    "sign_F",
    "log_bound_terms",
    "grid_signmap",
    "iter_signmap_csv",
    "iter_signmap_pgm",
    "signmap_csv_text",
    "signmap_pgm_text",
    "write_atomic",
]

# Equality tolerance on ln A - ln B: floating-point residue on the
# analytically-equal diagonal classifies as 0, everything else keeps
# its sign.
SIGN_ZERO_RTOL = 1e-12

# The reference y sweep: 0.1..0.9 step 0.1, then 1, 2.5, 4, 5, 10, 15, 20.
PAPER_Y_VALUES = tuple(round(0.1 * i, 1) for i in range(1, 10)) + (
    1.0,
    2.5,
    4.0,
    5.0,
    10.0,
    15.0,
    20.0,
)

DESK_GRID_POINTS = 280
AXIS_LO, AXIS_HI = 0.1, 1001.0


@dataclass(frozen=True)
class GridSpec:
    """Axis partition for a sign-map run.  ``a_points``/``b_points``
    are strictly increasing; the rendered matrix flips b so it
    increases upward."""

    a_points: tuple
    b_points: tuple
    y_values: tuple
    mode: str  # "paper" or "desk"

    def __post_init__(self):
        for name, pts in (("a_points", self.a_points), ("b_points", self.b_points)):
            arr = np.asarray(pts)
            if arr.ndim != 1 or len(arr) < 2 or not np.all(np.diff(arr) > 0):
                raise ValueError(f"{name} must be strictly increasing")
            if arr[0] <= 0:
                raise ValueError(f"{name} must be positive")


def paper_grid(y_values: Sequence[float] = PAPER_Y_VALUES) -> GridSpec:
    """The full reference partition: [0.1, 10] step 0.01, then (10, 100]
    step 0.1, then (100, 1001] step 1 -- 991 + 900 + 901 = 2792 points
    per axis."""
    small = np.arange(0.1, 10.01, 0.01)
    mid = np.linspace(10.0, 100.0, 901)[1:]
    large = np.linspace(100.0, 1001.0, 902)[1:]
    axis = tuple(np.hstack([small, mid, large]).tolist())
    return GridSpec(a_points=axis, b_points=axis, y_values=tuple(y_values), mode="paper")


def desk_grid(y_values: Sequence[float] = PAPER_Y_VALUES, n_points: int = DESK_GRID_POINTS) -> GridSpec:
    """Log-spaced desk-scale grid over the same [0.1, 1001] range."""
    axis = tuple(np.geomspace(AXIS_LO, AXIS_HI, n_points).tolist())
    return GridSpec(a_points=axis, b_points=axis, y_values=tuple(y_values), mode="desk")


def log_bound_terms(a, b, y):
    """(ln A, ln B); accepts scalars or numpy arrays."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    ln_a = (
        (b + 1.0) * np.log(b)
        - (a + 1.0) * np.log(a)
        + (a + y + 1.0) * np.log(a + y)
        - (b + y + 1.0) * np.log(b + y)
    )
    ln_b = y * (np.log(a + y + 1.0) - np.log(b + y + 1.0))
    return ln_a, ln_b


def _ternary(ln_a, ln_b):
    diff = ln_a - ln_b
    scale = np.maximum(1.0, np.maximum(np.abs(ln_a), np.abs(ln_b)))
    out = np.sign(diff).astype(np.int8)
    out[np.abs(diff) <= SIGN_ZERO_RTOL * scale] = 0
    return out


def sign_F(a: float, b: float, y: float) -> int:
    """Ternary comparison of the two upper bounds at one cell."""
    if not (a > 0.0 and b > 0.0 and y > 0.0):
        raise ValueError(f"sign_F requires a, b, y > 0, got ({a}, {b}, {y})")
    ln_a, ln_b = log_bound_terms(a, b, y)
    return int(_ternary(np.atleast_1d(ln_a), np.atleast_1d(ln_b))[0])


@dataclass(frozen=True)
class SignMap:
    """F over a grid at one y: ``values[i, j]`` holds
    F(a_points[j], b_points[n-1-i], y), i.e. b decreases top-down so
    plots read with b increasing upward.  Cells with a == b are 0."""

    grid: GridSpec
    y: float
    values: np.ndarray  # int8, shape (len(b_points), len(a_points))
    ln_a: np.ndarray
    ln_b: np.ndarray


def grid_signmap(spec: GridSpec, y: float) -> SignMap:
    """Fill the ternary matrix for one y value.  Pure and vectorized:
    the result is identical no matter how callers schedule cells."""
    if y not in spec.y_values:
        raise ValueError(f"y={y} is not one of the grid's y_values")
    a_row = np.asarray(spec.a_points, dtype=np.float64)
    b_col = np.asarray(spec.b_points, dtype=np.float64)[::-1]  # descending
    aa, bb = np.meshgrid(a_row, b_col)
    ln_a, ln_b = log_bound_terms(aa, bb, y)
    return SignMap(grid=spec, y=y, values=_ternary(ln_a, ln_b), ln_a=ln_a, ln_b=ln_b)


# ----------------------------------------------------------------------
# serialization: bit-exact text formats, no image library


def _fmt(v: float) -> str:
    return repr(float(v))


def iter_signmap_csv(sm: SignMap) -> Iterator[str]:
    """CSV chunks: header a,b,y,lnA,lnB,F, one row per cell, b
    descending then a ascending (same order as the matrix).  Yields one
    chunk per matrix row so paper-scale maps stream in bounded memory."""
    a_row = np.asarray(sm.grid.a_points, dtype=np.float64)
    b_col = np.asarray(sm.grid.b_points, dtype=np.float64)[::-1]
    a_txt = [_fmt(a) for a in a_row]
    y_txt = _fmt(sm.y)
    yield "a,b,y,lnA,lnB,F\n"
    for i, b in enumerate(b_col):
        b_txt = _fmt(b)
        row_a = sm.ln_a[i]
        row_b = sm.ln_b[i]
        row_f = sm.values[i]
        lines = [
            f"{a_txt[j]},{b_txt},{y_txt},{_fmt(row_a[j])},{_fmt(row_b[j])},{int(row_f[j])}"
            for j in range(len(a_row))
        ]
        yield "\n".join(lines) + "\n"


def signmap_csv_text(sm: SignMap) -> str:
    return "".join(iter_signmap_csv(sm))


_PGM_TOKENS_PER_LINE = 35  # 35 single-digit tokens = 69 chars <= the plain-format 70 cap


def iter_signmap_pgm(sm: SignMap) -> Iterator[str]:
    """Plain PGM (P2) chunks, maxval 2, pixel = F + 1: 0 (black) where
    the second bound is smaller, 2 (white) where the first is, 1 on
    ties."""
    h, w = sm.values.shape
    yield f"P2\n{w} {h}\n2\n"
    tokens = np.array(("0", "1", "2"))[(sm.values + 1).ravel()]
    step = _PGM_TOKENS_PER_LINE
    for start in range(0, len(tokens), step * 2000):
        block = tokens[start : start + step * 2000]
        lines = [" ".join(block[i : i + step]) for i in range(0, len(block), step)]
        yield "\n".join(lines) + "\n"


def signmap_pgm_text(sm: SignMap) -> str:
    return "".join(iter_signmap_pgm(sm))


def write_atomic(path: str, chunks: Iterable[str]) -> None:
    """Write via a temp file in the destination directory + rename."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            if isinstance(chunks, str):
                fh.write(chunks)
            else:
                for chunk in chunks:
                    fh.write(chunk)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
