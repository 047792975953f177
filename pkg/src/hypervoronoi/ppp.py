"""Marked homogeneous Poisson point processes on hyperbolic disks.

Sampling is exact: the point count is Poisson with mean intensity times
hyperbolic area, angles are uniform, and radii invert the radial CDF
(cosh(rho) - 1) / (cosh(R) - 1).  Colors are carried as per-point uniforms so
that recoloring at a different p is a monotone coupling rather than a fresh
randomization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import ConfigError
from .geometry import Point, arccosh1p, ball_area

# Hard cap on the expected number of points in a single draw.
MAX_EXPECTED_POINTS = 1e7


def rng_stream(seed: int, *stream: int) -> np.random.Generator:
    """Counter-based generator keyed by (seed, stream indices).

    Philox streams derived this way are reproducible regardless of how many
    other streams were consumed, which keeps parallel trials deterministic.
    """
    ss = np.random.SeedSequence(int(seed), spawn_key=tuple(int(s) for s in stream))
    return np.random.Generator(np.random.Philox(ss))


def poisson_polar(
    rng: np.random.Generator,
    intensity: float,
    r_out: float,
    r_in: float = 0.0,
    alpha_lo: float = 0.0,
    alpha_hi: float = 2.0 * math.pi,
) -> tuple[np.ndarray, np.ndarray]:
    """Poisson sample on an annular sector, returned as (alpha, rho) arrays."""
    if r_out < r_in:
        raise ConfigError("r_out must be at least r_in")
    frac = (alpha_hi - alpha_lo) / (2.0 * math.pi)
    inner = math.cosh(r_in) - 1.0
    outer = math.cosh(r_out) - 1.0
    mean = intensity * 2.0 * math.pi * (outer - inner) * frac
    if mean > MAX_EXPECTED_POINTS:
        raise ConfigError(
            f"expected point count {mean:.3g} exceeds cap {MAX_EXPECTED_POINTS:.0e}"
        )
    n = int(rng.poisson(mean))
    alpha = rng.uniform(alpha_lo, alpha_hi, size=n)
    rho = arccosh1p(inner + rng.uniform(size=n) * (outer - inner))
    return alpha, np.asarray(rho, dtype=float)


@dataclass
class Sample:
    """One realization of a marked Poisson process on the ball B(o, R).

    Points are stored columnar in polar coordinates; `color_uniforms[i] <= p`
    makes point i black, so black sets are nested across p.
    """

    alpha: np.ndarray
    rho: np.ndarray
    color_uniforms: np.ndarray
    lam: float
    p: float
    R: float
    seed: int

    def __len__(self) -> int:
        return self.alpha.shape[0]

    @property
    def points(self) -> list[Point]:
        return [Point(a, r) for a, r in zip(self.alpha, self.rho)]

    def euclidean(self) -> np.ndarray:
        """(n, 2) Poincare embedding of the sample."""
        t = np.tanh(0.5 * self.rho)
        return np.column_stack((t * np.cos(self.alpha), t * np.sin(self.alpha)))

    def black_mask(self, p: float | None = None) -> np.ndarray:
        p = self.p if p is None else p
        return self.color_uniforms <= p

    def with_p(self, p: float) -> "Sample":
        return replace(self, p=p)


def sample_ball(lam: float, R: float, seed: int, p: float = 0.5,
                stream: tuple[int, ...] = ()) -> Sample:
    """Sample a marked Poisson process of intensity lam on B(o, R).

    Deterministic given (lam, R, seed, stream); the draw order (count, angles,
    radii, color uniforms) is fixed and documented so extensions never shift
    earlier values.
    """
    if lam <= 0 or R <= 0:
        raise ConfigError("lam and R must be positive")
    if lam * ball_area(R) > MAX_EXPECTED_POINTS:
        raise ConfigError(
            f"expected point count {lam * ball_area(R):.3g} exceeds cap"
        )
    rng = rng_stream(seed, *stream)
    alpha, rho = poisson_polar(rng, lam, R)
    colors = rng.uniform(size=alpha.shape[0])
    return Sample(alpha, rho, colors, lam, p, R, seed)


def extend_sample(s: Sample, R_new: float, stream: tuple[int, ...] = ()) -> Sample:
    """Grow a sample's window to R_new by drawing only the new annulus.

    The original points are untouched, so the extension is a coupling of the
    same process observed through a larger window.
    """
    if R_new <= s.R:
        return s
    rng = rng_stream(s.seed, 0xE, len(stream), *stream)
    alpha, rho = poisson_polar(rng, s.lam, R_new, r_in=s.R)
    colors = rng.uniform(size=alpha.shape[0])
    return Sample(
        np.concatenate((s.alpha, alpha)),
        np.concatenate((s.rho, rho)),
        np.concatenate((s.color_uniforms, colors)),
        s.lam, s.p, R_new, s.seed,
    )


def color_points(s: Sample, p: float) -> tuple[np.ndarray, np.ndarray]:
    """Indices of black and white points at color probability p.

    Deterministic in the stored uniforms and monotone in p: the black set at
    p1 is contained in the black set at p2 whenever p1 <= p2.
    """
    if not 0.0 <= p <= 1.0:
        raise ConfigError("p must lie in [0, 1]")
    mask = s.color_uniforms <= p
    idx = np.arange(len(s))
    return idx[mask], idx[~mask]


@dataclass
class SimConfig:
    """Shared experiment configuration.

    When `use_r_convention` is set, `r` is tied to the intensity via
    r = 2 ln(1/lambda); the remaining fields parameterize the exploration and
    pseudopath machinery.
    """

    lam: float
    p: float = 0.5
    R: float = 10.0
    seed: int = 0
    trials: int = 100
    margin: float = 5.0
    use_r_convention: bool = True
    r_override: float | None = None
    w: float = 5.0
    w1: float = 2.0
    w2: float = 7.0
    theta: float = 1e-10
    h: float = 1.0
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.lam <= 0:
            raise ConfigError("lambda must be positive")
        if not 0.0 <= self.p <= 1.0:
            raise ConfigError("p must lie in [0, 1]")

    @property
    def r(self) -> float:
        if self.use_r_convention or self.r_override is None:
            return 2.0 * math.log(1.0 / self.lam)
        return self.r_override


# ---------------------------------------------------------------------------
# columnar text serialization (consumed by the CLI and test fixtures)
# ---------------------------------------------------------------------------

_HEADER = "# hypervoronoi-sample v1"


def dumps_sample(s: Sample) -> str:
    lines = [
        _HEADER,
        f"# lambda={s.lam!r} p={s.p!r} R={s.R!r} seed={s.seed}",
        "alpha rho color_uniform",
    ]
    for a, r, u in zip(s.alpha, s.rho, s.color_uniforms):
        lines.append(f"{a!r} {r!r} {u!r}")
    return "\n".join(lines) + "\n"


def loads_sample(text: str) -> Sample:
    lines = text.strip().splitlines()
    if not lines or lines[0] != _HEADER:
        raise ConfigError("not a hypervoronoi sample file")
    meta = dict(kv.split("=", 1) for kv in lines[1].lstrip("# ").split())
    rows = [ln.split() for ln in lines[3:] if ln.strip()]
    cols = np.array(rows, dtype=float) if rows else np.empty((0, 3))
    return Sample(
        alpha=cols[:, 0].copy(),
        rho=cols[:, 1].copy(),
        color_uniforms=cols[:, 2].copy(),
        lam=float(meta["lambda"]),
        p=float(meta["p"]),
        R=float(meta["R"]),
        seed=int(meta["seed"]),
    )


def save_sample(s: Sample, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps_sample(s))


def load_sample(path) -> Sample:
    with open(path) as fh:
        return loads_sample(fh.read())
