"""Families for experiments: extremal (2n-2 digon) witnesses, random and unit-radius families.

All randomness flows from ``numpy.random.default_rng`` seeded by the caller, so
every generator is a pure function of its arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _witnesses
from .arrangement import CircleFamily, ValidationError, detect_digons_pairwise, validate_family
from .geom import DEFAULT_TOL, Circle

TIGHT_RANGE = range(4, 13)


class ConstructionUnavailable(LookupError):
    pass


class NotFound(RuntimeError):
    pass


class RetriesExhausted(RuntimeError):
    pass


def trial_seed(master: int, trial: int) -> int:
    """Seed for trial ``trial`` of a campaign; independent of the order trials run in."""
    return int(np.random.SeedSequence([master & (2**64 - 1), trial]).generate_state(1, np.uint64)[0])


# --- extremal construction -----------------------------------------------

# Two large circles crossing at the origin; the small circles sit in the region
# above the origin that lies outside both, just large enough to poke into each.
BIG_OFFSET = 10.0
BIG_RADIUS = math.hypot(BIG_OFFSET, BIG_OFFSET)


def _template(state: np.ndarray) -> list[Circle]:
    a = h = BIG_OFFSET
    circles = [Circle.at(-a, -h, BIG_RADIUS), Circle.at(a, -h, BIG_RADIUS)]
    for x, y, grow in state:
        gap = max(math.hypot(x + a, y + h), math.hypot(x - a, y + h)) - BIG_RADIUS
        circles.append(Circle.at(x, y, gap * (1.0 + grow)))
    return circles


def _score(state: np.ndarray, tol: float) -> tuple[int, Optional[CircleFamily]]:
    try:
        fam = validate_family(_template(state), tol)
    except (ValidationError, ValueError):
        return -1, None
    return len(detect_digons_pairwise(fam)), fam


def _initial_state(rng, m: int) -> np.ndarray:
    # geometric spacing along the bisector keeps the caps of neighbouring circles apart
    y0 = rng.uniform(0.05, 0.2)
    ratio = rng.uniform(2.5, 5.0)
    ys = y0 * ratio ** (np.arange(m) / max(m - 1, 1)) * np.exp(rng.normal(0.0, 0.02, m))
    return np.column_stack([
        rng.normal(0.0, 0.01 * y0, m),
        np.sort(ys),
        10.0 ** rng.uniform(-5.0, -3.5, m),
    ])


def search_tight(n: int, seed: int = 0, budget: int = 2000, tol: float = DEFAULT_TOL,
                 restart_every: int = 200) -> CircleFamily:
    """Hill-climb the two-big-circles template until the family has 2n - 2 digons.

    The state is (x, y, relative growth) per small circle. Each step nudges one
    small circle and keeps the move unless the digon count drops or the family
    stops being simple; a fresh template is drawn every ``restart_every`` steps
    without improvement. Raises NotFound once ``budget`` steps are spent.
    """
    if n < 4:
        raise ValueError(f"search_tight needs n >= 4, got {n}")
    target = 2 * n - 2
    if budget < 1:
        raise NotFound(f"budget {budget} allows no search steps")
    rng = np.random.default_rng(seed)
    m = n - 2
    state = _initial_state(rng, m)
    best, fam = _score(state, tol)
    stale = 0
    for _ in range(budget):
        if best == target:
            return fam
        if stale >= restart_every:
            state = _initial_state(rng, m)
            best, fam = _score(state, tol)
            stale = 0
            continue
        cand = state.copy()
        k = rng.integers(m)
        move = rng.integers(3)
        if move == 0:
            cand[k, 0] += rng.normal(0.0, 0.02 * cand[k, 1])
        elif move == 1:
            cand[k, 1] *= math.exp(rng.normal(0.0, 0.1))
        else:
            cand[k, 2] *= math.exp(rng.normal(0.0, 1.0))
        score, cand_fam = _score(cand, tol)
        stale = 0 if score > best else stale + 1
        if score >= best:
            state, best, fam = cand, score, cand_fam
    if best == target:
        return fam
    raise NotFound(f"no {target}-digon family for n={n} within {budget} steps (best {best})")


def tight_family(n: int, tol: float = DEFAULT_TOL) -> CircleFamily:
    """Stored witness with exactly 2n - 2 digons, re-checked before it is returned."""
    if n not in TIGHT_RANGE or n not in _witnesses.WITNESSES:
        raise ConstructionUnavailable(f"no tight construction stored for n={n} "
                                      f"(supported: {TIGHT_RANGE.start}..{TIGHT_RANGE.stop - 1})")
    fam = validate_family([Circle.at(x, y, r) for x, y, r in _witnesses.WITNESSES[n]], tol)
    count = len(detect_digons_pairwise(fam))
    if count != 2 * n - 2:
        raise RuntimeError(f"stored witness for n={n} has {count} digons, expected {2 * n - 2}")
    return fam


# --- random families -----------------------------------------------------


@dataclass(frozen=True)
class GeneratorParams:
    """``radius_band`` is the offset of every radius above half the largest center distance."""

    n: int
    seed: int = 0
    d_min: float = 0.05
    radius_band: Optional[tuple] = None
    max_retries: int = 1000

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        if self.max_retries <= 0:
            raise ValueError("max_retries must be positive")
        if not 0 < self.d_min < 1:
            raise ValueError("d_min must lie in (0, 1)")
        lo, hi = self.band
        if not 0 < lo < hi:
            raise ValueError(f"radius band must satisfy 0 < low < high, got {self.band}")
        if hi - lo >= self.d_min:
            raise ValueError("radius band wider than d_min cannot guarantee crossing pairs")

    @property
    def band(self) -> tuple:
        if self.radius_band is None:
            return (0.01, 0.01 + 0.9 * self.d_min)
        return tuple(self.radius_band)


def _spread_points(rng, n: int, radius: float, d_min: float, tries: int = 10_000) -> np.ndarray:
    pts = np.empty((n, 2))
    k = 0
    for _ in range(tries):
        rho = radius * math.sqrt(rng.uniform())
        phi = rng.uniform(0.0, 2.0 * math.pi)
        p = (rho * math.cos(phi), rho * math.sin(phi))
        if k and np.min(np.hypot(pts[:k, 0] - p[0], pts[:k, 1] - p[1])) < d_min:
            continue
        pts[k] = p
        k += 1
        if k == n:
            return pts
    raise RetriesExhausted(f"could not place {n} points {d_min} apart in a disc of radius {radius}")


def random_family(p: GeneratorParams, tol: float = DEFAULT_TOL) -> CircleFamily:
    """Centers uniform in the unit disc, radii drawn so that every pair must cross."""
    rng = np.random.default_rng(p.seed)
    lo, hi = p.band
    for _ in range(p.max_retries):
        c = _spread_points(rng, p.n, 1.0, p.d_min)
        d_max = float(np.max(np.hypot(c[:, None, 0] - c[None, :, 0], c[:, None, 1] - c[None, :, 1])))
        r = rng.uniform(d_max / 2 + lo, d_max / 2 + hi, p.n)
        try:
            return validate_family([Circle.at(c[k, 0], c[k, 1], r[k]) for k in range(p.n)], tol)
        except ValidationError:
            continue
    raise RetriesExhausted(f"no valid family after {p.max_retries} attempts")


def unit_family(n: int, seed: int = 0, d_min: float = 0.05, max_retries: int = 1000,
                tol: float = DEFAULT_TOL) -> CircleFamily:
    """Unit circles with centers in a disc of radius 0.95, so every pair crosses."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    rng = np.random.default_rng(seed)
    for _ in range(max_retries):
        c = _spread_points(rng, n, 0.95, d_min)
        try:
            return validate_family([Circle.at(c[k, 0], c[k, 1], 1.0) for k in range(n)], tol)
        except ValidationError:
            continue
    raise RetriesExhausted(f"no valid unit family after {max_retries} attempts")


def free_family(n: int, seed: int = 0, radius_range: tuple = (0.2, 2.0), max_retries: int = 100_000,
                tol: float = DEFAULT_TOL) -> CircleFamily:
    """Centers uniform in [-1, 1]^2 with independent radii, resampled until every pair crosses.

    Much more varied than ``random_family`` (lenses and lunes mix), but slow for n > 8.
    """
    rng = np.random.default_rng(seed)
    for _ in range(max_retries):
        c = rng.uniform(-1.0, 1.0, (n, 2))
        r = rng.uniform(*radius_range, n)
        try:
            return validate_family([Circle.at(c[k, 0], c[k, 1], r[k]) for k in range(n)], tol)
        except ValidationError:
            continue
    raise RetriesExhausted(f"no valid free family after {max_retries} attempts")
