"""Multiplicity clustering and the closed-form orbit dimension counts.

Every count here is a function of spectral multiplicity data alone.  With
per-party blocks of multiplicities m_{k,n} (n >= 1, distinct positive
eigenvalues) and kernel multiplicity m_{k,0}:

  orbit dim (bipartite, equal N)   2N^2 - 2 m_0^2 - sum_n m_n^2 - 1
  coadjoint image dim (any M)      sum_k (N_k^2 - 1) - (sum_{k,n>=0} m_{k,n}^2 - M)
  degeneracy (bipartite, equal N)  D = sum_{n>=1} m_n^2 - 1
  degeneracy bounds (M >= 3)       max_k S_k - 1 <= D <= sum_k S_k - M,
                                   S_k = sum_{n>=1} m_{k,n}^2
  separable                        S_k = 1 for every party

All formulas are integer identities; the only floating-point step is the
gap clustering that extracts the multiplicities, which refuses to guess
when a gap sits near the tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AmbiguousClustering, DimensionMismatch

#: default relative clustering tolerance (relative to the largest eigenvalue)
DEFAULT_CLUSTER_TOL = 1e-7
#: gaps within this factor of the effective tolerance are refused
AMBIGUITY_FACTOR = 10.0


@dataclass(frozen=True)
class SpectrumClustering:
    """Sorted spectrum partitioned into kernel and positive multiplicity blocks."""

    kernel_dim: int
    blocks: tuple[tuple[float, int], ...]  # (value, multiplicity), descending
    tolerance: float

    def __post_init__(self):
        if self.kernel_dim < 0:
            raise ValueError("kernel multiplicity cannot be negative")
        if any(m < 1 for _, m in self.blocks):
            raise ValueError("block multiplicities must be >= 1")
        values = [v for v, _ in self.blocks]
        if any(a <= b for a, b in zip(values, values[1:])):
            raise ValueError("block values must be strictly descending")

    @property
    def size(self) -> int:
        return self.kernel_dim + sum(m for _, m in self.blocks)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.blocks)

    @property
    def positive_rank(self) -> int:
        """Number of nonzero eigenvalues, counted with multiplicity."""
        return sum(self.multiplicities)

    @property
    def square_sum(self) -> int:
        """sum_{n>=1} m_n^2 over the positive blocks."""
        return sum(m * m for m in self.multiplicities)

    @property
    def square_sum_with_kernel(self) -> int:
        return self.kernel_dim**2 + self.square_sum

    def profile(self) -> tuple[int, tuple[int, ...]]:
        """(kernel multiplicity, positive multiplicities) - the integer data."""
        return self.kernel_dim, self.multiplicities

    def to_json_dict(self) -> dict:
        return {
            "kernel": self.kernel_dim,
            "blocks": [{"value": v, "multiplicity": m} for v, m in self.blocks],
            "tolerance": self.tolerance,
        }


def cluster_spectrum(values, tol: float = DEFAULT_CLUSTER_TOL) -> SpectrumClustering:
    """Greedy gap clustering of a probability spectrum.

    Adjacent sorted values merge into one block iff their gap is below the
    effective tolerance tol * max(values); values below it go to the kernel.
    Raises AmbiguousClustering whenever a gap or a value lies within a
    factor of ten of the threshold, since the resulting integer counts
    would flip under small tolerance changes.
    """
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("expected a nonempty 1-d list of eigenvalues")
    if not 0.0 < tol < 1e-2:
        raise ValueError("clustering tolerance must lie in (0, 1e-2)")
    if arr.min() < -1e-10 or arr.max() > 1.0 + 1e-8:
        raise ValueError("eigenvalues must lie in [0, 1]")
    if abs(arr.sum() - 1.0) > 1e-8:
        raise ValueError("spectrum must sum to 1")
    svals = np.sort(np.clip(arr, 0.0, None))[::-1]
    eff = tol * svals[0]
    gaps = svals[:-1] - svals[1:]
    low, high = eff / AMBIGUITY_FACTOR, eff * AMBIGUITY_FACTOR

    def ambiguous(x):
        return (low < x) & (x < high)

    if ambiguous(gaps).any() or ambiguous(svals).any():
        raise AmbiguousClustering(
            f"a spectral gap or value lies within a factor {AMBIGUITY_FACTOR:g} "
            f"of the threshold {eff:.3e}; adjust the clustering tolerance")
    kernel = svals < eff
    positive = svals[~kernel]
    blocks = []
    start = 0
    for stop in range(1, len(positive) + 1):
        if stop == len(positive) or positive[stop - 1] - positive[stop] >= eff:
            blocks.append((float(positive[start:stop].mean()), stop - start))
            start = stop
    return SpectrumClustering(int(kernel.sum()), tuple(blocks), float(tol))


def orbit_dimension_bipartite(clustering: SpectrumClustering, dim: int) -> int:
    """dim of the SU(N) x SU(N) orbit in projective space, equal dims N."""
    if clustering.size != dim:
        raise DimensionMismatch(
            f"clustering covers {clustering.size} eigenvalues, expected {dim}")
    return (2 * dim * dim
            - 2 * clustering.kernel_dim**2
            - clustering.square_sum
            - 1)


def coadjoint_dimension(clusterings, dims) -> int:
    """dim of the coadjoint orbit of the moment-map image, any M >= 1.

    The stabilizer is block-diagonal per party with one unitary block per
    eigenvalue cluster (kernel included), minus one determinant condition
    per party.
    """
    clusterings = tuple(clusterings)
    dims = tuple(int(n) for n in dims)
    if len(clusterings) != len(dims):
        raise DimensionMismatch("one clustering per party is required")
    for c, n in zip(clusterings, dims):
        if c.size != n:
            raise DimensionMismatch(
                f"clustering covers {c.size} eigenvalues for a dim-{n} party")
    total = sum(n * n - 1 for n in dims)
    stabilizer = sum(c.square_sum_with_kernel for c in clusterings) - len(dims)
    return total - stabilizer


def degeneracy_bipartite(clustering: SpectrumClustering) -> int:
    """Exact degeneracy D = sum_{n>=1} m_n^2 - 1 for equal-dims bipartite states."""
    return clustering.square_sum - 1


def degeneracy_bounds(clusterings) -> tuple[int, int]:
    """[max_k S_k - 1, sum_k S_k - M] for M >= 3 parties."""
    clusterings = tuple(clusterings)
    if len(clusterings) < 3:
        raise DimensionMismatch("bounds apply to three or more parties")
    sums = [c.square_sum for c in clusterings]
    return max(sums) - 1, sum(sums) - len(clusterings)


def separability_test(clusterings) -> bool:
    """True iff every party's reduced matrix has one nondegenerate nonzero
    eigenvalue (rank one), i.e. the state is a product state."""
    return all(c.square_sum == 1 for c in clusterings)


@dataclass(frozen=True)
class DegeneracyReport:
    """Full dimension-count report for one state.

    ``orbit_dim`` and ``degeneracy`` are exact integers where a closed form
    or the oracle provides them, a (low, high) interval for M >= 3 bounds,
    or None when unavailable.  ``oracle`` is an optional attachment dict
    with the numerically computed ranks.
    """

    dims: tuple[int, ...]
    symmetry: str
    orbit_dim: object  # int | (int, int) | None
    coadjoint_dim: int
    degeneracy: object  # int | (int, int) | None
    separable: object  # bool | None
    clusterings: tuple[SpectrumClustering, ...]
    oracle: dict | None = None
    boson_convention: str | None = None

    def to_json_dict(self) -> dict:
        doc = {
            "dims": list(self.dims),
            "symmetry": self.symmetry,
            "orbit_dim": _dim_json(self.orbit_dim),
            "coadjoint_dim": self.coadjoint_dim,
            "degeneracy": _dim_json(self.degeneracy),
            "separable": self.separable,
            "clusterings": [c.to_json_dict() for c in self.clusterings],
            "oracle": self.oracle,
        }
        if self.boson_convention is not None:
            doc["boson_convention"] = self.boson_convention
        return doc


def _dim_json(value):
    if isinstance(value, tuple):
        return {"low": value[0], "high": value[1]}
    return value
