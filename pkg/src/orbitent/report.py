"""Assemble full degeneracy reports: spectra -> clusterings -> counts.

Closed forms apply to distinguishable particles (exact for two equal
parties, bounds for three or more).  Bipartite states with unequal dims
and all indistinguishable states have no closed form, so the numerical
oracle is run for them regardless of the requested oracle mode.

Separability verdicts:

  distinguishable        every reduced matrix rank one (nondegenerate)
  fermionic              reduced rank equals the particle count M
                         (the antisymmetric power of an M-dim space is one
                         dimensional, so rank M forces a single Slater)
  bosonic, product-of-same-vector        reduced rank one (state = v^(x)M)
  bosonic, symmetric-simple-tensor       degeneracy zero implies yes (the
                         orbit then passes through a symmetrized basis
                         vector); for two bosons the complete test is
                         coefficient-matrix rank <= 2; otherwise unknown.
"""

from __future__ import annotations

from .errors import Inconsistency
from .measure import (
    DEFAULT_CLUSTER_TOL,
    DegeneracyReport,
    cluster_spectrum,
    coadjoint_dimension,
    degeneracy_bipartite,
    degeneracy_bounds,
    orbit_dimension_bipartite,
    separability_test,
)
from .moment import reduced_matrices
from .oracle import DEFAULT_RANK_TOL, degeneracy_rank
from .states import DISTINGUISHABLE, FERMIONIC, StateTensor

ORACLE_OFF = "off"
ORACLE_VERIFY = "verify"
ORACLE_ONLY = "only"
ORACLE_MODES = (ORACLE_OFF, ORACLE_VERIFY, ORACLE_ONLY)

BOSON_SYMMETRIC_SIMPLE = "symmetric-simple-tensor"
BOSON_PRODUCT = "product-of-same-vector"
BOSON_CONVENTIONS = (BOSON_SYMMETRIC_SIMPLE, BOSON_PRODUCT)


def _collapse(low: int, high: int):
    return low if low == high else (low, high)


def _boson_separable(convention, clustering, degeneracy, parties):
    rank = clustering.positive_rank
    if convention == BOSON_PRODUCT:
        return rank == 1
    if degeneracy == 0:
        return True
    if parties == 2:
        return rank <= 2
    return None  # no criterion available beyond the symplectic orbit


def analyze_state(state: StateTensor,
                  cluster_tol: float = DEFAULT_CLUSTER_TOL,
                  rank_tol: float = DEFAULT_RANK_TOL,
                  oracle: str = ORACLE_OFF,
                  boson_convention: str = BOSON_SYMMETRIC_SIMPLE,
                  ) -> DegeneracyReport:
    """Degeneracy report for one state.

    ``oracle`` is one of off / verify / only: "verify" attaches the
    numerical ranks and checks them against the closed forms (raising
    Inconsistency on disagreement), "only" reports the oracle numbers in
    place of the closed forms.
    """
    if oracle not in ORACLE_MODES:
        raise ValueError(f"oracle mode must be one of {ORACLE_MODES}")
    if boson_convention not in BOSON_CONVENTIONS:
        raise ValueError(
            f"boson convention must be one of {BOSON_CONVENTIONS}")
    spectra = reduced_matrices(state).spectra()
    clusterings = tuple(cluster_spectrum(s, cluster_tol) for s in spectra)
    distinguishable = state.symmetry == DISTINGUISHABLE
    equal_bipartite = (state.parties == 2 and state.dims[0] == state.dims[1])
    has_closed_form = distinguishable and (state.parties != 2 or equal_bipartite)

    need_oracle = oracle != ORACLE_OFF or not has_closed_form
    rank = degeneracy_rank(state, rank_tol) if need_oracle else None
    oracle_dict = rank.to_json_dict() if rank is not None else None

    if distinguishable:
        coadjoint = coadjoint_dimension(clusterings, state.dims)
        separable = separability_test(clusterings)
        if state.parties == 1:
            orbit_dim, degeneracy = coadjoint, 0
        elif equal_bipartite:
            orbit_dim = orbit_dimension_bipartite(clusterings[0], state.dims[0])
            degeneracy = degeneracy_bipartite(clusterings[0])
        elif state.parties == 2:  # unequal dims: populate from the oracle
            orbit_dim, degeneracy = rank.orbit_dim, rank.degeneracy
        else:
            low, high = degeneracy_bounds(clusterings)
            degeneracy = _collapse(low, high)
            orbit_dim = _collapse(coadjoint + low, coadjoint + high)
        if rank is not None:
            oracle_dict["consistent"] = _consistent(
                rank, orbit_dim, coadjoint, degeneracy)
            if not oracle_dict["consistent"]:
                raise Inconsistency(
                    f"oracle ranks {rank.as_tuple()} contradict the "
                    f"closed-form report (orbit {orbit_dim}, coadjoint "
                    f"{coadjoint}, degeneracy {degeneracy})")
        report = DegeneracyReport(
            dims=state.dims,
            symmetry=state.symmetry,
            orbit_dim=orbit_dim,
            coadjoint_dim=coadjoint,
            degeneracy=degeneracy,
            separable=separable,
            clusterings=clusterings,
            oracle=oracle_dict,
        )
    else:
        # one common reduced matrix; the acting group is the diagonal SU(N)
        single = clusterings[0]
        coadjoint = coadjoint_dimension((single,), (state.dims[0],))
        if rank.symplectic_rank != coadjoint:
            raise Inconsistency(
                f"oracle symplectic rank {rank.symplectic_rank} contradicts "
                f"the coadjoint-orbit formula {coadjoint}")
        oracle_dict["consistent"] = True
        if state.symmetry == FERMIONIC:
            separable = single.positive_rank == state.parties
            convention = None
        else:
            separable = _boson_separable(
                boson_convention, single, rank.degeneracy, state.parties)
            convention = boson_convention
        report = DegeneracyReport(
            dims=state.dims,
            symmetry=state.symmetry,
            orbit_dim=rank.orbit_dim,
            coadjoint_dim=coadjoint,
            degeneracy=rank.degeneracy,
            separable=separable,
            clusterings=clusterings,
            oracle=oracle_dict,
            boson_convention=convention,
        )

    if oracle == ORACLE_ONLY:
        report = DegeneracyReport(
            dims=report.dims,
            symmetry=report.symmetry,
            orbit_dim=rank.orbit_dim,
            coadjoint_dim=rank.symplectic_rank,
            degeneracy=rank.degeneracy,
            separable=report.separable,
            clusterings=report.clusterings,
            oracle=oracle_dict,
            boson_convention=report.boson_convention,
        )
    return report


def _within(value, exact_or_interval) -> bool:
    if isinstance(exact_or_interval, tuple):
        low, high = exact_or_interval
        return low <= value <= high
    return value == exact_or_interval


def _consistent(rank, orbit_dim, coadjoint, degeneracy) -> bool:
    return (_within(rank.orbit_dim, orbit_dim)
            and rank.symplectic_rank == coadjoint
            and _within(rank.degeneracy, degeneracy))
