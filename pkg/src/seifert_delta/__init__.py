"""Exact Seiberg-Witten delta invariants of Seifert rational homology
3-spheres fibering over RP^2, with the supporting number-theoretic stack."""

from .arith import (
    Rational,
    dedekind_rademacher,
    dedekind_sum,
    dedekind_sum_numeric,
    frac_part,
    lambda_sum,
    lambda_sum_numeric,
    mod_inverse,
    sawtooth,
)
from .errors import (
    ConditionViolation,
    GeometricResidue,
    InconsistentClass,
    InvalidFraction,
    NonRealResult,
    NotCoprime,
    ParseError,
    SeifertDeltaError,
    UnknownSuite,
    WrongForm,
    WrongHolonomy,
    ZeroEuler,
)
from .invariants import (
    GeomPoly,
    SignedHalf,
    UnorderedPair,
    delta,
    delta_multiset,
    delta_pair,
    delta_via_n,
    eta_dirac_pm,
    eta_f0,
    eta_f0_raw,
    eta_pinc,
    eta_sig,
    plus_first_policy,
    swf_descriptor,
    transgression,
    unresolved_policy,
)
from .lens import LensSpace, lens_delta, lens_delta_closed_b1, lens_delta_negative
from .plumbing import (
    IntLattice,
    PlumbingGraph,
    c_squared,
    froyshov_equality_check,
    graph_lattice,
    lattice_signature,
    neg_cont_frac,
    sigma_relation_check,
    star_lattice_double,
    star_plumbing_double,
)
from .prism import (
    Character,
    MetacyclicParams,
    eta_diff_closed,
    metacyclic_eta_dir,
    pinc_sign_rp2a,
    rootsum_identity_check,
    rp2_circle_bundle_deltas,
    rp2a_policy,
)
from .seifert import (
    DoubleCoverData,
    LineBundleClass,
    SeifertData,
    degree_l,
    desing_degree,
    double_cover,
    euler_char,
    h1_order,
    make_class,
    normalize,
    parse_seifert,
    seifert_from_json,
)
from .spinc import (
    HolonomyClass,
    SpinCStructure,
    check_conditions,
    enumerate_spinc,
    holonomy,
    spinc_to_json,
)
from .verify import run_suite

__version__ = "0.1.0"
