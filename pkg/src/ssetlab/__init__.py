"""Finite simplicial sets: Eilenberg-Zilber normal forms, finite limits and
colimits, lifting problems, fundamental categories and checked certificates
for the counterexample f : Delta^1 -> S."""

from .categories import FiniteCategory, Functor, poset_category
from .certificates import Certificate, Node, Verdict, check_certificate, node
from .hom import count_maps, enumerate_maps
from .homotopy import UnboundedCategoryError, ho_functor, is_cat_iso, is_isofibration, tau1
from .lifting import (
    FillingTrace,
    LiftingProblem,
    fill_inner_horns,
    has_rlp,
    is_inner_fibration,
    is_isomorphism,
    is_levelwise_epi,
    is_quasicategory,
    solve_lifting,
)
from .limits import CapWarning, PreconditionError, arrow_iso_search, iso_search, pullback, pushout_along_mono
from .monotone import MonotoneMap, coface, codegeneracy, epi_mono_factor
from .nerve import nerve_functor, nerve_map, nerve_truncated
from .scenario import build_objects, hand_built_S, paper_certificates, paper_scenario
from .simplicial import (
    SimplexRef,
    SimplicialMap,
    SimplicialSet,
    act,
    bijective_on_vertices,
    boundary,
    compose_maps,
    enumerate_simplices,
    horn,
    horn_inclusion,
    identity_map,
    is_monomorphism,
    standard_simplex,
    validate,
)
from .textformat import Document, ParseError, load, parse, serialize

__version__ = "0.1.0"
