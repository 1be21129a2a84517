"""Admissible and permissible sets in extended affine Weyl groups.

Exact (rational) root data for A1-A4, B3, C2, C3, D4, E6, E7; finite and
extended affine Weyl group arithmetic; membership tests with certificates;
and indexed enumeration that scales to W(E7).
"""

from .affine_weyl import (
    ExtAffElt,
    aff_bruhat_le,
    aff_from_word,
    aff_make,
    aff_reduced_word,
    aff_simple,
    im_length,
    omega_class,
    omega_rep,
    translation,
    wa_part,
)
from .counterexamples import verify_counterexample
from .enumeration import EnumOptions, enumerate_adm, enumerate_both, enumerate_perm
from .finite_weyl import WeylElt, act, bruhat_le, from_word, matrix_of, min_coset_rep, orbit
from .group_index import BudgetExceeded, build_group_index, get_group_index
from .kr_sets import (
    haines_necessary,
    helam_pair,
    is_admissible_direct,
    is_admissible_helam,
    is_permissible,
)
from .rootdata import RootDatum, alcove_vertices, get_root_datum, in_hull, is_minuscule, pairing

__version__ = "0.1.0"
