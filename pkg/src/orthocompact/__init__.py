"""Combinatorics of simple linear compactifications of odd orthogonal groups."""

from .lattice import RankedContext, Root, RootVec, dominant_below, positive_roots
from .triviality import in_neg_omega, is_trivial, little_brother, satisfies_star
from .orders import lambda_leq, nphi_membership, xi_decompose, xi_membership, xi_step
from .compactify import (SimpleSubset, is_normal, isomorphic, make_simple_subset,
                         morphism_exists, reduce)
from .posets import HassePoset, enum_T2, enum_antichains, hasse, render, theta_I
from .charring import contains, oracle_trivial, tensor, verify_inclusion, weight_mults, weyl_dim
from .errors import OrthoError

__version__ = "0.1.0"
