"""Connectivity preserving multivalued functions between digital images."""
from .functions import (
    MultiFn,
    SingleFn,
    Verdict,
    compose,
    constant_multifn,
    has_strong_continuity,
    has_weak_continuity,
    image_of_set,
    inverse_multifn,
    is_connectivity_preserving,
    is_continuous_single,
    is_cp_bruteforce,
)
from .lattice import (
    Adjacency,
    DigitalImage,
    are_adjacent,
    boundary,
    closed_neighborhood,
    connected_components,
    cut_points,
    is_connected,
    neighborhood,
    sets_adjacent,
)
from .subdivision import (
    ContinuityKind,
    decide_continuity,
    find_witness,
    images_isomorphic,
    induced_multifn,
    project,
    subdivide,
)

__version__ = "0.1.0"
