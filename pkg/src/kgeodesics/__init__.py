"""Closed geodesics on hyperbolic pairs of pants: self-intersection numbers,
lengths, the w(m,n,j) construction of k-geodesics, and bounds on s_k and I_k."""

from .constructions import (
    ConstructionParams,
    Variant,
    build_w,
    build_w_prime,
    closed_form_intersection,
    params_for_k,
    word_for_k,
)
from .errors import (
    ConstructionError,
    GeodesicError,
    IndeterminateSeparationError,
    NonHyperbolicError,
    NonPrimitiveError,
    SingleFamilyError,
    TrivialWordError,
    WordSyntaxError,
)
from .geometry import (
    Axis,
    Isometry,
    PantsStructure,
    axes_cross,
    axis_of,
    geodesic_length,
    holonomy,
    lobe_lengths,
    make_structure,
    parse_structure,
    translation_length,
)
from .intersection import IntersectionBreakdown, crossing_sets, h_value, rotations, self_intersection
from .oracle import oracle_count
from .words import CyclicWord, Letter, SyllableForm, canonical_form, cyclic_reduce, is_primitive, parse_word, syllables

__version__ = "0.1.0"
