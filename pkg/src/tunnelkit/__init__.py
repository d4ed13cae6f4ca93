"""Exact-arithmetic invariants of torus-knot middle tunnels and of the
tunnels obtained by splitting a torus knot into a twisted band sum.

The library computes, over exact rationals: continued fractions and the
associated 2x2 matrix words of torus knots, middle-tunnel cabling sequences
with their slope invariants, the four splitting constructions with slopes,
binary invariants, depth and classification, the complete coincidence
classification of splittings, and braid-word descriptions of the resulting
1-bridge positions.
"""

from .slopes import (
    Rational,
    SlopeClass,
    SlopePair,
    mod_one,
    reduce,
    render_slope,
    simple_slope,
)
from .torus import (
    AssocMatrix,
    CablingStep,
    NormalizationResult,
    TorusKnot,
    apply_L,
    apply_U,
    associated_matrix,
    continued_fraction,
    diag,
    fold_continued_fraction,
    invariant_slopes,
    iter_normalized,
    middle_tunnel_sequence,
    normalize,
)
from .splitting import (
    BandSum,
    HomologyClass,
    SplittingKind,
    SplittingSpec,
    TunnelDescriptor,
    band_sum,
    binary_bits,
    gamma_slope,
    homology_class,
    level_knots,
    linking_number,
    sigma_slope,
    split,
)
from .classify import (
    CoincidenceVerdict,
    SplittingFamily,
    TunnelIdentification,
    coincident,
    identify_torus_middle,
    multiple_splittings,
)
from .braid import (
    BraidWord,
    concat,
    inverse,
    parse,
    position_template_verified,
    position_word,
    render,
    torus_braid_word,
    twist,
)

__version__ = "0.1.0"
