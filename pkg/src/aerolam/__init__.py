"""Exact symbolic dynamics and verification engine for the aeroplane
lamination map: nine-letter circle coding, capture/mating word families,
finite-depth lamination pullback, and disc-exchange trace replay."""

__version__ = "0.1.0"

from .angles import Angle, OrbitType, angle, conjugate, double, orbit_type
from .coding import (
    Arc,
    Leaf,
    Letter,
    PrecriticalPoint,
    Word,
    admissible,
    full_itinerary,
    itinerary,
    periodic_leaf,
    point_from_word,
    point_in_region,
    region_of,
    upper_arc,
    word_less,
)
from .families import (
    FamilyLevel,
    build_level,
    capture_family,
    check_eau_conditions,
    list_exchangeable_pairs,
    mating_family,
    search_decompositions,
    substitute,
    substituted_words,
)
from .lamination import Chord, Lamination, minor_leaf_of, pullback_lamination
from .exchange import (
    ScenarioConfig,
    build_dprime,
    choose_z,
    scenario_basic,
    scenario_level,
    scenario_mating,
    scenario_mixed,
    seed_component,
    trace_scenario,
)

__all__ = [name for name in dir() if not name.startswith("_")]
