"""Closed-form polarity values for the chain cactus families.

Each family's value is linear in ``h`` with a slope and intercept that
depend on ``k``; gon sizes up to 6 have their own row because triangles,
quadrangles, pentagons and hexagons each carry a correction term, and from
``k = 7`` on only the degree term is left.
"""

from src.core.cactus.census import CactusCensus
from src.core.consts import CENSUS_CYCLE_LENGTHS
from src.core.errors import InvalidSpecError
from src.core.polarity.families import Family, FamilySpec

# (slope, intercept) per small gon size
_SMALL_GON_FORMS: dict[Family, dict[int, tuple[int, int]]] = {
    Family.CHAIN_TYPE_1: {3: (4, -8), 4: (8, -12), 5: (12, -16), 6: (15, -16)},
    Family.CHAIN_TYPE_2: {4: (4, -4), 5: (8, -8), 6: (11, -8)},
    Family.ORTHO_CHAIN: {3: (5, -6), 4: (7, -8), 5: (9, -10), 6: (12, -10)},
    Family.META_CHAIN: {4: (6, -6), 5: (8, -8), 6: (11, -8)},
}

# degree term is (k + slope_shift) * h + intercept
_DEGREE_TERM_FORMS: dict[Family, tuple[int, int]] = {
    Family.CHAIN_TYPE_1: (12, -16),
    Family.CHAIN_TYPE_2: (8, -8),
    Family.ORTHO_CHAIN: (9, -10),
    Family.META_CHAIN: (8, -8),
}


def closed_form(spec: FamilySpec) -> int:
    """
    Polarity index of the chain cactus described by ``spec``.

    Raises:
        InvalidSpecError: ``spec.h < 2``
    """
    _require_chain(spec)
    slope, intercept = _SMALL_GON_FORMS[spec.family].get(
        spec.k, _large_gon_form(spec)
    )
    return slope * spec.h + intercept


def degree_term_closed_form(spec: FamilySpec) -> int:
    """
    Degree term of the chain cactus described by ``spec``.

    Raises:
        InvalidSpecError: ``spec.h < 2``
    """
    _require_chain(spec)
    shift, intercept = _DEGREE_TERM_FORMS[spec.family]
    return (spec.k + shift) * spec.h + intercept


def expected_census(spec: FamilySpec) -> CactusCensus:
    """
    Full census of the chain cactus described by ``spec``.

    Every shared cut vertex adds two outside incidences to each of its two
    gons; every linking bridge adds one to each end gon. Only triangles and
    quadrangles turn those incidences into pendant-pattern copies.

    Raises:
        InvalidSpecError: ``spec.h < 2``
    """
    _require_chain(spec)
    links = spec.h - 1
    incidences = 4 * links if spec.family.shares_cut_vertices else 2 * links
    cycles = {
        length: spec.h if length == spec.k else 0 for length in CENSUS_CYCLE_LENGTHS
    }
    return CactusCensus(
        c3=cycles[3],
        c4=cycles[4],
        c5=cycles[5],
        c6=cycles[6],
        b1=incidences if spec.k == 3 else 0,
        b2=incidences if spec.k == 4 else 0,
        degree_term=degree_term_closed_form(spec),
        cycles_by_length={spec.k: spec.h},
    )


def _large_gon_form(spec: FamilySpec) -> tuple[int, int]:
    shift, intercept = _DEGREE_TERM_FORMS[spec.family]
    return spec.k + shift, intercept


def _require_chain(spec: FamilySpec) -> None:
    if spec.h < 2:
        raise InvalidSpecError(
            f"Closed forms need at least two gons, got h={spec.h} for {spec.label()}"
        )
