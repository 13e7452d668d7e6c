"""This module cross-validates the modular path against exact arithmetic on random inputs.

The expected values come from the recurrences of tripoly.fastmod.reference, which evaluate the
exact formulas in O(n^2) vector steps without rationals. ∨ and ∧ are checked through 𝓜:
𝓜(t1 ∨ t2) = 𝓜(t1) 𝓜(t2) and 𝓜(t1) ∧ 𝓜(t2) = 𝓜(t1 t2).

"""

from logging import getLogger
from typing import Dict, NamedTuple

import numpy as np

from tripoly.algebra.polynomial import BasisTag, TaggedPoly
from tripoly.fastmod.mod_poly import ModPoly, moebius_subst, ntt_mul, taylor_shift
from tripoly.fastmod.ntt import DEFAULT_FIELD, PrimeField
from tripoly.fastmod.reference import (
    horner_shift,
    m_by_recurrence,
    moebius_by_recurrence,
    schoolbook_mul,
)
from tripoly.fastmod.transform import FastRoute, vee_mod, wedge_mod
from tripoly.util.time_measurement import TimeMeasurement

logger = getLogger("Tripoly.FastCheck")

OPERATIONS = ("ntt_mul", "taylor_shift", "moebius_subst", "vee_mod", "wedge_mod")
MAX_COEFFICIENT = 10


class FastCheckReport(NamedTuple):
    """Result of a fastcheck run."""

    degree: int
    trials: int
    modulus: int
    route: FastRoute
    failures: Dict[str, int]
    nanoseconds: Dict[str, float]

    @property
    def passed(self) -> bool:
        return not any(self.failures.values())


@TimeMeasurement.measure_time("ntt_mul")
def _timed_mul(left: ModPoly, right: ModPoly) -> ModPoly:
    return ntt_mul(left, right)


@TimeMeasurement.measure_time("taylor_shift")
def _timed_shift(poly: ModPoly, shift: int) -> ModPoly:
    return taylor_shift(poly, shift)


@TimeMeasurement.measure_time("moebius_subst")
def _timed_moebius(poly: ModPoly) -> ModPoly:
    return moebius_subst(poly)


@TimeMeasurement.measure_time("vee_mod")
def _timed_vee(first: ModPoly, second: ModPoly, route: FastRoute) -> ModPoly:
    return vee_mod(first, second, route)


@TimeMeasurement.measure_time("wedge_mod")
def _timed_wedge(first: ModPoly, second: ModPoly, route: FastRoute) -> ModPoly:
    return wedge_mod(first, second, route)


def random_poly(generator: np.random.Generator, tag: BasisTag, degree: int) -> TaggedPoly:
    """Random polynomial of exactly the given degree with small nonnegative coefficients."""
    coefficients = generator.integers(0, MAX_COEFFICIENT, size=degree + 1).tolist()
    coefficients[-1] = int(generator.integers(1, MAX_COEFFICIENT))
    return TaggedPoly(tag, coefficients)


def fastcheck(
    degree: int,
    trials: int,
    seed: int = 0,
    route: FastRoute = FastRoute.CLOSED_FORM,
    field: PrimeField = DEFAULT_FIELD,
) -> FastCheckReport:
    """Compare ntt_mul, taylor_shift, moebius_subst, vee_mod and wedge_mod with exact recurrences.

    Parameters
    ----------
    degree : int
        Degree of the random polynomials.
    trials : int
        Number of random pairs.
    seed : int
        Seed of the random generator, runs are reproducible.
    route : FastRoute
        Route of 𝓜 and 𝓣 modulo p.
    field : PrimeField
        Field of the modular path.

    Returns
    -------
    FastCheckReport
        Failures per operation and mean nanoseconds per modular call.

    """
    generator = np.random.default_rng(seed)
    failures = {name: 0 for name in OPERATIONS}
    was_enabled = TimeMeasurement.TIME_MEASUREMENT_ENABLED
    TimeMeasurement.TIME_MEASUREMENT_ENABLED = True
    TimeMeasurement.reset()
    try:
        for trial in range(trials):
            t1 = ModPoly.from_tagged(random_poly(generator, BasisTag.Y, degree), field)
            t2 = ModPoly.from_tagged(random_poly(generator, BasisTag.Y, degree), field)
            shift = int(generator.integers(-MAX_COEFFICIENT, MAX_COEFFICIENT))
            m1, m2 = m_by_recurrence(t1), m_by_recurrence(t2)
            product = schoolbook_mul(t1, t2)
            # ∨ and ∧ are compared through 𝓜, which is invertible modulo p
            results = {
                "ntt_mul": (_timed_mul(t1, t2), product),
                "taylor_shift": (_timed_shift(t1, shift), horner_shift(t1, shift)),
                "moebius_subst": (_timed_moebius(t1), moebius_by_recurrence(t1)),
                "vee_mod": (
                    m_by_recurrence(_timed_vee(t1, t2, route)),
                    schoolbook_mul(m1, m2),
                ),
                "wedge_mod": (_timed_wedge(m1, m2, route), m_by_recurrence(product)),
            }
            for name, (modular, expected) in results.items():
                if modular != expected:
                    failures[name] += 1
                    logger.warning(f"{name} differs from the exact path in trial {trial}")
        nanoseconds = TimeMeasurement.mean_nanoseconds()
    finally:
        TimeMeasurement.TIME_MEASUREMENT_ENABLED = was_enabled
    return FastCheckReport(degree, trials, field.modulus, route, failures, nanoseconds)
