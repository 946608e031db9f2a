"""Transformations between group problems.

multiplicative_homomorphism composes a function with x -> lam*x for a
nonzero integer lam; automorphism restricts lam to actual automorphisms of
the underlying group (+-1 for the circle, units mod q for the cyclic
group).  restrict_to_finite_group samples a function on (1/q)Z and
interpolate_to_infinite_group goes back by piecewise linear interpolation.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Union

from .errors import ParameterError
from .minimality import find_f
from .pwl import (DiscreteFunction, PiecewiseFunction,
                  discrete_from_points_and_values, from_breakpoints_and_limits,
                  from_breakpoints_and_values)
from .rational import common_denominator, to_rational

ZERO = Fraction(0)
ONE = Fraction(1)


def multiplicative_homomorphism(fn: PiecewiseFunction, lam: int) -> PiecewiseFunction:
    """The function x -> fn(lam * x) for a nonzero integer lam.

    Breakpoints are the preimages of the original breakpoints under
    multiplication by lam (reduced to [0, 1]); one-sided limits swap
    orientation when lam is negative.  f maps to the smallest
    representative r in (0, 1) with lam * r = f (mod 1) and value 1.
    """
    if int(lam) != lam or lam == 0:
        raise ParameterError("lam must be a nonzero integer")
    lam = int(lam)
    ts = range(min(0, lam), max(0, lam) + 1)
    pts = sorted({(b + t) / Fraction(lam) for b in fn.breakpoints for t in ts
                  if 0 <= (b + t) / Fraction(lam) <= 1} | {ZERO, ONE})
    triples = []
    for c in pts:
        s = lam * c
        value = fn(s)
        if lam > 0:
            triples.append((value, fn.limit(s, 1), fn.limit(s, -1)))
        else:
            triples.append((value, fn.limit(s, -1), fn.limit(s, 1)))
    new_f = None
    if fn.f is not None:
        cands = sorted(r for r in ((fn.f + t) / Fraction(lam) for t in ts)
                       if 0 < r < 1)
        new_f = next((r for r in cands if fn(lam * r) == 1), None)
    return from_breakpoints_and_limits(pts, triples, f=new_f, merge=True)


def automorphism(fn: Union[PiecewiseFunction, DiscreteFunction],
                 lam: int = -1):
    """Compose with an automorphism x -> lam*x of the underlying group.

    For the infinite model only lam = +-1 are automorphisms and anything
    else is an error; for the cyclic group of order q any lam coprime
    with q works.
    """
    if isinstance(fn, DiscreteFunction):
        if int(lam) != lam or gcd(int(lam), fn.q) != 1:
            raise ParameterError(
                f"lam must be an integer coprime with the group order {fn.q}")
        lam = int(lam) % fn.q
        q = fn.q
        values = tuple(fn.values[(lam * i) % q] for i in range(q)) + (fn.values[0],)
        new_f = None
        if fn.f is not None:
            fi = int(fn.f * q) % q
            inv = pow(lam, -1, q)
            new_f = Fraction((inv * fi) % q, q)
        return DiscreteFunction(q, fn.points, values, new_f)
    if lam not in (1, -1):
        raise ParameterError(
            "only lam = 1 or -1 are automorphisms of the infinite group")
    return multiplicative_homomorphism(fn, lam)


def restrict_to_finite_group(fn: PiecewiseFunction, f=None,
                             oversampling: Optional[int] = None,
                             order: Optional[int] = None) -> DiscreteFunction:
    """Restriction of fn to the cyclic group of the given order.

    The default order is generated by the breakpoints and f; an
    oversampling factor refines it.  Assuming breakpoints and f lie in the
    group and fn is continuous, minimality of the restriction is equivalent
    to minimality of fn; extremality transfers from fn always, and in both
    directions once oversampling >= 3.
    """
    ff = to_rational(f) if f is not None else (
        fn.f if fn.f is not None else find_f(fn))
    if order is not None and oversampling is not None:
        raise ParameterError("give either order or oversampling, not both")
    if order is None:
        order = lcm(common_denominator(fn.breakpoints), ff.denominator)
        if oversampling is not None:
            if oversampling < 1:
                raise ParameterError("oversampling must be a positive integer")
            order *= int(oversampling)
    order = int(order)
    if order < 1 or (ff * order).denominator != 1:
        raise ParameterError(f"order {order} is incompatible with f = {ff}")
    points = [Fraction(i, order) for i in range(order + 1)]
    values = [fn(p) for p in points]
    return discrete_from_points_and_values(points, values, f=ff)


def interpolate_to_infinite_group(fn: DiscreteFunction) -> PiecewiseFunction:
    """Continuous piecewise linear interpolation through the grid values."""
    return from_breakpoints_and_values(fn.points, fn.values, f=fn.f)
