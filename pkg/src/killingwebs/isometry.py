"""Isometry groups of the two planes and their induced parameter actions.

Group elements carry either an exact rational point on the rotation/boost
curve (c, s with c^2 +/- s^2 = 1) or a float angle/rapidity; the two
representations never mix.  The action on Killing tensor and Killing vector
parameters is *derived* from the point map by exact polynomial substitution
and re-extraction; the closed-form parameter laws printed elsewhere serve
only as test oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .poly import MultiPoly, Q, poly, var
from .spaces import (DomainError, KTParams, KVParams, Space, extract_kt_params,
                     extract_kv_params, kt_components, kv_components)


@dataclass(frozen=True)
class ExactRotation:
    c: Fraction
    s: Fraction


@dataclass(frozen=True)
class FloatAngle:
    value: float   # radians (Euclidean) or rapidity (Minkowski)


Rotation = Union[ExactRotation, FloatAngle]


@dataclass(frozen=True)
class IsometryElement:
    space: Space
    rot: Rotation
    trans: tuple  # (a, b), Fractions with ExactRotation, floats with FloatAngle

    def __post_init__(self):
        if isinstance(self.rot, ExactRotation):
            c, s = Fraction(self.rot.c), Fraction(self.rot.s)
            if self.space.kind == "euclidean":
                if c * c + s * s != 1:
                    raise DomainError("exact rotation must satisfy c^2 + s^2 = 1")
            else:
                if c * c - s * s != 1 or c < 1:
                    raise DomainError(
                        "exact boost must satisfy c^2 - s^2 = 1 with c >= 1")
            object.__setattr__(self, "trans",
                               tuple(Fraction(v) for v in self.trans))
        else:
            object.__setattr__(self, "trans",
                               tuple(float(v) for v in self.trans))

    @property
    def is_exact(self) -> bool:
        return isinstance(self.rot, ExactRotation)

    def cs(self) -> tuple:
        """The rotation/boost matrix entries (c, s)."""
        if isinstance(self.rot, ExactRotation):
            return self.rot.c, self.rot.s
        if self.space.kind == "euclidean":
            return math.cos(self.rot.value), math.sin(self.rot.value)
        return math.cosh(self.rot.value), math.sinh(self.rot.value)

    def matrix(self):
        c, s = self.cs()
        if self.space.kind == "euclidean":
            return ((c, -s), (s, c))
        return ((c, s), (s, c))

    def inverse_matrix(self):
        c, s = self.cs()
        if self.space.kind == "euclidean":
            return ((c, s), (-s, c))
        return ((c, -s), (-s, c))


def identity(space: Space) -> IsometryElement:
    return IsometryElement(space, ExactRotation(Q(1), Q(0)), (Q(0), Q(0)))


def rotation_from_parameter(space: Space, u: Fraction,
                            trans: tuple = (0, 0)) -> IsometryElement:
    """Exact element from a rational point on the rotation/boost curve.

    Euclidean: the tangent half-angle parametrization of the circle;
    Minkowski: c = (u + 1/u)/2, s = (u - 1/u)/2 sweeps the unit hyperbola
    branch with c >= 1 for u > 0 (u and 1/u give opposite boosts).
    """
    u = Fraction(u)
    if space.kind == "euclidean":
        den = 1 + u * u
        rot = ExactRotation((1 - u * u) / den, 2 * u / den)
    else:
        if u == 0:
            raise DomainError("boost parameter must be nonzero")
        rot = ExactRotation((u + 1 / u) / 2, (u - 1 / u) / 2)
        if rot.c < 1:
            rot = ExactRotation(-rot.c, -rot.s)  # u < 0 lands on the far branch
    return IsometryElement(space, rot, tuple(Fraction(v) for v in trans))


def float_element(space: Space, angle: float,
                  trans: tuple = (0.0, 0.0)) -> IsometryElement:
    return IsometryElement(space, FloatAngle(float(angle)), trans)


def act_point(g: IsometryElement, pt: Sequence) -> tuple:
    (j00, j01), (j10, j11) = g.matrix()
    a, b = g.trans
    u, w = pt
    return (j00 * u + j01 * w + a, j10 * u + j11 * w + b)


def compose(g1: IsometryElement, g2: IsometryElement) -> IsometryElement:
    """Semidirect-product law: act_point(compose(g1, g2)) = g1 after g2."""
    if g1.space is not g2.space:
        raise DomainError("cannot compose elements of different spaces")
    if g1.is_exact != g2.is_exact:
        raise DomainError("cannot mix exact and float representations")
    if g1.is_exact:
        c1, s1 = g1.cs()
        c2, s2 = g2.cs()
        if g1.space.kind == "euclidean":
            rot = ExactRotation(c1 * c2 - s1 * s2, s1 * c2 + c1 * s2)
        else:
            rot = ExactRotation(c1 * c2 + s1 * s2, s1 * c2 + c1 * s2)
    else:
        rot = FloatAngle(g1.rot.value + g2.rot.value)
    (j00, j01), (j10, j11) = g1.matrix()
    a2, b2 = g2.trans
    a1, b1 = g1.trans
    trans = (j00 * a2 + j01 * b2 + a1, j10 * a2 + j11 * b2 + b1)
    return IsometryElement(g1.space, rot, trans)


def inverse(g: IsometryElement) -> IsometryElement:
    c, s = g.cs()
    rot = ExactRotation(c, -s) if g.is_exact else FloatAngle(-g.rot.value)
    (i00, i01), (i10, i11) = g.inverse_matrix()
    a, b = g.trans
    return IsometryElement(g.space, rot, (-(i00 * a + i01 * b),
                                          -(i10 * a + i11 * b)))


# -- parameter actions ------------------------------------------------------

def _transformed_components(space: Space, values, cs, trans):
    """Push the tensor components through the point map.

    New components as polynomials in the (renamed-in-place) new coordinates:
    substitute the inverse point map, then sandwich with the Jacobian.
    """
    c, s = cs
    a, b = trans
    if space.kind == "euclidean":
        j = ((c, -s), (s, c))
        jinv = ((c, s), (-s, c))
    else:
        j = ((c, s), (s, c))
        jinv = ((c, -s), (-s, c))
    u, w = (var(v) for v in space.point_vars)
    old_u = jinv[0][0] * (u - a) + jinv[0][1] * (w - b)
    old_w = jinv[1][0] * (u - a) + jinv[1][1] * (w - b)
    bindings = {space.point_vars[0]: old_u, space.point_vars[1]: old_w}
    k00, k01, k11 = kt_components(space, values)
    k00, k01, k11 = (k.subst(bindings) for k in (k00, k01, k11))
    new00 = j[0][0] * j[0][0] * k00 + 2 * j[0][0] * j[0][1] * k01 \
        + j[0][1] * j[0][1] * k11
    new01 = j[0][0] * j[1][0] * k00 + (j[0][0] * j[1][1] + j[0][1] * j[1][0]) * k01 \
        + j[0][1] * j[1][1] * k11
    new11 = j[1][0] * j[1][0] * k00 + 2 * j[1][0] * j[1][1] * k01 \
        + j[1][1] * j[1][1] * k11
    return (new00, new01, new11)


def act_kt_params(g: IsometryElement, p: KTParams) -> KTParams:
    """Induced action on the six parameters, by exact substitution."""
    if not g.is_exact:
        raise DomainError("exact action requires an exact group element")
    comps = _transformed_components(g.space, p.values, g.cs(), g.trans)
    extracted = extract_kt_params(g.space, comps)
    return KTParams(g.space, tuple(v.constant_value() for v in extracted))


def act_kv_params(g: IsometryElement, p: KVParams) -> KVParams:
    """Induced action on the three Killing vector parameters."""
    if not g.is_exact:
        raise DomainError("exact action requires an exact group element")
    c, s = g.cs()
    a, b = g.trans
    space = g.space
    if space.kind == "euclidean":
        j = ((c, -s), (s, c))
        jinv = ((c, s), (-s, c))
    else:
        j = ((c, s), (s, c))
        jinv = ((c, -s), (-s, c))
    u, w = (var(v) for v in space.point_vars)
    old_u = jinv[0][0] * (u - a) + jinv[0][1] * (w - b)
    old_w = jinv[1][0] * (u - a) + jinv[1][1] * (w - b)
    bindings = {space.point_vars[0]: old_u, space.point_vars[1]: old_w}
    v0, v1 = kv_components(space, p.values)
    v0, v1 = v0.subst(bindings), v1.subst(bindings)
    new0 = j[0][0] * v0 + j[0][1] * v1
    new1 = j[1][0] * v0 + j[1][1] * v1
    extracted = extract_kv_params(space, (new0, new1))
    return KVParams(space, tuple(v.constant_value() for v in extracted))


def reduce_rotation_identity(p: MultiPoly, space: Space) -> MultiPoly:
    """Normal form modulo the curve identity: rewrite c^2 as 1 -+ s^2."""
    rel = poly(1) - var("s") * var("s") if space.kind == "euclidean" \
        else poly(1) + var("s") * var("s")
    if "c" not in p.variables:
        return p
    ci = p.variables.index("c")
    result = MultiPoly.zero()
    for exps, coeff in p.terms.items():
        e = exps[ci]
        base = list(exps)
        base[ci] = e % 2
        mono = MultiPoly(p.variables, {tuple(base): coeff})
        result = result + mono * rel ** (e // 2)
    return result


@lru_cache(maxsize=None)
def derived_kt_action(space: Space) -> tuple[MultiPoly, ...]:
    """The parameter action as six polynomials in the parameter symbols and
    the group coordinates (c, s, a, b), derived symbolically once.

    This single map backs the float-mode action and the oracle comparison
    against the printed closed-form laws.
    """
    values = [var(v) for v in space.param_vars]
    comps = _transformed_components(space, values, (var("c"), var("s")),
                                    (var("a"), var("b")))
    comps = tuple(reduce_rotation_identity(k, space) for k in comps)
    return tuple(extract_kt_params(space, comps))


def act_kt_params_float(g: IsometryElement, p: KTParams) -> tuple[float, ...]:
    """Float-mode parameter action, via the derived symbolic map."""
    c, s = g.cs()
    a, b = g.trans
    assignment = {"c": float(c), "s": float(s), "a": float(a), "b": float(b)}
    assignment.update({name: float(v)
                       for name, v in zip(g.space.param_vars, p.values)})
    return tuple(float(poly_i.evaluate(assignment))
                 for poly_i in derived_kt_action(g.space))


# -- the discrete group of the Minkowski plane ------------------------------

# Signed-permutation images of (a1..a6) under the two generators.
_R1 = ((1, 1), (2, 1), (3, -1), (4, -1), (5, 1), (6, 1))
_R2 = ((2, 1), (1, 1), (3, 1), (5, 1), (4, 1), (6, 1))
_IDENT = tuple((i + 1, 1) for i in range(6))


def _sp_compose(second, first):
    """Apply `first`, then `second` (both signed permutations)."""
    return tuple((first[idx - 1][0], sign * first[idx - 1][1])
                 for idx, sign in second)


@dataclass(frozen=True)
class DiscreteReflection:
    """A word in the spatial reflection R1 and the coordinate swap R2."""
    word: tuple[str, ...]

    def __post_init__(self):
        for letter in self.word:
            if letter not in ("R1", "R2"):
                raise DomainError(f"unknown generator {letter!r}")

    def signed_permutation(self):
        table = {"R1": _R1, "R2": _R2}
        perm = _IDENT
        for letter in self.word:
            perm = _sp_compose(table[letter], perm)
        return perm


def discrete_act_params(r: DiscreteReflection, p: KTParams) -> KTParams:
    if p.space.kind != "minkowski":
        raise DomainError("the discrete group acts on the Minkowski plane")
    perm = r.signed_permutation()
    return KTParams(p.space, tuple(sign * p.values[idx - 1]
                                   for idx, sign in perm))


def discrete_group_elements() -> list[DiscreteReflection]:
    """All distinct elements of the group generated by R1 and R2."""
    seen: dict[tuple, DiscreteReflection] = {}
    frontier = [DiscreteReflection(())]
    while frontier:
        elem = frontier.pop()
        key = elem.signed_permutation()
        if key in seen:
            continue
        seen[key] = elem
        for letter in ("R1", "R2"):
            frontier.append(DiscreteReflection(elem.word + (letter,)))
    return sorted(seen.values(), key=lambda e: (len(e.word), e.word))
