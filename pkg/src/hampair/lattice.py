"""Lattice parametrization of the Hamiltonian cut set.

The cut values of Cay(Z_k; a, a+1) are prefix sums of multiplicities of
slope-ordered primitive rays in a triangle attached to (k, a).  This
module computes that ray system exactly (integer arithmetic only), the
derived gap profile with its endpoint caps, the sector-filling counts,
and the reflected gap graph diagnostic.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import gcd

from .core import InputError
from .family_one import _check_params

Ray = tuple[int, int]


def cross(u: Ray, v: Ray) -> int:
    """u x v; positive iff u has strictly smaller slope than v."""
    return u[0] * v[1] - u[1] * v[0]


@dataclass(frozen=True)
class LatticeParams:
    k: int
    a: int
    m: int  # order of a in Z_k
    n: int  # index of <a> in Z_k
    e: int  # n(a+1) = e*a (mod k), 0 <= e < m

    @property
    def N(self) -> int:
        return self.k - 1

    def L(self, x: int, y: int) -> int:
        """The linear form whose level set L = k bounds the triangle."""
        return self.m * x + (self.n - self.e) * y


def lattice_params(k: int, a: int) -> LatticeParams:
    a = _check_params(k, a)
    n = gcd(k, a)
    m = k // n
    target = (n * (a + 1)) % k
    e = next(e for e in range(m) if (e * a) % k == target)
    assert m * n == k and lattice_check(LatticeParams(k, a, m, n, e))
    return LatticeParams(k, a, m, n, e)


def lattice_check(p: LatticeParams) -> bool:
    # Both boundary vertices of the triangle lie on the line L = mn.
    return p.L(p.n, 0) == p.m * p.n and p.L(p.e, p.m) == p.m * p.n


def _primitive(v: Ray) -> Ray:
    g = gcd(v[0], v[1])
    return (v[0] // g, v[1] // g)


@dataclass(frozen=True)
class RaySystem:
    params: LatticeParams
    rays: tuple[Ray, ...]  # slope-ordered, boundary rays first and last
    mults: tuple[int, ...]

    @property
    def f(self) -> int:
        return len(self.rays)

    def cut_values(self) -> list[int]:
        """Prefix-sum cut values U_1, ..., U_{f-1}."""
        h = self.mults
        out = [h[0]]
        for q in range(1, self.f - 1):
            out.append(out[-1] + 2 * h[q])
        return out


def ray_system(k: int, a: int) -> RaySystem:
    """Slope-ordered primitive rays of the (k, a) triangle with their
    multiplicities H = floor(N / L)."""
    p = lattice_params(k, a)
    N = p.N
    first: Ray = (1, 0)
    last: Ray = _primitive((p.e, p.m)) if p.e != 0 else (0, 1)

    internal: list[Ray] = []
    # For each height y, x ranges over the open cone between the two
    # boundary rays, cut off by L <= N.
    for y in range(1, p.m + 1):
        # strictly right of `last`: x * last_y > y * last_x
        x_lo = (y * last[0]) // last[1] + 1
        # L(x, y) <= N
        num = N - (p.n - p.e) * y
        if num < p.m * x_lo:
            continue
        x_hi = num // p.m
        for x in range(x_lo, x_hi + 1):
            if gcd(x, y) == 1 and (x, y) != last:
                internal.append((x, y))

    rays = [first] + sorted(internal, key=functools.cmp_to_key(lambda u, v: -cross(u, v))) + [last]
    mults = tuple(N // p.L(x, y) for x, y in rays)
    rs = RaySystem(p, tuple(rays), mults)
    # endpoint identity of the parametrization
    assert rs.cut_values()[-1] + mults[-1] == N, rs
    return rs


def cut_values_from_rays(rs: RaySystem) -> list[int]:
    return rs.cut_values()


def endpoint_caps(k: int, a: int) -> tuple[int, int]:
    """The boundary multiplicities flanking the cut set."""
    a = _check_params(k, a)
    return gcd(k, a) - 1, gcd(k, a + 1) - 1


@dataclass(frozen=True)
class GapProfile:
    values: tuple[int, ...]  # ordered cut values
    N: int
    c_L: int
    c_R: int
    lambdas: tuple[int, ...]  # half-widths of the internal gaps


def gap_profile(Z: list[int] | tuple[int, ...], N: int) -> GapProfile:
    zs = sorted(Z)
    if not zs:
        raise InputError("cut set must be nonempty")
    lambdas = []
    for lo, hi in zip(zs, zs[1:]):
        if (hi - lo) % 2:
            raise AssertionError(f"odd gap {hi - lo} in cut set {zs}")
        lambdas.append((hi - lo) // 2)
    return GapProfile(tuple(zs), N, zs[0], N - zs[-1], tuple(lambdas))


def theta(p: int, q: int) -> int:
    """Number of positive integer pairs (r, s) with r/p + s/q <= 1."""
    if p < 1 or q < 1:
        raise InputError(f"theta needs p, q >= 1, got {(p, q)}")
    return sum((q * (p - r)) // p for r in range(1, p))


def sector_mass(rs: RaySystem, i: int, j: int) -> int:
    """Total multiplicity of the rays strictly between rays i and j
    (0-based indices into the slope order)."""
    if not 0 <= i < j < rs.f:
        raise InputError(f"ray indices out of range: {(i, j)} with f={rs.f}")
    return sum(rs.mults[i + 1 : j])


@dataclass(frozen=True)
class ReflectedGapGraph:
    """Pairs of cut values at the minimal reflected distance.

    A negative edge joins u, v with u + v = N - delta; a positive edge
    joins u, v with u + v = N + delta.  A value u with 2u = N +- delta
    contributes the loop (u, u).  Diagnostic only.
    """

    N: int
    delta: int
    vertices: tuple[int, ...]
    negative_edges: tuple[tuple[int, int], ...]
    positive_edges: tuple[tuple[int, int], ...]


def reflected_gap_graph(Z: list[int] | tuple[int, ...], N: int) -> ReflectedGapGraph:
    zs = sorted(set(Z))
    if not zs:
        raise InputError("cut set must be nonempty")
    delta = min(abs(u + v - N) for u in zs for v in zs)
    neg = tuple(
        (u, v) for u in zs for v in zs if u <= v and u + v == N - delta
    )
    pos = tuple(
        (u, v) for u in zs for v in zs if u <= v and u + v == N + delta
    )
    return ReflectedGapGraph(N, delta, tuple(zs), neg, pos)


@dataclass(frozen=True)
class Cap2Check:
    side: str  # "L" or "R"
    ray: Ray
    alpha: int
    mass: int
    required: int
    ok: bool


def cap2_bound_report(rs: RaySystem) -> list[Cap2Check]:
    """Boundary-cap mass bounds for an endpoint cap of multiplicity two.

    For each internal ray of multiplicity alpha on the side of a cap of
    multiplicity 2, the mass between the cap and the ray must be at
    least alpha - 2, strengthened to alpha - 1 when N = 4*alpha - 2.
    Empty unless one of the caps equals 2.
    """
    N = rs.params.N
    report: list[Cap2Check] = []
    internal = range(1, rs.f - 1)
    if rs.mults[0] == 2:
        for r in internal:
            alpha = rs.mults[r]
            mass = sector_mass(rs, 0, r)
            required = alpha - 1 if N == 4 * alpha - 2 else alpha - 2
            report.append(Cap2Check("L", rs.rays[r], alpha, mass, required, mass >= required))
    if rs.mults[-1] == 2:
        for r in internal:
            alpha = rs.mults[r]
            mass = sector_mass(rs, r, rs.f - 1)
            required = alpha - 1 if N == 4 * alpha - 2 else alpha - 2
            report.append(Cap2Check("R", rs.rays[r], alpha, mass, required, mass >= required))
    return report
