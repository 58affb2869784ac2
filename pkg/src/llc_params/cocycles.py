"""Cocycles of the tame Weil group valued in a twisted torus.

The tame quotient is generated by a Frobenius lift Fr and a topological
inertia generator s0 subject to Fr s0 Fr^{-1} = s0^q.  A cocycle valued in a
torus T-hat on which Fr acts through a finite-order lattice automorphism w is
pinned down by its values on Fr (free) and on s0 (constrained to the scheme
of fixed points of t -> t^q twisted by w).  On character groups this makes
everything a cokernel:

* fixed scheme of w-twisted q-power map:  coker(w - q id)   on X*,
* twisted centralizer of the Frobenius:   coker(id - w)     on X*,

and the identity component of the fixed scheme (the mu invariant) is its
ell-primary part.  The descriptor assembled here is the complete structure
of one connected component of the parameter space: a torus orbit of rank
rank(ker(id - w)), the stabilizer acting on it, and the finite mu factor.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abgroups import cokernel
from .arith import check_admissible
from .diag import DiagGroup, identity_component, component_group, product, torus
from .errors import DimensionMismatch, InternalError, InvalidArgument, InvalidRank
from .lattice import IntMatrix, rank as matrix_rank
from .rootdata import RootDatum, WeylTwist, center_char_group

POINT_MOD_STABILIZER = "point_mod_S_psi"
TORUS_QUOTIENT = "torus_quotient"


class FrobTorus:
    """A torus with a twisted Frobenius: rank, twist w, size q, working prime ell."""

    __slots__ = ("rank", "twist", "q", "ell", "p")

    def __init__(self, rank: int, twist: WeylTwist, q: int, ell: int):
        if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
            raise InvalidRank(f"rank must be a positive integer, got {rank!r}")
        if twist.rank != rank:
            raise DimensionMismatch(
                f"twist is {twist.rank}x{twist.rank} but the torus has rank {rank}"
            )
        p, _ = check_admissible(q, ell)
        if not twist.matrix.is_unimodular():
            raise InvalidArgument("twist matrix is not unimodular")
        self.rank = rank
        self.twist = twist
        self.q = q
        self.ell = ell
        self.p = p

    def __repr__(self) -> str:
        return f"FrobTorus(rank={self.rank}, q={self.q}, ell={self.ell})"


def _finite_cokernel(matrix: IntMatrix, context: str) -> DiagGroup:
    group = cokernel(matrix)
    if group.free_rank != 0:
        # a unimodular finite-order twist can never have eigenvalue q >= 2,
        # so a positive free rank means the caller fed a non-Frobenius matrix
        raise InternalError(
            f"{context} is infinite; the twist cannot be of finite order",
            hint="check that the twist matrix is a root-permuting automorphism",
        )
    return DiagGroup(group)


def frob_fixed_scheme(ft: FrobTorus) -> DiagGroup:
    """The scheme of inertia values: fixed points of the w-twisted q-power map.

    Dual to coker(w - q id) on characters.  For the GL_n Coxeter twist this
    is mu_{q^n - 1}.
    """
    w = ft.twist.matrix
    return _finite_cokernel(w - ft.q * IntMatrix.identity(ft.rank), "the inertia fixed scheme")


def mu_invariant(ft: FrobTorus) -> DiagGroup:
    """Identity component of the fixed scheme: the ell-primary mu factor."""
    return identity_component(frob_fixed_scheme(ft), ft.ell)


def twisted_centralizer(ft: FrobTorus) -> DiagGroup:
    """Stabilizer of the twisted conjugation action: dual to coker(id - w)."""
    w = ft.twist.matrix
    return DiagGroup(cokernel(IntMatrix.identity(ft.rank) - w))


@dataclass(frozen=True)
class CocycleSpace:
    """Shape of the space of cocycles: a torus times the inertia fixed scheme."""

    free_torus_rank: int
    fixed_scheme: DiagGroup
    component_count: int
    component_shape: DiagGroup

    def to_json(self) -> dict:
        return {
            "freeTorusRank": self.free_torus_rank,
            "fixedScheme": self.fixed_scheme.to_json(),
            "componentCount": self.component_count,
            "componentShape": self.component_shape.to_json(),
        }


def cocycle_space(ft: FrobTorus) -> CocycleSpace:
    """The full cocycle space: Frobenius value free in T, inertia value fixed.

    Components are counted by pi_0 of the fixed scheme over Z-bar_ell; each
    component is a torus of the full rank times the identity component.
    """
    fixed = frob_fixed_scheme(ft)
    count = component_group(fixed, ft.ell).order()
    shape = product(torus(ft.rank), identity_component(fixed, ft.ell))
    return CocycleSpace(ft.rank, fixed, count, shape)


def ellipticity_check(rd: RootDatum, twist: WeylTwist) -> bool:
    """Elliptic means the twisted centralizer is no bigger than the center.

    Concretely: free rank of coker(id - w) equals the free rank of the
    center's character group.
    """
    if twist.rank != rd.rank:
        raise DimensionMismatch(
            f"twist is {twist.rank}x{twist.rank} but the datum has rank {rd.rank}"
        )
    stab = cokernel(IntMatrix.identity(rd.rank) - twist.matrix)
    return stab.free_rank == center_char_group(rd).free_rank


@dataclass(frozen=True)
class ComponentDescriptor:
    """Structure of one connected component of the parameter space.

    The component is a quotient [T_psi / S_psi] x mu: a torus orbit of rank
    ``orbit_torus_rank`` modulo the stabilizer, times the finite mu factor.
    When the center is finite and the parameter elliptic, the orbit torus
    collapses and the component is a point modulo the stabilizer.
    """

    orbit_torus_rank: int
    stabilizer: DiagGroup
    mu: DiagGroup
    elliptic: bool
    product_form: str
    fixed_scheme: DiagGroup

    def to_json(self) -> dict:
        return {
            "orbitTorusRank": self.orbit_torus_rank,
            "stabilizer": self.stabilizer.to_json(),
            "mu": self.mu.to_json(),
            "elliptic": self.elliptic,
            "productForm": self.product_form,
            "fixedScheme": self.fixed_scheme.to_json(),
        }


def component_descriptor(rd: RootDatum, twist: WeylTwist, q: int, ell: int) -> ComponentDescriptor:
    """Assemble the component structure for a datum with a chosen twist.

    >>> from .rootdata import preset, coxeter_twist
    >>> d = component_descriptor(preset("GL", 2), coxeter_twist(preset("GL", 2)), 11, 5)
    >>> d.orbit_torus_rank, d.mu.char_group.invariant_factors
    (1, (5,))
    """
    if twist.rank != rd.rank:
        raise DimensionMismatch(
            f"twist is {twist.rank}x{twist.rank} but the datum has rank {rd.rank}"
        )
    ft = FrobTorus(rd.rank, twist, q, ell)
    fixed = frob_fixed_scheme(ft)
    stabilizer = twisted_centralizer(ft)
    mu = identity_component(fixed, ell)
    orbit_rank = rd.rank - matrix_rank(IntMatrix.identity(rd.rank) - twist.matrix)
    elliptic = ellipticity_check(rd, twist)
    center_finite = center_char_group(rd).free_rank == 0
    form = POINT_MOD_STABILIZER if (elliptic and center_finite) else TORUS_QUOTIENT
    return ComponentDescriptor(orbit_rank, stabilizer, mu, elliptic, form, fixed)
